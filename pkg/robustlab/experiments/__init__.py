"""Case-study experiments: analytic optimum, PI2 sweeps and CSV exports"""

from robustlab.experiments.casestudy import (
    ConfigurationSummary, ExperimentPlan, ExperimentSummary, RunOutcome, plan_from_profile,
    run_casestudy, summarize,
)
from robustlab.experiments.export import export_curves, write_summary
from robustlab.experiments.optimum import OptimalPlan, analytic_optimum, facing_points, plan_cost

__all__ = [
    "ConfigurationSummary", "ExperimentPlan", "ExperimentSummary", "OptimalPlan", "RunOutcome",
    "analytic_optimum", "export_curves", "facing_points", "plan_cost", "plan_from_profile",
    "run_casestudy", "summarize", "write_summary",
]
