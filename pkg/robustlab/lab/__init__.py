"""Numerical verification of conjunction-operator properties"""

from robustlab.lab.gradients import GradientProbe, numeric_partial, one_sided_partials, probe_partial
from robustlab.lab.properties import (
    LabConfig, check_boundary_derivative, check_equal_point_gradient,
    check_idempotence_commutativity, check_limit_behavior, check_minmax_bounds,
    check_non_monotone_lift, check_origin_nonsmoothness, check_scale_invariance,
    check_shadow_lifting, check_soundness, check_weak_smoothness, conjunction_curves,
    run_all_checks, write_curves_csv,
)
from robustlab.lab.random_formulas import random_formula, random_trace
from robustlab.lab.report import (
    PropertyReport, format_report_details, format_report_table, write_reports_csv,
)

__all__ = [
    "GradientProbe", "LabConfig", "PropertyReport", "check_boundary_derivative",
    "check_equal_point_gradient", "check_idempotence_commutativity", "check_limit_behavior",
    "check_minmax_bounds", "check_non_monotone_lift", "check_origin_nonsmoothness",
    "check_scale_invariance", "check_shadow_lifting", "check_soundness",
    "check_weak_smoothness", "conjunction_curves", "format_report_details",
    "format_report_table", "numeric_partial", "one_sided_partials", "probe_partial",
    "random_formula", "random_trace", "run_all_checks", "write_curves_csv",
    "write_reports_csv",
]
