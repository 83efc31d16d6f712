"""Boolean and quantitative STL semantics"""

from robustlab.semantics.boolean import eval_boolean, satisfaction_signal
from robustlab.semantics.robustness import (
    Annotation, RobustnessResult, evaluation_index, robustness, robustness_signal,
)

__all__ = [
    "Annotation", "RobustnessResult", "eval_boolean", "evaluation_index", "robustness",
    "robustness_signal", "satisfaction_signal",
]
