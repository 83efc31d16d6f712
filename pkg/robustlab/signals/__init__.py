"""Sampled signal container, CSV I/O and time-window index arithmetic"""

from robustlab.signals.trace import (
    Trace, load_trace, predicate_signal, save_trace, window_indices, window_offsets,
    window_rows,
)

__all__ = [
    "Trace", "load_trace", "predicate_signal", "save_trace", "window_indices",
    "window_offsets", "window_rows",
]
