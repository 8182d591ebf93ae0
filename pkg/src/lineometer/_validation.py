"""Input validation helpers shared by the functional API and the estimators."""

from __future__ import annotations

import numpy as np


def check_length_sequence(x, *, min_length: int = 1, name: str = "length sequence") -> np.ndarray:
    """Coerce ``x`` to a 1-D int64 array of per-word syllable counts.

    Accepts any array-like of integers (or integer-valued floats, as they
    appear after a JSON round trip).  Raises ``ValueError`` when the input
    is not one-dimensional, is shorter than ``min_length``, or contains a
    value below 1.
    """
    arr = np.asarray(x)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size < min_length:
        raise ValueError(f"{name} must contain at least {min_length} value(s), got {arr.size}")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or np.any(arr != np.floor(arr)):
            raise ValueError(f"{name} must contain whole numbers")
        arr = arr.astype(np.int64)
    elif arr.dtype.kind in "ui":
        arr = arr.astype(np.int64)
    else:
        raise ValueError(f"{name} must be numeric, got dtype {arr.dtype}")
    if arr.size and int(arr.min()) < 1:
        raise ValueError(f"{name} values must be >= 1 (every word has at least one syllable)")
    return arr


def check_probability(p: float, name: str = "probability") -> float:
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise ValueError(f"{name} must lie in (0, 1], got {p}")
    return p


def check_window(window, n_max: int) -> tuple[int, int]:
    """Validate an inclusive 1-based index window ``(lo, hi)`` against ``n_max``."""
    lo, hi = int(window[0]), int(window[1])
    if lo < 1 or hi > n_max or hi < lo:
        raise ValueError(f"window must satisfy 1 <= lo <= hi <= {n_max}, got ({lo}, {hi})")
    if hi - lo + 1 < 2:
        raise ValueError("window must span at least two points")
    return lo, hi
