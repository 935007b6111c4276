"""Input checking helpers in the spirit of ``sklearn.utils.validation``."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import _linalg as la
from .exceptions import DimensionMismatch


def check_vector(x, length: int | None = None, *, name: str = "vector") -> tuple:
    """Return ``x`` as an exact rational tuple, checking its length."""
    if isinstance(x, np.ndarray) and x.ndim != 1:
        raise DimensionMismatch(f"{name} must be one-dimensional, got shape {x.shape}")
    v = la.vec(x)
    if length is not None and len(v) != length:
        raise DimensionMismatch(f"{name} has length {len(v)}, expected {length}")
    return v


def check_matrix(a, shape: tuple[int, int] | None = None, *, name: str = "matrix") -> tuple:
    m = la.mat(a)
    got = (len(m), len(m[0]) if m else 0)
    if shape is not None and got != shape:
        raise DimensionMismatch(f"{name} has shape {got}, expected {shape}")
    return m


def check_square(a, n: int | None = None, *, name: str = "matrix") -> tuple:
    m = la.mat(a)
    if any(len(r) != len(m) for r in m):
        raise DimensionMismatch(f"{name} must be square")
    if n is not None and len(m) != n:
        raise DimensionMismatch(f"{name} is {len(m)}x{len(m)}, expected {n}x{n}")
    return m


def as_float_array(x, ndim: int | None = None, *, name: str = "array") -> np.ndarray:
    arr = np.asarray([[float(v) for v in row] for row in x] if ndim == 2 else [float(v) for v in x])
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def is_exact(values: Sequence) -> bool:
    """True when every scalar in a (possibly nested) sequence is an int or Fraction."""
    from fractions import Fraction

    stack = list(values) if not isinstance(values, np.ndarray) else list(values.ravel())
    while stack:
        v = stack.pop()
        if isinstance(v, (list, tuple, np.ndarray)):
            stack.extend(v.ravel() if isinstance(v, np.ndarray) else v)
        elif isinstance(v, bool) or not isinstance(v, (int, str, Fraction, np.integer)):
            return False
    return True
