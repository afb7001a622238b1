"""Input validation helpers used by the estimator and the low-level API."""

import numpy as np

from .errors import DomainError


def as_vector(x, name="x"):
    """Coerce to a 1-d float array, rejecting non-finite entries."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise DomainError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr


def as_matrix(A, name="A"):
    """Coerce to a 2-d float array, rejecting non-finite entries."""
    arr = np.asarray(A, dtype=float)
    if arr.ndim != 2:
        raise DomainError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise DomainError(f"{name} must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr


def check_positive(value, name):
    if not np.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be strictly positive, got {value!r}")
    return float(value)
