"""First-kind integral kernels, trapezoid collocation, and noise injection.

Three kernels are supported:

* ``drug_flux`` -- the boundary-flux kernel of the sealed-slab diffusion
  problem, an alternating eigenmode series
  k(x, t) = sum_k (-1)^k a_k exp(-a_k^2 t) cos(a_k x) with a_k = (k+1/2)*pi.
  The series diverges at t = 0, so observation grids must start at t > 0.
* ``gradient_exp`` -- (1 + t*s) * exp(t*s).
* ``plain_exp``    -- exp(t*s).

`assemble` folds the quadrature weights into the matrix columns, so the
resulting dense system A @ v approximates the integral operator applied to
the samples v directly.
"""

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._validation import as_vector
from .errors import DomainError, TruncationBudgetError
from .model import Grid1D, make_grid

__all__ = [
    "KernelKind",
    "KernelSpec",
    "NoiseSpec",
    "NoiseDistribution",
    "DiscreteSystem",
    "eigenrate",
    "kernel_value",
    "assemble",
    "exact_rhs",
    "contaminate",
    "write_system_csv",
]

DEFAULT_SERIES_TOLERANCE = 1e-12
DEFAULT_MAX_TERMS = 200


class KernelKind(enum.Enum):
    DRUG_FLUX = "drug_flux"
    GRADIENT_EXP = "gradient_exp"
    PLAIN_EXP = "plain_exp"


class NoiseDistribution(enum.Enum):
    UNIFORM_UNIT = "uniform_unit"          # delta * U[0, 1], one-sided
    UNIFORM_SYMMETRIC = "uniform_symmetric"  # delta * U[-1, 1]


@dataclass(frozen=True)
class KernelSpec:
    """Kernel choice plus series-truncation control for ``drug_flux``."""

    kind: KernelKind
    series_tolerance: float = DEFAULT_SERIES_TOLERANCE
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if self.series_tolerance <= 0:
            raise DomainError("series_tolerance must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


@dataclass(frozen=True)
class NoiseSpec:
    """Additive uniform noise with a fixed seed for reproducible draws."""

    delta: float = 0.0
    seed: int = 0
    distribution: NoiseDistribution = NoiseDistribution.UNIFORM_UNIT

    def __post_init__(self):
        if self.delta < 0:
            raise DomainError("delta must be non-negative")


@dataclass(frozen=True)
class DiscreteSystem:
    """Dense collocation system A X = b with quadrature folded into A."""

    matrix: np.ndarray
    rhs: Optional[np.ndarray]
    source_grid: Grid1D
    obs_grid: Grid1D
    kernel: KernelSpec


def eigenrate(k):
    """Decay rates a_k = (k + 1/2) * pi of the sealed-slab eigenmodes."""
    return (np.asarray(k, dtype=float) + 0.5) * np.pi


def _series_terms(t, tolerance, max_terms):
    """Number of eigenmode terms kept at time t under the envelope rule.

    Terms are kept while the envelope a_k * exp(-a_k^2 t) is >= tolerance;
    past the envelope's peak the tail is summable geometrically, so the
    truncation error is bounded by a small multiple of the tolerance.
    """
    if t <= 0:
        raise DomainError(f"drug-flux series needs t > 0, got t={t}")
    rates = eigenrate(np.arange(max_terms + 1))
    envelope = rates * np.exp(-rates * rates * t)
    below = envelope < tolerance
    if not below.any():
        raise TruncationBudgetError(
            f"series budget of {max_terms} terms exhausted at t={t}; "
            f"achieved envelope bound {envelope[-1]:.3e}",
            achieved_bound=envelope[-1],
        )
    k = int(np.argmax(below))
    if k == 0:
        # tolerance above the whole envelope; keep the leading term anyway
        return 1
    return k


def _drug_flux_row(x, t, spec):
    """Vector of truncated kernel values k(x_j, t) for one observation time."""
    n_terms = _series_terms(t, spec.series_tolerance, spec.max_terms)
    rates = eigenrate(np.arange(n_terms))
    coeff = np.where(np.arange(n_terms) % 2 == 0, 1.0, -1.0) * rates * np.exp(-rates * rates * t)
    return coeff @ np.cos(np.outer(rates, x))


def kernel_value(spec, x_or_s, t):
    """Evaluate the kernel at a single point.

    For ``drug_flux`` the series is truncated by the envelope rule of
    `KernelSpec`; t must be positive and x must lie in [0, 1].
    """
    x = float(x_or_s)
    t = float(t)
    if spec.kind is KernelKind.GRADIENT_EXP:
        return (1.0 + t * x) * np.exp(t * x)
    if spec.kind is KernelKind.PLAIN_EXP:
        return float(np.exp(t * x))
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"drug-flux kernel needs x in [0, 1], got {x}")
    return float(_drug_flux_row(np.array([x]), t, spec)[0])


def assemble(kernel, source_grid, obs_grid):
    """Collocate the integral operator on the grids by the trapezoid rule.

    A[i, j] = prefactor * k(x_j, t_i) * w_j, with prefactor 2 for the
    drug-flux kernel (its defining equation carries a leading factor 2)
    and 1 for the exponential test kernels. The returned system has no
    right-hand side attached.
    """
    x = source_grid.nodes
    t = obs_grid.nodes
    w = source_grid.weights
    if kernel.kind is KernelKind.DRUG_FLUX:
        if obs_grid.a <= 0:
            raise DomainError(
                "drug-flux kernel diverges at t = 0; observation grid must start at t > 0"
            )
        A = np.empty((obs_grid.n, source_grid.n))
        for i, ti in enumerate(t):
            A[i, :] = 2.0 * _drug_flux_row(x, ti, kernel) * w
    else:
        T, S = np.meshgrid(t, x, indexing="ij")
        if kernel.kind is KernelKind.GRADIENT_EXP:
            A = (1.0 + T * S) * np.exp(T * S) * w[None, :]
        else:
            A = np.exp(T * S) * w[None, :]
    return DiscreteSystem(matrix=A, rhs=None, source_grid=source_grid,
                          obs_grid=obs_grid, kernel=kernel)


def exact_rhs(example, obs_grid):
    """Closed-form right-hand sides of the two exponential test problems.

    Example 1: y(t) = e^t            (solution x(s) = 1)
    Example 2: y(t) = (e^{t+2}-1)/(t+2)   (solution x(s) = e^{2s})
    """
    t = obs_grid.nodes
    if example == 1:
        return np.exp(t)
    if example == 2:
        return (np.exp(t + 2.0) - 1.0) / (t + 2.0)
    raise DomainError(f"example must be 1 or 2, got {example!r}")


def contaminate(b, noise):
    """Add seeded uniform noise: b + delta * u with u ~ U[0,1] or U[-1,1]."""
    b = as_vector(b, "b")
    rng = np.random.default_rng(noise.seed)
    if noise.distribution is NoiseDistribution.UNIFORM_UNIT:
        u = rng.uniform(0.0, 1.0, b.shape[0])
    else:
        u = rng.uniform(-1.0, 1.0, b.shape[0])
    return b + noise.delta * u


def write_system_csv(system, matrix_path, rhs_path=None, header_lines=()):
    """Debug dump: matrix as CSV (one row per line) and optional rhs CSV."""
    def emit(path, rows):
        with open(path, "w", newline="\n") as f:
            for line in header_lines:
                f.write(f"# {line}\n")
            for row in rows:
                f.write(",".join(format(v, ".17g") for v in np.atleast_1d(row)) + "\n")

    emit(matrix_path, system.matrix)
    if rhs_path is not None:
        if system.rhs is None:
            raise DomainError("system has no right-hand side to dump")
        emit(rhs_path, system.rhs[:, None])
