"""Dimensionless model vocabulary: grids, sampled profiles, unit conversion.

Everything downstream of this module works in the dimensionless variables
c = C/C0, x = X/L, t = D0*tau/L^2, j = J*L/(D0*C0). `Dimensionalization` is
the only place physical units appear; solvers never consult it.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import check_positive
from .errors import DomainError

__all__ = [
    "Dimensionalization",
    "Grid1D",
    "ConcentrationProfile",
    "ReleaseProfile",
    "make_grid",
    "mean_square_deviation",
    "write_profile_csv",
    "read_profile_csv",
]


@dataclass(frozen=True)
class Dimensionalization:
    """Conversion between physical and dimensionless quantities.

    Parameters
    ----------
    reference_concentration : float
        C0, mass/volume.
    thickness : float
        Slab thickness L.
    diffusivity : float
        Constant diffusivity D.
    reference_diffusivity : float, optional
        D0. Defaults to D, which makes the dimensionless diffusivity 1,
        the only regime the model equations cover.
    """

    reference_concentration: float
    thickness: float
    diffusivity: float
    reference_diffusivity: float = None

    def __post_init__(self):
        check_positive(self.reference_concentration, "reference_concentration")
        check_positive(self.thickness, "thickness")
        check_positive(self.diffusivity, "diffusivity")
        if self.reference_diffusivity is None:
            object.__setattr__(self, "reference_diffusivity", self.diffusivity)
        check_positive(self.reference_diffusivity, "reference_diffusivity")
        if abs(self.diffusivity / self.reference_diffusivity - 1.0) > 1e-12:
            raise DomainError(
                "dimensionless diffusivity D/D0 must equal 1; "
                "pick reference_diffusivity = diffusivity"
            )

    def time_to_dimensionless(self, tau):
        return self.reference_diffusivity * np.asarray(tau, dtype=float) / self.thickness**2

    def time_from_dimensionless(self, t):
        return np.asarray(t, dtype=float) * self.thickness**2 / self.reference_diffusivity

    def position_to_dimensionless(self, X):
        return np.asarray(X, dtype=float) / self.thickness

    def concentration_to_dimensionless(self, C):
        return np.asarray(C, dtype=float) / self.reference_concentration

    def concentration_from_dimensionless(self, c):
        return np.asarray(c, dtype=float) * self.reference_concentration

    def flux_to_dimensionless(self, J):
        return (np.asarray(J, dtype=float) * self.thickness
                / (self.reference_diffusivity * self.reference_concentration))

    def flux_from_dimensionless(self, j):
        return (np.asarray(j, dtype=float)
                * self.reference_diffusivity * self.reference_concentration / self.thickness)


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid on [a, b] with composite-trapezoid quadrature weights."""

    a: float
    b: float
    n: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def h(self):
        return (self.b - self.a) / (self.n - 1)

    def same_layout(self, other):
        return self.a == other.a and self.b == other.b and self.n == other.n


def make_grid(a, b, n):
    """Build a uniform grid with trapezoid weights.

    The weights integrate samples exactly like the composite trapezoid rule:
    h/2 at the endpoints, h inside.
    """
    a, b = float(a), float(b)
    n = int(n)
    if not (np.isfinite(a) and np.isfinite(b)) or b <= a:
        raise DomainError(f"need finite bounds with b > a, got [{a}, {b}]")
    if n < 2:
        raise DomainError(f"need at least 2 nodes, got {n}")
    nodes = np.linspace(a, b, n)
    h = (b - a) / (n - 1)
    weights = np.full(n, h)
    weights[0] = weights[-1] = h / 2.0
    return Grid1D(a=a, b=b, n=n, nodes=nodes, weights=weights)


def _check_profile(grid, values):
    values = np.asarray(values, dtype=float)
    if values.shape != (grid.n,):
        raise DomainError(
            f"profile needs {grid.n} values to match its grid, got shape {values.shape}"
        )
    if not np.all(np.isfinite(values)):
        raise DomainError("profile values must be finite")
    return values


@dataclass(frozen=True)
class ConcentrationProfile:
    """Initial concentration v(x) sampled on a grid over [0, 1]."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _check_profile(self.grid, self.values))


@dataclass(frozen=True)
class ReleaseProfile:
    """Boundary flux j(t) sampled on a grid over [t_min, T], t_min > 0."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _check_profile(self.grid, self.values))
        if self.grid.a <= 0:
            raise DomainError("release profiles start at t_min > 0")


def mean_square_deviation(achieved, desired):
    """Mean of squared pointwise gaps between two profiles on one grid.

    Both profiles must be sampled on the same grid; the value is
    (1/M) * sum((achieved_i - desired_i)^2) over the M nodes.
    """
    if not achieved.grid.same_layout(desired.grid):
        raise DomainError("profiles are sampled on different grids")
    diff = achieved.values - desired.values
    return float(np.mean(diff * diff))


def _fmt(value):
    return format(float(value), ".17g")


def write_profile_csv(profile, path, columns, header_lines=()):
    """Write a profile as CSV with full double precision.

    Parameters
    ----------
    columns : str
        Header line, either "t,j" or "x,v".
    header_lines : sequence of str
        Provenance comments, written as '# ...' before the header.
    """
    if columns not in ("t,j", "x,v"):
        raise DomainError(f"columns must be 't,j' or 'x,v', got {columns!r}")
    with open(path, "w", newline="\n") as f:
        for line in header_lines:
            f.write(f"# {line}\n")
        f.write(columns + "\n")
        for node, value in zip(profile.grid.nodes, profile.values):
            f.write(f"{_fmt(node)},{_fmt(value)}\n")


def read_profile_csv(path):
    """Read a profile CSV written by `write_profile_csv`.

    Returns (columns, nodes, values); comment lines are skipped. The grid is
    not reconstructed because CSV round-trips do not preserve exact bounds.
    """
    nodes, values = [], []
    columns = None
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if columns is None:
                columns = line
                continue
            left, right = line.split(",")
            nodes.append(float(left))
            values.append(float(right))
    return columns, np.asarray(nodes), np.asarray(values)
