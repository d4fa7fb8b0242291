"""
Interpolants and least-squares approximants in fundamental form.

Every approximant is ``sum_j f_j * b_j(t)`` for one of the four basis
families, so it depends linearly on the sampled values f_j. The discrete
Fourier route (coefficients and partial sums) is provided alongside.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatch, NonFiniteInput
from .grids import UniformGrid, wrap_angle
from .kernels import (
    SplineShape,
    check_budget,
    phi_ls_eval,
    spline_series,
    tm_eval,
    ts_eval,
    ts_ls_eval,
)


@dataclass(frozen=True)
class SampleSet:
    """Function values f_1..f_N at the nodes of ``grid``."""

    grid: UniformGrid
    values: np.ndarray = field(compare=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        if values.shape != (self.grid.n_nodes,):
            raise ValueError(f"expected {self.grid.n_nodes} sample values, got {values.size}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteInput("sample values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, grid, f):
        """Sample the vectorized callable ``f`` at the grid nodes."""
        return cls(grid, np.asarray(f(grid.nodes), dtype=float))


@dataclass(frozen=True)
class FourierCoeffs:
    """
    Coefficients of a0/2 + sum_k (a_k cos kt + b_k sin kt).

    ``a`` and ``b`` hold harmonics 1..order.
    """

    a0: float
    a: np.ndarray = field(compare=False)
    b: np.ndarray = field(compare=False)

    def __post_init__(self):
        a = np.array(self.a, dtype=float).reshape(-1)
        b = np.array(self.b, dtype=float).reshape(-1)
        if a.shape != b.shape:
            raise ValueError("a and b must have the same length")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a0", float(self.a0))

    @property
    def order(self) -> int:
        return len(self.a)

    def truncated(self, q):
        check_budget(q, self.order)
        return FourierCoeffs(self.a0, self.a[:q], self.b[:q])


# -- basis specifications ----------------------------------------------------


@dataclass(frozen=True)
class InterpPoly:
    name = "interp-poly"

    def validate(self, grid):
        pass

    def kernel(self, grid, j, t):
        return tm_eval(grid, j, t)

    def label(self, j):
        return f"tm_{j}"


@dataclass(frozen=True)
class InterpSpline:
    shape: SplineShape
    name = "interp-spline"

    def validate(self, grid):
        # computes every H_k, so a degenerate denominator fails at build time
        spline_series(grid.kind, grid.n_nodes, self.shape.r, self.shape.truncation, grid.order)

    def kernel(self, grid, j, t):
        return ts_eval(grid, j, self.shape, t)

    def label(self, j):
        return f"ts_{j}_r{self.shape.r}"


@dataclass(frozen=True)
class LSPoly:
    q: int
    name = "ls-poly"

    def validate(self, grid):
        check_budget(self.q, grid.order)

    def kernel(self, grid, j, t):
        return phi_ls_eval(grid, j, self.q, t)

    def label(self, j):
        return f"phi_{j}_q{self.q}"


@dataclass(frozen=True)
class LSSpline:
    q: int
    shape: SplineShape
    name = "ls-spline"

    def validate(self, grid):
        check_budget(self.q, grid.order)
        spline_series(grid.kind, grid.n_nodes, self.shape.r, self.shape.truncation, self.q)

    def kernel(self, grid, j, t):
        return ts_ls_eval(grid, j, self.q, self.shape, t)

    def label(self, j):
        return f"ts_{j}_q{self.q}_r{self.shape.r}"


BasisSpec = InterpPoly | InterpSpline | LSPoly | LSSpline


def basis_matrix(grid, basis, t):
    """Matrix B with B[i, j-1] = b_j(t_i) for a 1-D array of angles t."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    basis.validate(grid)
    return np.column_stack([basis.kernel(grid, j, t) for j in range(1, grid.n_nodes + 1)])


# -- approximants ---------------------------------------------------------------


@dataclass(frozen=True)
class Approximant:
    samples: SampleSet
    basis: BasisSpec

    @property
    def grid(self):
        return self.samples.grid

    def __call__(self, t):
        return evaluate(self, t)


def build(samples: SampleSet, basis: BasisSpec) -> Approximant:
    """
    Build the approximant sum_j f_j * b_j(t).

    Raises ``BudgetTooLarge`` or ``DegenerateDenominator`` when the basis
    parameters do not fit the grid.
    """
    basis.validate(samples.grid)
    return Approximant(samples, basis)


def evaluate(approx: Approximant, t):
    """Evaluate the approximant at scalar or array t (any real angle)."""
    w = wrap_angle(t)
    values = basis_matrix(approx.grid, approx.basis, np.ravel(w)) @ approx.samples.values
    if np.ndim(t) == 0:
        return float(values[0])
    return values.reshape(np.shape(t))


def fourier_coeffs(samples: SampleSet) -> FourierCoeffs:
    """
    Discrete Fourier coefficients on the sample grid.

    a0 = (2/N) sum f_j, a_k = (2/N) sum f_j cos(k t_j), b_k = (2/N) sum f_j sin(k t_j)
    for k = 1..n.
    """
    grid, f = samples.grid, samples.values
    N = grid.n_nodes
    k = np.arange(1, grid.order + 1)
    angles = np.outer(k, grid.nodes)
    return FourierCoeffs(
        a0=2.0 / N * f.sum(),
        a=2.0 / N * (np.cos(angles) @ f),
        b=2.0 / N * (np.sin(angles) @ f),
    )


def partial_sum_eval(coeffs: FourierCoeffs, q: int, t):
    """a0/2 + sum_{k<=q} (a_k cos kt + b_k sin kt)."""
    check_budget(q, coeffs.order)
    tt = np.asarray(wrap_angle(t), dtype=float)
    k = np.arange(1, q + 1)
    angles = np.multiply.outer(tt, k)
    value = coeffs.a0 / 2 + np.cos(angles) @ coeffs.a[:q] + np.sin(angles) @ coeffs.b[:q]
    return float(value) if np.ndim(t) == 0 else value


def residual_sse(samples: SampleSet, approx: Approximant) -> float:
    """Sum of squared residuals f_j - approx(t_j) over the grid nodes."""
    if not samples.grid.same_as(approx.grid):
        raise GridMismatch(
            f"samples on kind={int(samples.grid.kind)}, N={samples.grid.n_nodes}; "
            f"approximant on kind={int(approx.grid.kind)}, N={approx.grid.n_nodes}"
        )
    resid = samples.values - evaluate(approx, samples.grid.nodes)
    return float(resid @ resid)
