"""
Independent numerical checks for the fundamental bases.

Nothing here relies on the orthogonality being verified: Gram matrices are
assembled by brute-force quadrature or node sums, and the least-squares
oracle solves dense normal equations.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .approximants import FourierCoeffs, SampleSet, basis_matrix
from .errors import SingularSystem
from .grids import TWO_PI, UniformGrid, check_index
from .kernels import SplineShape, check_budget, ts_eval

DEFAULT_QUADRATURE_POINTS = 4096


class Normalization(enum.Enum):
    CONTINUOUS_SCALED = "continuous"
    DISCRETE = "discrete"


@dataclass(frozen=True)
class GramMatrix:
    entries: np.ndarray = field(compare=False)
    normalization: Normalization

    def deviation_from_identity(self) -> float:
        """max |G - I| over all entries."""
        return float(np.max(np.abs(self.entries - np.eye(len(self.entries)))))

    def max_offdiagonal(self) -> float:
        off = self.entries - np.diag(np.diag(self.entries))
        return float(np.max(np.abs(off)))


def periodic_quadrature(f, num_points=DEFAULT_QUADRATURE_POINTS):
    """
    Rectangle rule (2*pi/P) * sum_{i<P} f(2*pi*i/P) over one period.

    ``f`` is called once with the array of P abscissae and may return extra
    trailing dimensions; the sum is taken along the first axis. The rule is
    exact for trigonometric polynomials of order below P.
    """
    if num_points < 16:
        raise ValueError(f"num_points must be >= 16, got {num_points}")
    t = TWO_PI * np.arange(num_points) / num_points
    values = np.asarray(f(t), dtype=float)
    return TWO_PI / num_points * values.sum(axis=0)


def continuous_gram(grid: UniformGrid, basis, num_points=DEFAULT_QUADRATURE_POINTS) -> GramMatrix:
    """
    Scaled continuous Gram matrix (N/2pi) * integral b_i b_j dt.

    For spline bases the quadrature is only exact when ``num_points``
    exceeds twice the highest alias frequency, 2*(M*N + n).
    """

    def products(t):
        B = basis_matrix(grid, basis, t)
        return B[:, :, None] * B[:, None, :]

    entries = grid.n_nodes / TWO_PI * periodic_quadrature(products, num_points)
    return GramMatrix(entries, Normalization.CONTINUOUS_SCALED)


def discrete_gram(grid: UniformGrid, basis) -> GramMatrix:
    """Gram matrix sum_k b_i(t_k) b_j(t_k) over the grid nodes."""
    B = basis_matrix(grid, basis, grid.nodes)
    return GramMatrix(B.T @ B, Normalization.DISCRETE)


def ls_oracle(samples: SampleSet, q: int) -> FourierCoeffs:
    """
    Least-squares trigonometric polynomial of order q by normal equations.

    Fits c_0 + sum_k (a_k cos kt + b_k sin kt) to the samples by solving the
    dense (2q+1)x(2q+1) system A^T A x = A^T f with LU and partial pivoting,
    deliberately ignoring the discrete orthogonality of the columns. The
    result uses the a0/2 convention of ``FourierCoeffs``.
    """
    grid = samples.grid
    check_budget(q, grid.order)
    t = grid.nodes
    k = np.arange(1, q + 1)
    A = np.column_stack([np.ones_like(t), np.cos(np.outer(t, k)), np.sin(np.outer(t, k))])
    normal = A.T @ A
    if np.linalg.cond(normal) > 1e12:
        raise SingularSystem(f"normal equations are singular for q={q}, N={grid.n_nodes}")
    try:
        x = np.linalg.solve(normal, A.T @ samples.values)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc
    return FourierCoeffs(a0=2.0 * x[0], a=x[1:q + 1], b=x[q + 1:])


def collinearity_defect(grid: UniformGrid, j: int, shape: SplineShape, interval: int, kernel=None) -> float:
    """
    Deviation of a basis function from a straight chord on one grid interval.

    The function is sampled at the quarter, half and three-quarter points of
    the interval [t_interval, t_interval + h]; the result is
    |mid - (first + last)/2|. ``kernel`` replaces ts_j when given (any
    callable of t).
    """
    check_index(interval, grid.n_nodes, "interval index")
    if kernel is None:
        check_index(j, grid.n_nodes)

        def kernel(t):
            return ts_eval(grid, j, shape, t)

    h = grid.spacing
    start = grid.nodes[interval - 1]
    first, mid, last = np.asarray(kernel(start + h * np.array([0.25, 0.5, 0.75])), dtype=float)
    return float(abs(mid - 0.5 * (first + last)))
