"""
Uniform grids on the period [0, 2*pi).

Two node families are supported, both with an odd number of nodes N:

* ``GridKind.TYPE0``: t_j = 2*pi*(j - 1)/N, starting at 0;
* ``GridKind.TYPE1``: t_j = pi*(2*j - 1)/N, the midpoints of the TYPE0 intervals.

Node indices are 1-based in every public function of this package.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import EvenOrTooSmallN, IndexOutOfRange, NonFiniteInput

TWO_PI = 2.0 * np.pi


class GridKind(enum.IntEnum):
    TYPE0 = 0
    TYPE1 = 1


@dataclass(frozen=True)
class UniformGrid:
    """
    N equally spaced nodes on [0, 2*pi).

    Use :func:`make_grid` rather than the constructor directly.
    """

    kind: GridKind
    n_nodes: int
    nodes: np.ndarray = field(repr=False, compare=False)

    @property
    def spacing(self) -> float:
        return TWO_PI / self.n_nodes

    @property
    def order(self) -> int:
        """Harmonic order n = (N - 1)/2 of the interpolating polynomials."""
        return (self.n_nodes - 1) // 2

    def node(self, j: int) -> float:
        """Return node t_j (1-based)."""
        check_index(j, self.n_nodes)
        return float(self.nodes[j - 1])

    def same_as(self, other: "UniformGrid") -> bool:
        return self.kind == other.kind and self.n_nodes == other.n_nodes


def check_index(j, N, what="node index"):
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)) or not 1 <= j <= N:
        raise IndexOutOfRange(f"{what} must be an integer in [1, {N}], got {j!r}")


def make_grid(kind, N) -> UniformGrid:
    """
    Build a uniform grid of the given kind with N nodes.

    Parameters
    ----------
    kind : GridKind or int
        0 for nodes starting at zero, 1 for the half-step shifted nodes.
    N : int
        Number of nodes; must be odd and at least 3.

    Returns
    -------
    grid : UniformGrid
    """
    kind = GridKind(kind)
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < 3 or N % 2 == 0:
        raise EvenOrTooSmallN(f"N must be an odd integer >= 3, got {N!r}")
    N = int(N)
    j = np.arange(1, N + 1, dtype=float)
    if kind is GridKind.TYPE0:
        nodes = TWO_PI * (j - 1) / N
    else:
        nodes = np.pi * (2 * j - 1) / N
    nodes.setflags(write=False)
    return UniformGrid(kind, N, nodes)


def wrap_angle(t):
    """
    Reduce angle(s) to [0, 2*pi).

    Accepts a scalar or an array; returns the same shape.
    """
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("angle must be finite")
    w = np.mod(arr, TWO_PI)
    # np.mod can round a tiny negative input up to exactly 2*pi
    w = np.where(w >= TWO_PI, 0.0, w)
    if np.ndim(t) == 0:
        return float(w)
    return w

