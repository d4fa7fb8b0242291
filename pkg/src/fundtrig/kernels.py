"""
Fundamental (cardinal) trigonometric bases on uniform grids.

Four families are evaluated here, all as functions of the phase t - t_j:

``tm_eval``
    interpolation polynomial of order n = (N - 1)/2 (normalized Dirichlet kernel);
``phi_ls_eval``
    least-squares polynomial keeping only q <= n harmonics;
``ts_eval``
    interpolation spline, the polynomial with every cosine replaced by the
    normalized alias series C_k / H_k built from the attenuation factors
    ``sigma_factor``;
``ts_ls_eval``
    least-squares spline, the spline truncated to q harmonics.

The infinite alias series are truncated after ``SplineShape.truncation``
terms. The numerator and the normalizing constant use the same truncation,
so node values are exact for every truncation length.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BudgetTooLarge, DegenerateDenominator, IndexOutOfRange
from .grids import GridKind, UniformGrid, check_index, wrap_angle

DEFAULT_TRUNCATION = 1000
DEGENERATE_H = 1e-12

# max number of cos() evaluations held in memory at once
_CHUNK = 1 << 20


@dataclass(frozen=True)
class SplineShape:
    """Smoothness ``r`` and alias-series truncation length of a spline."""

    r: int
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        for name in ("r", "truncation"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 1:
                raise ValueError(f"SplineShape.{name} must be a positive integer, got {v!r}")


def check_budget(q, n):
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise TypeError(f"harmonic budget q must be an integer, got {q!r}")
    if q < 0:
        raise ValueError(f"harmonic budget q must be >= 0, got {q}")
    if q > n:
        raise BudgetTooLarge(f"harmonic budget q={q} exceeds the order n={n} of the grid")


def _phase(grid, j, t):
    check_index(j, grid.n_nodes)
    return wrap_angle(np.asarray(t, dtype=float) - grid.nodes[j - 1])


def _cosine_sum(freqs, weights, s):
    """sum_p weights[p] * cos(freqs[p] * s), elementwise in s."""
    s = np.asarray(s, dtype=float)
    flat = s.reshape(-1)
    out = np.empty(flat.shape)
    if len(freqs) == 0:
        out[:] = 0.0
        return out.reshape(s.shape)
    step = max(1, _CHUNK // len(freqs))
    for start in range(0, len(flat), step):
        block = flat[start:start + step]
        out[start:start + step] = np.cos(np.outer(block, freqs)) @ weights
    return out.reshape(s.shape)


def _scalar_or_array(value, t):
    return float(value) if np.ndim(t) == 0 else value


def tm_eval(grid: UniformGrid, k: int, t):
    """
    Fundamental interpolation polynomial tm_k at t.

    tm_k(t) = (1 + 2 * sum_{i=1..n} cos(i*(t - t_k))) / N, which equals 1 at
    node k and 0 at every other node.
    """
    return phi_ls_eval(grid, k, grid.order, t)


def phi_ls_eval(grid: UniformGrid, j: int, q: int, t):
    """
    Fundamental least-squares polynomial with q harmonics.

    Parameters
    ----------
    grid : UniformGrid
    j : int
        Node index, 1-based.
    q : int
        Number of harmonics kept, 0 <= q <= n. ``q == n`` gives ``tm_eval``.
    t : float or array_like
        Evaluation angle(s) in radians.
    """
    check_budget(q, grid.order)
    s = _phase(grid, j, t)
    harmonics = np.arange(1, q + 1, dtype=float)
    value = (1.0 + 2.0 * _cosine_sum(harmonics, np.ones(q), s)) / grid.n_nodes
    return _scalar_or_array(value, t)


def sigma_factor(k, r, N):
    """
    Attenuation factor [sin(pi*k/N) / k] ** (1 + r).

    The exponent is applied as an integer power so the sign of the base is
    kept when 1 + r is odd. ``k`` may be an integer array.
    """
    k = np.asarray(k)
    base = np.sin(np.pi * k / N) / k
    value = base ** int(1 + r)
    return float(value) if value.ndim == 0 else value


def _check_harmonic(k, n):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= n:
        raise IndexOutOfRange(f"harmonic k must be an integer in [1, {n}], got {k!r}")


@lru_cache(maxsize=None)
def _alias_terms(kind, k, r, M, N):
    """Frequencies and signed weights of the alias series for harmonic k."""
    m = np.arange(1, M + 1)
    sign = (-1.0) ** (m * int(kind))
    freqs = np.concatenate(([k], m * N + k, m * N - k))
    weights = np.concatenate(
        ([sigma_factor(k, r, N)], sign * sigma_factor(m * N + k, r, N), sign * sigma_factor(m * N - k, r, N))
    )
    freqs = freqs.astype(float)
    freqs.setflags(write=False)
    weights.setflags(write=False)
    return freqs, weights


def series_H(kind, k: int, shape: SplineShape, N: int) -> float:
    """
    Normalizing constant H_k: the alias series of harmonic k at zero phase.

    Raises
    ------
    DegenerateDenominator
        If |H_k| < 1e-12.
    """
    kind = GridKind(kind)
    _check_harmonic(k, (N - 1) // 2)
    return _series_H(kind, k, shape.r, shape.truncation, N)


@lru_cache(maxsize=None)
def _series_H(kind, k, r, M, N):
    _, weights = _alias_terms(kind, k, r, M, N)
    # sum from the smallest terms up
    H = float(np.sum(weights[::-1]))
    if abs(H) < DEGENERATE_H:
        raise DegenerateDenominator(
            f"|H_{k}| = {abs(H):.3g} for kind={int(kind)}, r={r}, N={N}, M={M}"
        )
    return H


def series_C(grid: UniformGrid, k: int, shape: SplineShape, j: int, t):
    """Alias series C_k for node j at t (not normalized by H_k)."""
    _check_harmonic(k, grid.order)
    s = _phase(grid, j, t)
    freqs, weights = _alias_terms(grid.kind, k, shape.r, shape.truncation, grid.n_nodes)
    return _scalar_or_array(_cosine_sum(freqs, weights, s), t)


@lru_cache(maxsize=None)
def spline_series(kind, N, r, M, q):
    """
    Cosine-series form of the q-harmonic spline kernel.

    Returns ``(freqs, coeffs)`` such that the kernel equals
    ``(1 + 2*sum(coeffs * cos(freqs * s))) / N`` at phase s; coeffs are the
    alias weights divided by H_k.
    """
    kind = GridKind(kind)
    freqs, coeffs = [], []
    for k in range(1, q + 1):
        f, w = _alias_terms(kind, k, r, M, N)
        freqs.append(f)
        coeffs.append(w / _series_H(kind, k, r, M, N))
    if not freqs:
        return np.zeros(0), np.zeros(0)
    freqs, coeffs = np.concatenate(freqs), np.concatenate(coeffs)
    freqs.setflags(write=False)
    coeffs.setflags(write=False)
    return freqs, coeffs


def ts_eval(grid: UniformGrid, j: int, shape: SplineShape, t):
    """Fundamental interpolation spline ts_j at t; cardinal on the grid nodes."""
    return ts_ls_eval(grid, j, grid.order, shape, t)


def ts_ls_eval(grid: UniformGrid, j: int, q: int, shape: SplineShape, t):
    """
    Fundamental least-squares spline with q harmonics.

    At the grid nodes it takes the same values as ``phi_ls_eval(grid, j, q, .)``;
    ``q == n`` gives ``ts_eval``.
    """
    check_budget(q, grid.order)
    s = _phase(grid, j, t)
    freqs, coeffs = spline_series(grid.kind, grid.n_nodes, shape.r, shape.truncation, q)
    value = (1.0 + 2.0 * _cosine_sum(freqs, coeffs, s)) / grid.n_nodes
    return _scalar_or_array(value, t)
