"""Fundamental trigonometric interpolation and least-squares polynomials and splines."""

from .approximants import (
    Approximant,
    FourierCoeffs,
    InterpPoly,
    InterpSpline,
    LSPoly,
    LSSpline,
    SampleSet,
    basis_matrix,
    build,
    evaluate,
    fourier_coeffs,
    partial_sum_eval,
    residual_sse,
)
from .errors import (
    BudgetTooLarge,
    DegenerateDenominator,
    EvenOrTooSmallN,
    FundTrigError,
    GridMismatch,
    IndexOutOfRange,
    NonFiniteInput,
    SingularSystem,
)
from .grids import GridKind, UniformGrid, make_grid, wrap_angle
from .kernels import (
    SplineShape,
    phi_ls_eval,
    series_C,
    series_H,
    sigma_factor,
    tm_eval,
    ts_eval,
    ts_ls_eval,
)
from .validation import (
    GramMatrix,
    collinearity_defect,
    continuous_gram,
    discrete_gram,
    ls_oracle,
    periodic_quadrature,
)

__version__ = "0.1.0"
