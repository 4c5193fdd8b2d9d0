"""Correlation functions R_{m,n}(y) = int p_n(x) p_{n+m}(x+y) w(x) dx of the classical orthogonal polynomials."""

from .closed import (
    CoeffVector,
    CorrelationQuery,
    CorrResult,
    coefficient_vector,
    corr,
    corr_value,
)
from .errors import (
    ConvergenceError,
    DomainError,
    IllPosedSeriesError,
    IncompleteStencilError,
    InternalConsistencyError,
    NotTerminatingError,
    OrthoCorrError,
    ParameterDomainError,
    PoleError,
    TransformInapplicableError,
)
from .families import Family, Kind, eval_poly, norm_h, recurrence_coeffs, support, weight
from .hypergeom import AppellF2Spec, HypSeriesSpec, appell_f2_terminating, pfq_terminating
from .quadrature import QuadratureRule, corr_oracle, gauss_rule, oracle_coefficients
from .recurrence import CorrTable, propagate_table, recurrence_residual

__version__ = "0.1.0"

__all__ = [
    "AppellF2Spec",
    "CoeffVector",
    "ConvergenceError",
    "CorrelationQuery",
    "CorrResult",
    "CorrTable",
    "DomainError",
    "Family",
    "HypSeriesSpec",
    "IllPosedSeriesError",
    "IncompleteStencilError",
    "InternalConsistencyError",
    "Kind",
    "NotTerminatingError",
    "OrthoCorrError",
    "ParameterDomainError",
    "PoleError",
    "QuadratureRule",
    "TransformInapplicableError",
    "appell_f2_terminating",
    "coefficient_vector",
    "corr",
    "corr_oracle",
    "corr_value",
    "eval_poly",
    "gauss_rule",
    "norm_h",
    "oracle_coefficients",
    "pfq_terminating",
    "propagate_table",
    "recurrence_coeffs",
    "recurrence_residual",
    "support",
    "weight",
]
