"""
Closed forms for the correlation function

    R_{m,n}(y) = int p_n(x) p_{n+m}(x + y) w(x) dx

of the classical orthogonal polynomials.

Every family has a coefficient-sum representation (R is a polynomial of exact
degree m in y) and, apart from Laguerre and Hermite, a hypergeometric
representation in 4/y^2 (Jacobi: a terminating Appell F2 in -2/y, 2/y). The
symmetric families additionally have reversed 4F3 forms in y^2/4.

``corr`` picks the coefficient sum for |y| < Y_SWITCH and the hypergeometric
form otherwise; the 4/y^2 series blow up term by term as y -> 0 while the
polynomial itself stays tame.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

from .errors import IllPosedSeriesError, ParameterDomainError
from .families import Family, Kind, norm_h
from .hypergeom import (
    EPS,
    AppellF2Spec,
    HypSeriesSpec,
    appell_f2_graded,
    appell_f2_graded_exact,
    gamma_ratio,
    pfq_sum,
    pochhammer,
)

__all__ = [
    "Y_SWITCH",
    "REPRESENTATIONS",
    "CorrelationQuery",
    "CorrResult",
    "CoeffVector",
    "corr",
    "corr_value",
    "coefficient_vector",
    "corr_jacobi_f2",
    "corr_gegenbauer",
    "corr_gegenbauer_hyp",
    "corr_gegenbauer_reversed",
    "corr_chebyshev_t",
    "corr_chebyshev_t_hyp",
    "corr_chebyshev_t_reversed",
    "corr_chebyshev_u",
    "corr_chebyshev_u_hyp",
    "corr_legendre",
    "corr_legendre_hyp",
    "corr_legendre_binomial",
    "corr_legendre_reversed",
    "corr_laguerre",
    "corr_hermite",
    "hyp_specs",
]

Y_SWITCH = 2.0
REPRESENTATIONS = ("hyp_form", "coeff_form", "monomial", "norm_constant")

# rounding budget per coefficient or series term, in units of EPS
_ROUNDING = 32.0


@dataclass(frozen=True)
class CorrelationQuery:
    family: Family
    m: int
    n: int
    y: float

    def __post_init__(self):
        for name in ("m", "n"):
            v = getattr(self, name)
            if int(v) != v or v < 0:
                raise ParameterDomainError(f"{name} must be a non-negative integer, got {v}")
            object.__setattr__(self, name, int(v))
        object.__setattr__(self, "y", float(self.y))


@dataclass(frozen=True)
class CorrResult:
    value: float
    representation: str
    est_error: float
    note: str = field(default="")

    def __post_init__(self):
        if self.representation not in REPRESENTATIONS:
            raise ValueError(f"unknown representation {self.representation!r}")
        if not self.est_error >= 0:
            raise ValueError(f"est_error must be non-negative, got {self.est_error}")


@dataclass(frozen=True)
class CoeffVector:
    """Monomial coefficients (c_0, ..., c_m) of R_{m,n}(y)."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, y: float) -> float:
        value = 0.0
        for c in reversed(self.coeffs):
            value = value * y + c
        return value

    def magnitude(self, y: float) -> float:
        """sum |c_j| |y|^j, the scale against which evaluation error is measured."""
        return math.fsum(abs(c) * abs(y) ** j for j, c in enumerate(self.coeffs))


def _check(m, n, m_min=1):
    if int(m) != m or m < m_min:
        raise ParameterDomainError(f"m must be an integer >= {m_min}, got {m}")
    if int(n) != n or n < 0:
        raise ParameterDomainError(f"n must be a non-negative integer, got {n}")
    return int(m), int(n)


def _even_odd_sum(m: int, scale: float, term) -> list[float]:
    """Coefficients of sum_k scale * term(k) * (2y)^{m-2k}, 0 <= k < m, m - 2k >= 1."""
    coeffs = [0.0] * (m + 1)
    for k in range((m + 1) // 2):
        coeffs[m - 2 * k] = scale * term(k) * 2.0 ** (m - 2 * k)
    return coeffs


# --- coefficient sums -------------------------------------------------------

def _gegenbauer_coeffs(alpha: float, m: int, n: int) -> list[float]:
    scale = (math.pi * 2.0 ** (1 - 2 * alpha)
             * gamma_ratio([n + 2 * alpha], [n + 1, alpha, alpha]))
    return _even_odd_sum(m, scale, lambda k: gamma_ratio(
        [m + n + alpha - k, m - k], [n + alpha + 1 + k, m + 1 - 2 * k, m - 2 * k, k + 1]))


def _chebyshev_t_coeffs(m: int, n: int) -> list[float]:
    return _even_odd_sum(m, math.pi * (n + m) / 2, lambda k: gamma_ratio(
        [m + n - k, m - k], [n + 1 + k, m + 1 - 2 * k, m - 2 * k, k + 1]))


def _chebyshev_u_coeffs(m: int, n: int) -> list[float]:
    return _even_odd_sum(m, math.pi * (n + 1) / 2, lambda k: gamma_ratio(
        [m + n + 1 - k, m - k], [n + 2 + k, m + 1 - 2 * k, m - 2 * k, k + 1]))


def _legendre_coeffs(m: int, n: int) -> list[float]:
    return _even_odd_sum(m, 1.0, lambda k: gamma_ratio(
        [n + m + 0.5 - k, m - k], [n + 1.5 + k, m + 1 - 2 * k, m - 2 * k, k + 1]))


def _laguerre_coeffs(alpha: float, m: int, n: int) -> list[float]:
    scale = -gamma_ratio([n + 1 + alpha], [n + 1])
    coeffs = [0.0] * (m + 1)
    for k in range(m):
        coeffs[k + 1] = scale * pochhammer(1 - m, k) / (pochhammer(2, k) * math.factorial(k))
    return coeffs


def _hermite_leading(m: int, n: int) -> float:
    return 2.0 ** (n + m) * math.sqrt(math.pi) * pochhammer(m + 1, n)


def _hermite_coeffs(m: int, n: int) -> list[float]:
    coeffs = [0.0] * (m + 1)
    coeffs[m] = _hermite_leading(m, n)
    return coeffs


def _jacobi_prefactor(alpha: float, beta: float, m: int, n: int) -> float:
    return (2.0 ** (alpha + beta + 1)
            * gamma_ratio([alpha + n + 1, beta + n + 1, alpha + beta + 2 * m + 2 * n + 1],
                          [alpha + beta + 2 * n + 2, alpha + beta + m + n + 1, n + 1, m + 1]))


def _jacobi_f2_spec(alpha: float, beta: float, m: int, n: int, x: float, y: float) -> AppellF2Spec:
    return AppellF2Spec(
        a=-m,
        b1=beta + n + 1,
        b2=-beta - m - n,
        c1=alpha + beta + 2 * n + 2,
        c2=-alpha - beta - 2 * m - 2 * n,
        x=x,
        y=y,
    )


@functools.lru_cache(maxsize=1024)
def _jacobi_coeffs_cached(alpha: float, beta: float, m: int, n: int) -> tuple:
    return tuple(_jacobi_coeffs_uncached(alpha, beta, m, n))


def _jacobi_coeffs(alpha: float, beta: float, m: int, n: int) -> list[float]:
    # the exact rational sums are the slow part, and they do not depend on y
    return list(_jacobi_coeffs_cached(alpha, beta, m, n))


def _jacobi_coeffs_uncached(alpha: float, beta: float, m: int, n: int) -> list[float]:
    # F2(...; -2t, 2t) = sum_s g_s t^s with t = 1/y, so (y/2)^m F2 = sum_s g_s 2^-m y^{m-s}
    g = appell_f2_graded_exact(_jacobi_f2_spec(alpha, beta, m, n, -2.0, 2.0))
    scale = _jacobi_prefactor(alpha, beta, m, n) * 2.0 ** -m
    coeffs = [0.0] * (m + 1)
    for s, gs in enumerate(g[:m]):
        coeffs[m - s] = scale * gs
    # c_0 = R_{m,n}(0) = int p_n p_{n+m} w vanishes by orthogonality; g_m is pure rounding
    return coeffs


def coefficient_vector(family: Family, m: int, n: int) -> CoeffVector:
    """Monomial coefficients of R_{m,n}(y) from the family's coefficient sum."""
    m, n = _check(m, n, m_min=0)
    if m == 0:
        return CoeffVector((norm_h(family, n),))
    kind = family.kind
    if kind is Kind.LEGENDRE:
        coeffs = _legendre_coeffs(m, n)
    elif kind is Kind.CHEBYSHEV_T:
        coeffs = _chebyshev_t_coeffs(m, n)
    elif kind is Kind.CHEBYSHEV_U:
        coeffs = _chebyshev_u_coeffs(m, n)
    elif kind is Kind.GEGENBAUER:
        coeffs = _gegenbauer_coeffs(family.alpha, m, n)
    elif kind is Kind.JACOBI:
        coeffs = _jacobi_coeffs(family.alpha, family.beta, m, n)
    elif kind is Kind.LAGUERRE:
        coeffs = _laguerre_coeffs(family.alpha, m, n)
    else:
        coeffs = _hermite_coeffs(m, n)
    return CoeffVector(tuple(coeffs))


# --- hypergeometric forms ---------------------------------------------------

_HYP_UPPER = lambda m: (-m / 2, (1 - m) / 2, (1 - m) / 2, (2 - m) / 2)  # noqa: E731


def _gegenbauer_hyp_spec(alpha, m, n, y):
    return HypSeriesSpec(_HYP_UPPER(m), (1 - m, 1 - m - n - alpha, n + alpha + 1), 4.0 / (y * y))


def _chebyshev_t_hyp_spec(m, n, y):
    return HypSeriesSpec(_HYP_UPPER(m), (1 - m, 1 - m - n, n + 1), 4.0 / (y * y))


def _legendre_hyp_spec(m, n, y):
    return HypSeriesSpec(_HYP_UPPER(m), (1 - m, 0.5 - m - n, n + 1.5), 4.0 / (y * y))


def _series(prefactor: float, spec: HypSeriesSpec) -> tuple[float, float]:
    value, mag = pfq_sum(spec)
    est = _ROUNDING * (spec.K + 4) * EPS * abs(prefactor) * mag
    return prefactor * value, est


def _require_nonzero(y):
    if y == 0.0:
        raise ParameterDomainError("the 4/y^2 hypergeometric form needs y != 0")


def _gegenbauer_hyp(alpha, m, n, y):
    _require_nonzero(y)
    pre = (math.pi * 2.0 ** (1 - 2 * alpha + m)
           * gamma_ratio([2 * alpha + n, alpha + m + n], [alpha, alpha, alpha + n + 1, n + 1, m + 1])
           * y ** m)
    return _series(pre, _gegenbauer_hyp_spec(alpha, m, n, y))


def _chebyshev_t_hyp(m, n, y):
    _require_nonzero(y)
    pre = math.pi * gamma_ratio([m + n + 1], [m + 1, n + 1]) * 2.0 ** (m - 1) * y ** m
    return _series(pre, _chebyshev_t_hyp_spec(m, n, y))


def _legendre_hyp(m, n, y):
    _require_nonzero(y)
    pre = gamma_ratio([m + n + 0.5], [m + 1, n + 1.5]) * (2 * y) ** m
    return _series(pre, _legendre_hyp_spec(m, n, y))


def _jacobi_hyp(alpha, beta, m, n, y):
    _require_nonzero(y)
    spec = _jacobi_f2_spec(alpha, beta, m, n, -2.0 / y, 2.0 / y)
    g, mag = appell_f2_graded(spec)
    pre = _jacobi_prefactor(alpha, beta, m, n) * (y / 2) ** m
    return pre * math.fsum(g), _ROUNDING * (m + 4) * EPS * abs(pre) * math.fsum(mag)


def corr_gegenbauer_hyp(alpha: float, m: int, n: int, y: float) -> float:
    """Gegenbauer R_{m,n}(y) from the 4F3 in 4/y^2 (y != 0)."""
    m, n = _check(m, n)
    Family.gegenbauer(alpha)
    return _gegenbauer_hyp(alpha, m, n, y)[0]


def corr_chebyshev_t_hyp(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    return _chebyshev_t_hyp(m, n, y)[0]


def corr_chebyshev_u_hyp(m: int, n: int, y: float) -> float:
    """Chebyshev U as the alpha = 1 Gegenbauer 4F3 (lower parameters 1-m, -m-n, n+2)."""
    m, n = _check(m, n)
    return _gegenbauer_hyp(1.0, m, n, y)[0]


def corr_legendre_hyp(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    return _legendre_hyp(m, n, y)[0]


def corr_jacobi_f2(alpha: float, beta: float, m: int, n: int, y: float) -> float:
    """Jacobi R_{m,n}(y) as a prefactor times a terminating Appell F2 in (-2/y, 2/y)."""
    m, n = _check(m, n)
    Family.jacobi(alpha, beta)
    return _jacobi_hyp(alpha, beta, m, n, y)[0]


# --- reversed 4F3 forms in y^2/4 -------------------------------------------

def _reversed_gegenbauer_spec(alpha, m, n, y):
    q = y * y / 4
    if m % 2 == 0:
        return HypSeriesSpec(
            ((2 - m) / 2, (2 + m) / 2, (2 - m) / 2 - n - alpha, (2 + m) / 2 + n + alpha),
            (1.5, 1.5, 2.0), q)
    return HypSeriesSpec(
        ((1 - m) / 2, (1 + m) / 2, (1 - m) / 2 - n - alpha, (1 + m) / 2 + n + alpha),
        (0.5, 1.0, 1.5), q)


def _reversed_chebyshev_t_spec(m, n, y):
    q = y * y / 4
    if m % 2 == 0:
        return HypSeriesSpec(
            ((2 - m) / 2, (2 + m) / 2, (2 - m) / 2 - n, (2 + m) / 2 + n), (1.5, 1.5, 2.0), q)
    return HypSeriesSpec(
        ((1 - m) / 2, (1 + m) / 2, (1 - m) / 2 - n, (1 + m) / 2 + n), (0.5, 1.0, 1.5), q)


def _reversed_legendre_spec(m, n, y):
    q = y * y / 4
    if m % 2 == 0:
        return HypSeriesSpec(
            ((2 - m) / 2, (2 + m) / 2, (3 + m) / 2 + n, (1 - m) / 2 - n), (1.5, 1.5, 2.0), q)
    return HypSeriesSpec(
        ((1 - m) / 2, (1 + m) / 2, m / 2 + n + 1, -m / 2 - n), (1.0, 0.5, 1.5), q)


def corr_gegenbauer_reversed(alpha: float, m: int, n: int, y: float) -> float:
    """Gegenbauer R_{m,n}(y) from the reversed 4F3 in y^2/4 (even or odd m)."""
    m, n = _check(m, n)
    Family.gegenbauer(alpha)
    base = math.pi * 2.0 ** (-2 * alpha) * gamma_ratio([n + 2 * alpha], [alpha, alpha, n + 1])
    if m % 2 == 0:
        pre = base * m * (m + 2 * n + 2 * alpha) * y * y
    else:
        pre = 4 * base * y
    return _series(pre, _reversed_gegenbauer_spec(alpha, m, n, y))[0]


def corr_chebyshev_t_reversed(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    if m % 2 == 0:
        pre = math.pi * m * (m + n) * (m + 2 * n) * y * y / 4
    else:
        pre = math.pi * (m + n) * y
    return _series(pre, _reversed_chebyshev_t_spec(m, n, y))[0]


def corr_legendre_reversed(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    if m % 2 == 0:
        pre = m / 2 * (m + 2 * n + 1) * y * y
    else:
        pre = 2 * y
    return _series(pre, _reversed_legendre_spec(m, n, y))[0]


def corr_legendre_binomial(m: int, n: int, y: float) -> float:
    """Legendre R_{m,n}(y) written with generalized binomial coefficients."""
    m, n = _check(m, n)

    def binom(a, b):
        return gamma_ratio([a + 1], [b + 1, a - b + 1])

    terms = [binom(n + 0.5 + m - 1 - k, n + 0.5 + k) * binom(m - 1 - k, k) / (m - 2 * k)
             * (2 * y) ** (m - 2 * k) for k in range((m + 1) // 2)]
    return math.fsum(terms)


# --- per-family entry points ----------------------------------------------

def _by_policy(coeffs: list[float], hyp, y: float) -> float:
    if abs(y) >= Y_SWITCH:
        return hyp()[0]
    return CoeffVector(tuple(coeffs))(y)


def corr_gegenbauer(alpha: float, m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    Family.gegenbauer(alpha)
    return _by_policy(_gegenbauer_coeffs(alpha, m, n), lambda: _gegenbauer_hyp(alpha, m, n, y), y)


def corr_chebyshev_t(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    return _by_policy(_chebyshev_t_coeffs(m, n), lambda: _chebyshev_t_hyp(m, n, y), y)


def corr_chebyshev_u(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    return _by_policy(_chebyshev_u_coeffs(m, n), lambda: _gegenbauer_hyp(1.0, m, n, y), y)


def corr_legendre(m: int, n: int, y: float) -> float:
    m, n = _check(m, n)
    return _by_policy(_legendre_coeffs(m, n), lambda: _legendre_hyp(m, n, y), y)


def corr_laguerre(alpha: float, m: int, n: int, y: float) -> float:
    """-Gamma(n+1+alpha)/n! * y * 1F1(1-m; 2; y), summed as a terminating series."""
    m, n = _check(m, n)
    Family.laguerre(alpha)
    return CoeffVector(tuple(_laguerre_coeffs(alpha, m, n)))(y)


def corr_hermite(m: int, n: int, y: float) -> float:
    m, n = _check(m, n, m_min=0)
    return _hermite_leading(m, n) * y ** m


def _hyp_dispatch(family: Family, m: int, n: int, y: float):
    kind = family.kind
    if kind is Kind.LEGENDRE:
        return _legendre_hyp(m, n, y)
    if kind is Kind.CHEBYSHEV_T:
        return _chebyshev_t_hyp(m, n, y)
    if kind is Kind.CHEBYSHEV_U:
        return _gegenbauer_hyp(1.0, m, n, y)
    if kind is Kind.GEGENBAUER:
        return _gegenbauer_hyp(family.alpha, m, n, y)
    if kind is Kind.JACOBI:
        return _jacobi_hyp(family.alpha, family.beta, m, n, y)
    return None


def corr(query: CorrelationQuery) -> CorrResult:
    """Evaluate R_{m,n}(y) with the representation policy described in the module docstring."""
    family, m, n, y = query.family, query.m, query.n, query.y
    if m == 0:
        # p_{n}(x + y) - p_n(x) has degree n - 1, so R_{0,n} = h_n for every y
        h = norm_h(family, n)
        return CorrResult(h, "norm_constant", _ROUNDING * EPS * abs(h))
    if family.kind is Kind.HERMITE:
        value = corr_hermite(m, n, y)
        return CorrResult(value, "monomial", _ROUNDING * EPS * abs(value))

    note = ""
    try:
        if abs(y) >= Y_SWITCH:
            hyp = _hyp_dispatch(family, m, n, y)
            if hyp is not None:
                return CorrResult(hyp[0], "hyp_form", hyp[1])
        cv = coefficient_vector(family, m, n)
    except IllPosedSeriesError:
        # F2 lower parameter at a pole inside the summation range; cannot
        # happen for alpha, beta > -1 but guarded all the same
        from .quadrature import oracle_coefficients

        cv = oracle_coefficients(family, m, n)
        note = "oracle-quadrature coefficients"
    value = cv(y)
    return CorrResult(value, "coeff_form", _ROUNDING * (m + 2) * EPS * cv.magnitude(y), note)


def corr_value(family: Family, m: int, n: int, y: float) -> float:
    return corr(CorrelationQuery(family, m, n, y)).value


def hyp_specs(family: Family, m: int, n: int, y: float) -> list[HypSeriesSpec]:
    """Every pFq series this module builds for (family, m, n, y)."""
    m, n = _check(m, n)
    kind = family.kind
    specs = []
    if kind is Kind.LEGENDRE:
        specs += [_legendre_hyp_spec(m, n, y), _reversed_legendre_spec(m, n, y)]
    elif kind is Kind.CHEBYSHEV_T:
        specs += [_chebyshev_t_hyp_spec(m, n, y), _reversed_chebyshev_t_spec(m, n, y)]
    elif kind is Kind.CHEBYSHEV_U:
        specs += [_gegenbauer_hyp_spec(1.0, m, n, y), _reversed_gegenbauer_spec(1.0, m, n, y)]
    elif kind is Kind.GEGENBAUER:
        specs += [_gegenbauer_hyp_spec(family.alpha, m, n, y),
                  _reversed_gegenbauer_spec(family.alpha, m, n, y)]
    return specs
