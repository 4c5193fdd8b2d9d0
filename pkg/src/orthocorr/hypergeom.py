"""
Gamma-function helpers, terminating hypergeometric series and the terminating
Appell F2 function.

All series here are finite. Terms are generated by ratio updates and summed
with ``math.fsum`` so cancellation between terms costs no more than the
conditioning of the sum itself; each evaluator can also report the sum of the
term magnitudes, which is what the a-posteriori error estimates are built on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import (
    IllPosedSeriesError,
    NotTerminatingError,
    PoleError,
    TransformInapplicableError,
)

__all__ = [
    "EPS",
    "nonpositive_int",
    "ln_gamma_signed",
    "gamma_ratio",
    "pochhammer",
    "HypSeriesSpec",
    "pfq_terminating",
    "pfq_sum",
    "lemma1_reverse",
    "lemma2_shift",
    "AppellF2Spec",
    "appell_f2_terminating",
    "pfq_regularized_sum",
    "appell_f2_graded",
    "appell_f2_graded_exact",
    "appell_f2_symmetric_sum",
    "f2_symmetric_to_4f3",
    "is_saalschutzian",
]

EPS = 2.0 ** -52

# parameters within this relative distance of an integer are treated as that integer
_INT_TOL = 1e-12


def nonpositive_int(x: float):
    """Return r if x == -r for an integer r >= 0, else None."""
    r = round(x)
    if r <= 0 and abs(x - r) <= _INT_TOL * max(1.0, abs(x)):
        return -int(r)
    return None


def ln_gamma_signed(x: float) -> tuple[float, int]:
    """Return (ln|Gamma(x)|, sign Gamma(x))."""
    if nonpositive_int(x) is not None:
        raise PoleError(f"Gamma has a pole at {x}")
    lg = math.lgamma(x)
    if x > 0:
        return lg, 1
    # Gamma alternates sign between consecutive negative integers
    return lg, -1 if math.ceil(-x) % 2 else 1


def gamma_ratio(nums: Sequence[float], dens: Sequence[float]) -> float:
    """Compute prod Gamma(nums) / prod Gamma(dens).

    A denominator argument at a pole makes the ratio exactly 0 (1/Gamma(-k) = 0);
    a numerator argument at a pole raises :class:`PoleError`.
    """
    for a in nums:
        if nonpositive_int(a) is not None:
            raise PoleError(f"numerator Gamma({a}) is at a pole")
    for b in dens:
        if nonpositive_int(b) is not None:
            return 0.0

    if all(abs(t) < 170.0 for t in (*nums, *dens)):
        # direct products are exact for small integer arguments
        num = list(nums)
        den = list(dens)
        value = 1.0
        for i in range(max(len(num), len(den))):
            if i < len(num):
                value *= math.gamma(num[i])
            if i < len(den):
                value /= math.gamma(den[i])
        if math.isfinite(value) and value != 0.0:
            return value

    log_sum = 0.0
    sign = 1
    for a in nums:
        lg, s = ln_gamma_signed(a)
        log_sum += lg
        sign *= s
    for b in dens:
        lg, s = ln_gamma_signed(b)
        log_sum -= lg
        sign *= s
    return sign * math.exp(log_sum)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1)."""
    if k < 0 or int(k) != k:
        raise ValueError(f"Pochhammer index must be a non-negative integer, got {k}")
    value = 1.0
    for i in range(int(k)):
        value *= a + i
    return value


@dataclass(frozen=True)
class HypSeriesSpec:
    """Parameters of a generalized hypergeometric series pFq(upper; lower; argument).

    ``termination`` is either an explicit last index K or ``"auto"``, in which
    case K is the smallest j >= 0 such that some upper parameter equals -j.
    """

    upper: tuple
    lower: tuple
    argument: float
    termination: Union[int, str] = field(default="auto")

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        object.__setattr__(self, "argument", float(self.argument))
        t = self.termination
        if t != "auto" and (isinstance(t, bool) or int(t) != t or t < 0):
            raise ValueError(f"termination must be 'auto' or a non-negative integer, got {t!r}")

    @property
    def terminating(self) -> bool:
        return self.termination != "auto" or any(nonpositive_int(a) is not None for a in self.upper)

    @property
    def K(self) -> int:
        """Index of the last (possibly) nonzero term."""
        if self.termination != "auto":
            return int(self.termination)
        roots = [r for r in map(nonpositive_int, self.upper) if r is not None]
        if not roots:
            raise NotTerminatingError(f"no non-positive integer upper parameter in {self.upper}")
        return min(roots)

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)


def _check_lower(lower, K: int) -> None:
    for b in lower:
        r = nonpositive_int(b)
        if r is not None and r <= K - 1:
            raise IllPosedSeriesError(
                f"lower parameter {b} vanishes at term {r + 1} before termination at {K}"
            )


def pfq_sum(spec: HypSeriesSpec) -> tuple[float, float]:
    """Sum a terminating series; return (value, sum of |terms|)."""
    K = spec.K
    _check_lower(spec.lower, K)
    x = spec.argument
    terms = [1.0]
    t = 1.0
    for k in range(K):
        num = 1.0
        for a in spec.upper:
            num *= a + k
        den = float(k + 1)
        for b in spec.lower:
            den *= b + k
        t *= num / den * x
        if t == 0.0:
            break
        terms.append(t)
    return math.fsum(terms), math.fsum(abs(t) for t in terms)


def pfq_terminating(spec: HypSeriesSpec) -> float:
    if spec.K == 0:
        return 1.0
    return pfq_sum(spec)[0]


def _split_upper(spec: HypSeriesSpec, n: int):
    rest = list(spec.upper)
    for i, a in enumerate(rest):
        if nonpositive_int(a) == n:
            del rest[i]
            return rest
    raise TransformInapplicableError(f"no upper parameter equals -{n} in {spec.upper}")


def lemma1_reverse(spec: HypSeriesSpec) -> tuple[float, HypSeriesSpec]:
    """Reverse the order of summation of a terminating (p+1)F(p) series.

    Returns ``(prefactor, reversed_spec)`` with
    ``prefactor * F(reversed_spec) == F(spec)``; the reversed series has
    upper ``{-n, 1-b_i-n}``, lower ``{1-a_i-n}`` and argument ``1/x``.
    """
    n = spec.K
    a = _split_upper(spec, n)
    b = list(spec.lower)
    if len(a) != len(b):
        raise TransformInapplicableError(
            f"reversal needs a (p+1)F(p) series, got {spec.p}F{spec.q}"
        )
    x = spec.argument
    if x == 0.0:
        raise TransformInapplicableError("reversal needs a nonzero argument")
    den = math.prod(pochhammer(bi, n) for bi in b)
    if den == 0.0:
        raise TransformInapplicableError(f"(b)_{n} vanishes for some lower parameter in {b}")
    num = math.prod(pochhammer(ai, n) for ai in a)
    if num == 0.0:
        raise TransformInapplicableError(f"(a)_{n} vanishes for some upper parameter in {a}")
    prefactor = num / den * (-x) ** n
    reversed_spec = HypSeriesSpec(
        upper=(-float(n), *(1.0 - bi - n for bi in b)),
        lower=tuple(1.0 - ai - n for ai in a),
        argument=1.0 / x,
        termination=n,
    )
    return prefactor, reversed_spec


def lemma2_shift(spec: HypSeriesSpec) -> tuple[float, HypSeriesSpec]:
    """Regularize a series whose lower parameter list contains -M.

    ``F(spec) / Gamma(-M)`` (understood as the limit) equals
    ``prefactor * F(shifted)``, where every upper parameter is raised by M+1 and
    the lower list becomes ``{M+2, b_i+M+1}``.
    """
    hits = [i for i, b in enumerate(spec.lower) if nonpositive_int(b) is not None]
    if len(hits) != 1:
        raise TransformInapplicableError(
            f"expected exactly one non-positive integer lower parameter, got {spec.lower}"
        )
    M = nonpositive_int(spec.lower[hits[0]])
    b = [bi for i, bi in enumerate(spec.lower) if i != hits[0]]
    den = math.prod(pochhammer(bi, M + 1) for bi in b)
    if den == 0.0:
        raise TransformInapplicableError(f"(b)_{M + 1} vanishes for some parameter in {b}")
    x = spec.argument
    num = math.prod(pochhammer(ai, M + 1) for ai in spec.upper)
    prefactor = x ** (M + 1) * num / (math.factorial(M + 1) * den)

    termination: Union[int, str] = "auto"
    if spec.terminating:
        # all regularized terms vanish when the series stops before index M+1
        termination = max(spec.K - M - 1, 0)
    shifted = HypSeriesSpec(
        upper=tuple(ai + M + 1 for ai in spec.upper),
        lower=(float(M + 2), *(bi + M + 1 for bi in b)),
        argument=x,
        termination=termination,
    )
    return prefactor, shifted


def pfq_regularized_sum(spec: HypSeriesSpec) -> tuple[float, float]:
    """Direct sum of F(spec) / Gamma(-M) for a terminating series with one lower parameter -M.

    Terms with k <= M vanish in the limit; the rest are
    prod (a)_k / prod (b)_k * x^k / (k! (k-M-1)!) over the other lower parameters.
    Returns (value, sum of |terms|).
    """
    hits = [i for i, b in enumerate(spec.lower) if nonpositive_int(b) is not None]
    if len(hits) != 1:
        raise TransformInapplicableError(
            f"expected exactly one non-positive integer lower parameter, got {spec.lower}"
        )
    M = nonpositive_int(spec.lower[hits[0]])
    b = [bi for i, bi in enumerate(spec.lower) if i != hits[0]]
    x = spec.argument
    terms = []
    for k in range(M + 1, spec.K + 1):
        den = math.prod(pochhammer(bi, k) for bi in b)
        if den == 0.0:
            raise IllPosedSeriesError(f"lower parameter in {b} vanishes inside the summation range")
        num = math.prod(pochhammer(ai, k) for ai in spec.upper)
        terms.append(num / den * x ** k / (math.factorial(k) * math.factorial(k - M - 1)))
    return math.fsum(terms), math.fsum(abs(t) for t in terms)


@dataclass(frozen=True)
class AppellF2Spec:
    """F2(a; b1, b2; c1, c2; x, y) with a = -m, a non-positive integer."""

    a: float
    b1: float
    b2: float
    c1: float
    c2: float
    x: float
    y: float

    @property
    def m(self) -> int:
        m = nonpositive_int(self.a)
        if m is None:
            raise NotTerminatingError(f"F2 first parameter must be a non-positive integer, got {self.a}")
        return m


def _ratio_terms(b: float, c: float, z: float, count: int) -> list[float]:
    """[(b)_j / ((c)_j j!) z^j for j < count], truncated where (b)_j vanishes."""
    out = [1.0]
    t = 1.0
    for j in range(count - 1):
        if b + j == 0.0:
            break
        if c + j == 0.0:
            raise IllPosedSeriesError(f"lower parameter {c} vanishes inside the summation range")
        t *= (b + j) / ((c + j) * (j + 1)) * z
        out.append(t)
    return out


def appell_f2_graded(spec: AppellF2Spec) -> tuple[list[float], list[float]]:
    """Group the F2 double sum by total degree s = j + k.

    Returns ``(g, mag)`` where ``g[s]`` is the sum of all terms with j + k = s
    and ``mag[s]`` the sum of their magnitudes, so that
    F2(a; ...; t x, t y) = sum_s g[s] t^s.
    """
    m = spec.m
    u = _ratio_terms(spec.b1, spec.c1, spec.x, m + 1)
    v = _ratio_terms(spec.b2, spec.c2, spec.y, m + 1)
    a_poch = [1.0]
    for s in range(m):
        a_poch.append(a_poch[-1] * (spec.a + s))
    g, mag = [], []
    for s in range(m + 1):
        terms = [u[j] * v[s - j] for j in range(s + 1) if j < len(u) and s - j < len(v)]
        g.append(a_poch[s] * math.fsum(terms))
        mag.append(abs(a_poch[s]) * math.fsum(abs(t) for t in terms))
    return g, mag


def appell_f2_graded_exact(spec: AppellF2Spec) -> list[float]:
    """Same grouping as :func:`appell_f2_graded`, summed in exact rational arithmetic.

    Every float parameter is taken at its exact binary value, so the only
    rounding is the final conversion of each ``g[s]``. This removes the
    cancellation between the alternating terms of one degree.
    """
    m = spec.m
    a, b1, b2, c1, c2, x, y = (Fraction(v) for v in (spec.a, spec.b1, spec.b2, spec.c1, spec.c2, spec.x, spec.y))

    def ratio_terms(b, c, z):
        out = [Fraction(1)] + [Fraction(0)] * m
        for k in range(m):
            if b + k == 0:
                break
            if c + k == 0:
                raise IllPosedSeriesError(f"lower parameter {float(c)} vanishes inside the summation range")
            out[k + 1] = out[k] * (b + k) / ((c + k) * (k + 1)) * z
        return out

    u, v = ratio_terms(b1, c1, x), ratio_terms(b2, c2, y)
    g = []
    a_poch = Fraction(1)
    for s in range(m + 1):
        g.append(float(a_poch * sum(u[j] * v[s - j] for j in range(s + 1))))
        a_poch *= a + s
    return g


def appell_f2_terminating(spec: AppellF2Spec) -> float:
    """Terminating Appell F2 as a finite double sum over j + k <= m.

    The |x| + |y| < 1 convergence condition is irrelevant for a finite sum and
    is not enforced.
    """
    g, _ = appell_f2_graded(spec)
    return math.fsum(g)


def appell_f2_symmetric_sum(a: float, b1: float, b2: float, c1: float, c2: float, x: float) -> float:
    """F2(a; b1, b2; c1, c2; -x, x) as a single sum of terminating 3F2(1) values."""
    m = nonpositive_int(a)
    if m is None:
        raise NotTerminatingError(f"first parameter must be a non-positive integer, got {a}")
    terms = []
    for k in range(m + 1):
        inner = pfq_terminating(HypSeriesSpec((-k, b1, 1 - c2 - k), (c1, 1 - b2 - k), 1.0))
        terms.append(pochhammer(a, k) * pochhammer(b2, k) / pochhammer(c2, k)
                     * x ** k / math.factorial(k) * inner)
    return math.fsum(terms)


def f2_symmetric_to_4f3(a: float, b1: float, b2: float, x: float,
                        c1: float | None = None, c2: float | None = None) -> HypSeriesSpec:
    """Rewrite F2(a; b1, b2; 2b1, 2b2; -x, x) as a 4F3 in x^2.

    When ``c1``/``c2`` are supplied they must equal ``2*b1``/``2*b2``.
    """
    for b, c in ((b1, c1), (b2, c2)):
        if c is not None and abs(c - 2 * b) > _INT_TOL * max(1.0, abs(c)):
            raise TransformInapplicableError(f"lower parameter {c} is not twice {b}")
    if nonpositive_int(a) is None:
        raise TransformInapplicableError(f"first parameter must be a non-positive integer, got {a}")
    s = b1 + b2
    return HypSeriesSpec(
        upper=(a / 2, (a + 1) / 2, s / 2, (s + 1) / 2),
        lower=((1 + 2 * b1) / 2, (1 + 2 * b2) / 2, s),
        argument=x * x,
    )


def is_saalschutzian(spec: HypSeriesSpec, tol: float = 1e-12) -> bool:
    """True when 1 + sum(upper) == sum(lower)."""
    lhs = 1.0 + math.fsum(spec.upper)
    rhs = math.fsum(spec.lower)
    scale = max(1.0, *(abs(t) for t in (*spec.upper, *spec.lower)))
    return abs(lhs - rhs) <= tol * scale
