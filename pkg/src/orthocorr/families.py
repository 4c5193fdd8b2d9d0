"""
Classical orthogonal polynomial families.

Each family is described by its three-term recurrence

    p_{n+1}(x) = (B_n + A_n x) p_n(x) - C_n p_{n-1}(x),   p_{-1} = 0, p_0 = 1,

together with its weight function, orthogonality interval and norm constants
h_n = int p_n(x)^2 w(x) dx.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DomainError, ParameterDomainError
from .hypergeom import gamma_ratio

__all__ = [
    "Kind",
    "Family",
    "RecurrenceCoeffs",
    "recurrence_coeffs",
    "eval_poly",
    "eval_all",
    "weight",
    "norm_h",
    "support",
    "MAX_DEGREE",
]

# Forward recurrence accuracy is only documented up to this degree.
MAX_DEGREE = 64


class Kind(str, enum.Enum):
    LEGENDRE = "legendre"
    CHEBYSHEV_T = "chebyshev-t"
    CHEBYSHEV_U = "chebyshev-u"
    GEGENBAUER = "gegenbauer"
    JACOBI = "jacobi"
    LAGUERRE = "laguerre"
    HERMITE = "hermite"


_NEEDS_ALPHA = {Kind.GEGENBAUER, Kind.JACOBI, Kind.LAGUERRE}
_SYMMETRIC = {Kind.LEGENDRE, Kind.CHEBYSHEV_T, Kind.CHEBYSHEV_U, Kind.GEGENBAUER, Kind.HERMITE}


@dataclass(frozen=True)
class Family:
    """A polynomial family plus its real parameters.

    ``alpha`` is used by Gegenbauer, Jacobi and Laguerre, ``beta`` by Jacobi
    only. Parameters that a family does not use must be left as ``None``.
    """

    kind: Kind
    alpha: Optional[float] = None
    beta: Optional[float] = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        alpha, beta = self.alpha, self.beta
        if kind in _NEEDS_ALPHA:
            if alpha is None:
                raise ParameterDomainError(f"{kind.value} requires alpha")
            alpha = float(alpha)
            object.__setattr__(self, "alpha", alpha)
        elif alpha is not None:
            raise ParameterDomainError(f"{kind.value} takes no alpha")
        if kind is Kind.JACOBI:
            if beta is None:
                raise ParameterDomainError("jacobi requires beta")
            beta = float(beta)
            object.__setattr__(self, "beta", beta)
        elif beta is not None:
            raise ParameterDomainError(f"{kind.value} takes no beta")

        if kind is Kind.JACOBI and not (alpha > -1 and beta > -1):
            raise ParameterDomainError(f"jacobi needs alpha > -1 and beta > -1, got {alpha}, {beta}")
        if kind is Kind.GEGENBAUER and not (alpha > -0.5 and alpha != 0):
            raise ParameterDomainError(f"gegenbauer needs alpha > -1/2 and alpha != 0, got {alpha}")
        if kind is Kind.LAGUERRE and not alpha > -1:
            raise ParameterDomainError(f"laguerre needs alpha > -1, got {alpha}")

    @classmethod
    def legendre(cls) -> "Family":
        return cls(Kind.LEGENDRE)

    @classmethod
    def chebyshev_t(cls) -> "Family":
        return cls(Kind.CHEBYSHEV_T)

    @classmethod
    def chebyshev_u(cls) -> "Family":
        return cls(Kind.CHEBYSHEV_U)

    @classmethod
    def gegenbauer(cls, alpha: float) -> "Family":
        return cls(Kind.GEGENBAUER, alpha)

    @classmethod
    def jacobi(cls, alpha: float, beta: float) -> "Family":
        return cls(Kind.JACOBI, alpha, beta)

    @classmethod
    def laguerre(cls, alpha: float = 0.0) -> "Family":
        return cls(Kind.LAGUERRE, alpha)

    @classmethod
    def hermite(cls) -> "Family":
        return cls(Kind.HERMITE)

    @property
    def is_symmetric(self) -> bool:
        """True when the weight is even about 0, so R_{m,n}(-y) = (-1)^m R_{m,n}(y)."""
        if self.kind is Kind.JACOBI:
            return self.alpha == self.beta
        return self.kind in _SYMMETRIC

    def label(self) -> str:
        if self.kind is Kind.JACOBI:
            return f"jacobi(alpha={self.alpha:g}, beta={self.beta:g})"
        if self.kind in _NEEDS_ALPHA:
            return f"{self.kind.value}(alpha={self.alpha:g})"
        return self.kind.value


class RecurrenceCoeffs(NamedTuple):
    A: float
    B: float
    C: float


def _check_degree(n) -> int:
    if int(n) != n or n < 0:
        raise ParameterDomainError(f"degree index must be a non-negative integer, got {n}")
    return int(n)


def recurrence_coeffs(family: Family, n: int) -> RecurrenceCoeffs:
    """Return (A_n, B_n, C_n) for the recurrence producing p_{n+1}.

    C_0 multiplies p_{-1} = 0 and is always reported as 0. At n = 0 the
    coefficients reproduce each family's p_1 exactly (Chebyshev T has A_0 = 1
    since T_1 = x; every later A_n is 2).
    """
    n = _check_degree(n)
    kind = family.kind
    if kind is Kind.LEGENDRE:
        return RecurrenceCoeffs((2 * n + 1) / (n + 1), 0.0, n / (n + 1))
    if kind is Kind.CHEBYSHEV_T:
        if n == 0:
            return RecurrenceCoeffs(1.0, 0.0, 0.0)
        return RecurrenceCoeffs(2.0, 0.0, 1.0)
    if kind is Kind.CHEBYSHEV_U:
        return RecurrenceCoeffs(2.0, 0.0, 0.0 if n == 0 else 1.0)
    if kind is Kind.GEGENBAUER:
        a = family.alpha
        c = 0.0 if n == 0 else (n + 2 * a - 1) / (n + 1)
        return RecurrenceCoeffs(2 * (n + a) / (n + 1), 0.0, c)
    if kind is Kind.LAGUERRE:
        a = family.alpha
        c = 0.0 if n == 0 else (n + a) / (n + 1)
        return RecurrenceCoeffs(-1 / (n + 1), (2 * n + a + 1) / (n + 1), c)
    if kind is Kind.HERMITE:
        return RecurrenceCoeffs(2.0, 0.0, 2.0 * n)
    if kind is Kind.JACOBI:
        return _jacobi_coeffs(family.alpha, family.beta, n)
    raise ParameterDomainError(f"unknown family {kind!r}")


def _jacobi_coeffs(a: float, b: float, n: int) -> RecurrenceCoeffs:
    s = a + b
    if n == 0:
        # limits of the general expressions; they are 0/0 at a+b in {0, -1}
        return RecurrenceCoeffs((s + 2) / 2, (a - b) / 2, 0.0)
    # Gamma(2n+s+3)/Gamma(2n+s+1) written as a product
    A = (2 * n + s + 1) * (2 * n + s + 2) / (2 * (n + 1) * (n + s + 1))
    B = (2 * n + s + 1) * (a * a - b * b) / (2 * (n + 1) * (n + s + 1) * (2 * n + s))
    C = 2 * (n + a) * (n + b) * (2 * n + s + 2) / (2 * (n + 1) * (n + s + 1) * (2 * n + s))
    return RecurrenceCoeffs(A, B, C)


def eval_all(family: Family, n: int, x: float) -> list[float]:
    """Return [p_0(x), ..., p_n(x)] by forward recurrence."""
    n = _check_degree(n)
    values = [1.0]
    prev, cur = 0.0, 1.0
    for k in range(n):
        A, B, C = recurrence_coeffs(family, k)
        prev, cur = cur, (B + A * x) * cur - C * prev
        values.append(cur)
    return values


def eval_poly(family: Family, n: int, x: float) -> float:
    """Evaluate p_n(x) by forward recurrence."""
    n = _check_degree(n)
    prev, cur = 0.0, 1.0
    for k in range(n):
        A, B, C = recurrence_coeffs(family, k)
        prev, cur = cur, (B + A * x) * cur - C * prev
    return cur


def support(family: Family) -> tuple[float, float]:
    if family.kind is Kind.LAGUERRE:
        return (0.0, math.inf)
    if family.kind is Kind.HERMITE:
        return (-math.inf, math.inf)
    return (-1.0, 1.0)


def weight(family: Family, x: float) -> float:
    a, b = support(family)
    if not a < x < b:
        raise DomainError(f"x={x} outside the open support ({a}, {b}) of {family.label()}")
    kind = family.kind
    if kind is Kind.LEGENDRE:
        return 1.0
    if kind is Kind.CHEBYSHEV_T:
        return 1.0 / math.sqrt(1.0 - x * x)
    if kind is Kind.CHEBYSHEV_U:
        return math.sqrt(1.0 - x * x)
    if kind is Kind.GEGENBAUER:
        return (1.0 - x * x) ** (family.alpha - 0.5)
    if kind is Kind.JACOBI:
        return (1.0 - x) ** family.alpha * (1.0 + x) ** family.beta
    if kind is Kind.LAGUERRE:
        return math.exp(-x) * x ** family.alpha
    return math.exp(-x * x)


def norm_h(family: Family, n: int) -> float:
    """Norm constant h_n = int p_n^2 w."""
    n = _check_degree(n)
    kind = family.kind
    if kind is Kind.LEGENDRE:
        return 2.0 / (2 * n + 1)
    if kind is Kind.CHEBYSHEV_T:
        return math.pi if n == 0 else math.pi / 2
    if kind is Kind.CHEBYSHEV_U:
        return math.pi / 2
    if kind is Kind.GEGENBAUER:
        a = family.alpha
        return math.pi * 2.0 ** (1 - 2 * a) / (n + a) * gamma_ratio([n + 2 * a], [n + 1, a, a])
    if kind is Kind.JACOBI:
        a, b = family.alpha, family.beta
        if n == 0:
            return 2.0 ** (a + b + 1) * gamma_ratio([a + 1, b + 1], [a + b + 2])
        return (2.0 ** (a + b + 1) / (2 * n + a + b + 1)
                * gamma_ratio([n + a + 1, n + b + 1], [n + 1, n + a + b + 1]))
    if kind is Kind.LAGUERRE:
        return gamma_ratio([family.alpha + n + 1], [n + 1])
    return math.sqrt(math.pi) * 2.0 ** n * math.factorial(n)
