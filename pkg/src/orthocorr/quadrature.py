"""
Gauss quadrature for the classical weights and a quadrature oracle for R_{m,n}(y).

Rules come from the Golub-Welsch construction: the symmetrized recurrence
(Jacobi) matrix is diagonalized by an implicit-shift QL iteration that only
tracks the first component of every eigenvector. Nothing here touches the
closed-form correlation code, so it can serve as an independent check on it.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import ConvergenceError, InternalConsistencyError, ParameterDomainError
from .families import Family, eval_poly, norm_h, recurrence_coeffs

__all__ = [
    "QuadratureRule",
    "moment_zero",
    "jacobi_matrix",
    "tridiag_eigen",
    "gauss_rule",
    "oracle_points",
    "corr_oracle",
    "corr_oracle_detail",
    "corr_oracle_direct",
    "oracle_coefficients",
    "oracle_coefficients_interp",
    "MAX_QL_ITERATIONS",
]

MAX_QL_ITERATIONS = 50


@dataclass(frozen=True)
class QuadratureRule:
    family: Family
    nodes: tuple
    weights: tuple

    @property
    def N(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        return math.fsum(w * f(x) for x, w in zip(self.nodes, self.weights))


def moment_zero(family: Family) -> float:
    """Total mass of the weight, int w(x) dx."""
    return norm_h(family, 0)


def jacobi_matrix(family: Family, N: int) -> tuple[list[float], list[float]]:
    """Diagonal and off-diagonal of the N x N symmetrized recurrence matrix."""
    if N < 1:
        raise ParameterDomainError(f"need at least one node, got N={N}")
    coeffs = [recurrence_coeffs(family, k) for k in range(N + 1)]
    diag = [-c.B / c.A for c in coeffs[:N]]
    off = []
    for k in range(N - 1):
        radicand = coeffs[k + 1].C / (coeffs[k].A * coeffs[k + 1].A)
        if not radicand > 0:
            raise InternalConsistencyError(
                f"non-positive symmetrization radicand {radicand} at k={k} for {family.label()}"
            )
        off.append(math.sqrt(radicand))
    return diag, off


def tridiag_eigen(diag, offdiag) -> list[tuple[float, float]]:
    """Eigenvalues of a symmetric tridiagonal matrix with squared first eigenvector components.

    Implicit-shift QL with Wilkinson-type shifts. Only the first row of the
    accumulated rotation matrix is kept, which is all Golub-Welsch needs.
    Returns ``[(eigenvalue, z_0^2), ...]`` sorted by eigenvalue.
    """
    n = len(diag)
    if len(offdiag) != max(n - 1, 0):
        raise ValueError(f"off-diagonal must have {n - 1} entries, got {len(offdiag)}")
    d = [float(v) for v in diag]
    e = [float(v) for v in offdiag] + [0.0]
    z = [1.0] + [0.0] * (n - 1)
    eps = 2.0 ** -52

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > MAX_QL_ITERATIONS:
                raise ConvergenceError(f"QL iteration did not converge for eigenvalue {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            deflated = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    return sorted(zip(d, (zi * zi for zi in z)))


@functools.lru_cache(maxsize=512)
def gauss_rule(family: Family, N: int) -> QuadratureRule:
    """N-point Gauss rule for the weight of ``family``; exact to degree 2N-1."""
    diag, off = jacobi_matrix(family, N)
    mu0 = moment_zero(family)
    pairs = tridiag_eigen(diag, off)
    return QuadratureRule(
        family=family,
        nodes=tuple(x for x, _ in pairs),
        weights=tuple(mu0 * w for _, w in pairs),
    )


def oracle_points(m: int, n: int) -> int:
    """Node count for which the oracle integrand p_n(x) p_{n+m}(x+y) is integrated exactly."""
    return (2 * n + m + 2) // 2 + 2


def _derivatives(family: Family, n: int, x: float, order: int) -> list[float]:
    """[p_n(x), p_n'(x), ..., p_n^{(order)}(x)] from the differentiated recurrence."""
    prev = [0.0] * (order + 1)
    cur = [1.0] + [0.0] * order
    for k in range(n):
        A, B, C = recurrence_coeffs(family, k)
        nxt = [(B + A * x) * cur[j] - C * prev[j] + (j * A * cur[j - 1] if j else 0.0)
               for j in range(order + 1)]
        prev, cur = cur, nxt
    return cur


@functools.lru_cache(maxsize=4096)
def _taylor_sums(family: Family, m: int, n: int, N: int) -> tuple[tuple, tuple]:
    """Per power j of y: (sum_i t_ij, sum_i |t_ij|) with t_ij = w_i p_n(x_i) p_{n+m}^{(j)}(x_i) / j!."""
    rule = gauss_rule(family, N)
    columns = [[] for _ in range(m + 1)]
    for x, w in zip(rule.nodes, rule.weights):
        base = w * eval_poly(family, n, x)
        for j, d in enumerate(_derivatives(family, n + m, x, m)):
            columns[j].append(base * d / math.factorial(j))
    return (tuple(math.fsum(c) for c in columns),
            tuple(math.fsum(abs(t) for t in c) for c in columns))


def corr_oracle_detail(family: Family, m: int, n: int, y: float, N: int | None = None) -> tuple[float, float]:
    """Quadrature value of R_{m,n}(y) and a magnitude bounding its rounding error.

    p_{n+m}(x + y) is expanded exactly in its Taylor series about each node, and
    every power of y is integrated on its own before the powers are combined.
    Summing p_n(x) p_{n+m}(x + y) node by node instead loses up to six digits
    for |y| of a few units, where the integrand is large and oscillatory but
    the integral is small. The second number is sum_j |y|^j sum_i |term_ij|.
    """
    if m < 0 or n < 0:
        raise ParameterDomainError(f"m and n must be non-negative, got m={m}, n={n}")
    sums, mags = _taylor_sums(family, m, n, N or oracle_points(m, n))
    value = mag = 0.0
    for c, a in zip(reversed(sums), reversed(mags)):
        value = value * y + c
        mag = mag * abs(y) + a
    return value, mag


def corr_oracle(family: Family, m: int, n: int, y: float, N: int | None = None) -> float:
    """R_{m,n}(y) = int p_n(x) p_{n+m}(x+y) w(x) dx by Gauss quadrature."""
    return corr_oracle_detail(family, m, n, y, N)[0]


def corr_oracle_direct(family: Family, m: int, n: int, y: float, N: int | None = None) -> float:
    """The same integral summed node by node with p_{n+m} evaluated at x + y.

    Simple and obviously right, but see :func:`corr_oracle_detail` for its
    accuracy limits at larger |y|.
    """
    if m < 0 or n < 0:
        raise ParameterDomainError(f"m and n must be non-negative, got m={m}, n={n}")
    rule = gauss_rule(family, N or oracle_points(m, n))
    return math.fsum(w * eval_poly(family, n, x) * eval_poly(family, n + m, x + y)
                     for x, w in zip(rule.nodes, rule.weights))


def oracle_coefficients(family: Family, m: int, n: int):
    """Monomial coefficients c_0..c_m of R_{m,n}(y) by quadrature of Taylor coefficients.

    c_j = (1/j!) int p_n p_{n+m}^{(j)} w dx, exact up to rounding with the same
    rule as :func:`corr_oracle`. Each coefficient is integrated on its own, so
    small low-order coefficients keep full relative accuracy.
    """
    from .closed import CoeffVector

    if m < 0 or n < 0:
        raise ParameterDomainError(f"m and n must be non-negative, got m={m}, n={n}")
    return CoeffVector(_taylor_sums(family, m, n, oracle_points(m, n))[0])


def _chebyshev_nodes(count: int) -> list[float]:
    return [math.cos((2 * i + 1) * math.pi / (2 * count)) for i in range(count)]


def _newton_to_monomial(xs, divided) -> list[float]:
    # expand sum_k divided[k] prod_{i<k}(y - xs[i]) by nested multiplication
    coeffs = [divided[-1]]
    for k in range(len(divided) - 2, -1, -1):
        shifted = [0.0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[k] * c
        shifted[0] += divided[k]
        coeffs = shifted
    return coeffs


def oracle_coefficients_interp(family: Family, m: int, n: int):
    """Coefficients by Newton interpolation of the oracle at m+1 Chebyshev points on [-1, 1].

    Cheaper to reason about than :func:`oracle_coefficients` but limited to
    about 1e-9 relative accuracy for m <= 12.
    """
    from .closed import CoeffVector

    xs = _chebyshev_nodes(m + 1)
    divided = [corr_oracle(family, m, n, x) for x in xs]
    for level in range(1, m + 1):
        for i in range(m, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    return CoeffVector(tuple(_newton_to_monomial(xs, divided)))
