"""
The two-variable difference equation satisfied by R_{m,n}(y):

    R_{m+1,n+1} = (A_{n+m+1}/A_{n+1}) R_{m-1,n+2}
                + (A_{n+m+1} C_{n+1}/A_{n+1}) R_{m+1,n}
                + (B_{n+m+1} + y A_{n+m+1} - (A_{n+m+1}/A_{n+1}) B_{n+1}) R_{m,n+1}
                - C_{n+m+1} R_{m-1,n+1}

used both as a residual check on any source of R values and as a way to
propagate a table from its first two rows and first column.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import IncompleteStencilError, ParameterDomainError
from .families import Family, recurrence_coeffs

__all__ = [
    "CorrTable",
    "stencil_weights",
    "recurrence_terms",
    "recurrence_residual",
    "recurrence_residual_raw",
    "required_seeds",
    "propagate_table",
]

Lookup = Union[Mapping, Callable[[int, int], float]]


@dataclass
class CorrTable:
    """R_{m,n}(y) values for one family and shift, with per-entry provenance."""

    family: Family
    y: float
    values: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    def seed(self, m: int, n: int, value: float) -> None:
        self.values[(m, n)] = float(value)
        self.provenance[(m, n)] = "seed"

    def __getitem__(self, key):
        return self.values[key]

    def __contains__(self, key):
        return key in self.values

    @classmethod
    def from_function(cls, family: Family, y: float, keys, fn) -> "CorrTable":
        table = cls(family, float(y))
        for m, n in keys:
            table.seed(m, n, fn(m, n))
        return table


def stencil_weights(family: Family, m: int, n: int, y: float) -> dict:
    """Coefficients of the right-hand side, keyed by the (m, n) they multiply."""
    if m < 1 or n < 0:
        raise ParameterDomainError(f"stencil needs m >= 1 and n >= 0, got m={m}, n={n}")
    A1, B1, C1 = recurrence_coeffs(family, n + 1)
    Ak, Bk, Ck = recurrence_coeffs(family, n + m + 1)
    ratio = Ak / A1
    return {
        (m - 1, n + 2): ratio,
        (m + 1, n): ratio * C1,
        (m, n + 1): Bk + y * Ak - ratio * B1,
        (m - 1, n + 1): -Ck,
    }


def _get(lookup: Lookup, key) -> float:
    try:
        if isinstance(lookup, Mapping):
            return lookup[key]
        return lookup(*key)
    except KeyError:
        raise IncompleteStencilError(f"stencil entry R{key} is missing") from None


def recurrence_terms(family: Family, m: int, n: int, y: float, lookup: Lookup) -> list[float]:
    """[R_{m+1,n+1}, -w_1 R_1, ..., -w_4 R_4]; these sum to zero for exact R."""
    terms = [_get(lookup, (m + 1, n + 1))]
    for key, w in stencil_weights(family, m, n, y).items():
        terms.append(-w * _get(lookup, key))
    return terms


def recurrence_residual_raw(family: Family, m: int, n: int, y: float, lookup: Lookup) -> float:
    return math.fsum(recurrence_terms(family, m, n, y, lookup))


def recurrence_residual(family: Family, m: int, n: int, y: float, lookup: Lookup) -> float:
    """Residual of the difference equation divided by the largest term magnitude.

    Returns 0 when every term vanishes.
    """
    terms = recurrence_terms(family, m, n, y, lookup)
    scale = max(abs(t) for t in terms)
    if scale == 0.0:
        return 0.0
    return abs(math.fsum(terms)) / scale


def _row_extent(m: int, m_max: int, n_max: int) -> int:
    # row m-1 must reach one column further than row m+1
    return n_max + (m_max - m + 1) // 2


def required_seeds(m_max: int, n_max: int) -> list[tuple[int, int]]:
    """Entries ``propagate_table`` needs before it can fill rows 2..m_max.

    Rows m = 0 and m = 1 up to column n_max + ceil((m_max - m) / 2), and the
    column n = 0 for 2 <= m <= m_max.
    """
    keys = [(m, n) for m in (0, 1) if m <= m_max for n in range(_row_extent(m, m_max, n_max) + 1)]
    keys += [(m, 0) for m in range(2, m_max + 1)]
    return keys


def propagate_table(family: Family, y: float, m_max: int, n_max: int, seeds: CorrTable) -> CorrTable:
    """Fill R_{m,n}(y) for 2 <= m <= m_max by solving the difference equation for R_{m+1,n+1}.

    Rows are swept in increasing m, each row in increasing n. Entries beyond
    n_max that later rows depend on are computed and kept as well.
    """
    if m_max < 0 or n_max < 0:
        raise ParameterDomainError(f"m_max and n_max must be non-negative, got {m_max}, {n_max}")
    missing = [k for k in required_seeds(m_max, n_max) if k not in seeds.values]
    if missing:
        raise IncompleteStencilError(f"seed table lacks {len(missing)} entries, first {missing[0]}")

    table = CorrTable(family, float(y), dict(seeds.values), dict(seeds.provenance))
    for row in range(2, m_max + 1):
        m = row - 1
        for col in range(1, _row_extent(row, m_max, n_max) + 1):
            if (row, col) in table.values and table.provenance.get((row, col)) == "seed":
                continue
            n = col - 1
            total = math.fsum(w * table.values[key]
                              for key, w in stencil_weights(family, m, n, y).items())
            table.values[(row, col)] = total
            table.provenance[(row, col)] = "propagated"
    return table
