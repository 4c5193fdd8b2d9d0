import math

import pytest
from hypothesis import given, settings, strategies as st

from orthocorr.closed import corr_value
from orthocorr.errors import IncompleteStencilError, ParameterDomainError
from orthocorr.families import Family
from orthocorr.quadrature import corr_oracle
from orthocorr.recurrence import (
    CorrTable, propagate_table, recurrence_residual, recurrence_residual_raw, recurrence_terms,
    required_seeds, stencil_weights,
)

FAMILIES = [
    Family.legendre(), Family.chebyshev_t(), Family.chebyshev_u(), Family.gegenbauer(0.6),
    Family.jacobi(0.3, -0.4), Family.jacobi(2.0, 1.5), Family.laguerre(0.0), Family.laguerre(1.5),
    Family.hermite(),
]
ids = [f.label() for f in FAMILIES]


def test_hermite_stencil():
    w = stencil_weights(Family.hermite(), 2, 1, 0.5)
    assert w == {(1, 3): 1.0, (3, 1): 4.0, (2, 2): 1.0, (1, 2): -8.0}


def test_laguerre_stencil_ratio():
    for m in range(1, 6):
        for n in range(5):
            w = stencil_weights(Family.laguerre(0.7), m, n, 0.3)
            assert (n + m + 2) * w[(m - 1, n + 2)] == pytest.approx(n + 2)


def test_stencil_domain():
    with pytest.raises(ParameterDomainError):
        stencil_weights(Family.legendre(), 0, 1, 0.5)
    with pytest.raises(ParameterDomainError):
        stencil_weights(Family.legendre(), 1, -1, 0.5)


def test_hermite_residual_is_zero():
    H = Family.hermite()
    c = lambda m, n: 2.0 ** (n + m) * math.sqrt(math.pi) * math.prod(range(m + 1, m + n + 1))  # noqa: E731
    for m in range(1, 5):
        for n in range(4):
            y = 0.7
            lookup = lambda a, b: c(a, b) * y ** a  # noqa: E731
            assert recurrence_residual(H, m, n, y, lookup) <= 1e-15


def test_residual_with_mapping_and_missing_entry():
    fam = Family.legendre()
    table = {(a, b): corr_value(fam, a, b, 0.4) for a in range(4) for b in range(5)}
    assert recurrence_residual(fam, 1, 1, 0.4, table) <= 1e-14
    assert len(recurrence_terms(fam, 1, 1, 0.4, table)) == 5
    del table[(0, 3)]
    with pytest.raises(IncompleteStencilError):
        recurrence_residual(fam, 1, 1, 0.4, table)
    # the error is also a KeyError, for callers that treat tables as mappings
    with pytest.raises(KeyError):
        recurrence_residual_raw(fam, 1, 1, 0.4, table)


def test_all_zero_terms():
    assert recurrence_residual(Family.legendre(), 1, 1, 0.4, lambda a, b: 0.0) == 0.0


@pytest.mark.parametrize("fam", FAMILIES, ids=ids)
def test_oracle_satisfies_the_difference_equation(fam):
    # independent of the closed forms: the quadrature values themselves obey the equation
    for y in (-1.4, 0.6):
        for m in range(1, 7):
            for n in range(6):
                assert recurrence_residual(fam, m, n, y, lambda a, b: corr_oracle(fam, a, b, y)) <= 1e-11


@settings(max_examples=50, deadline=None)
@given(fam=st.sampled_from(FAMILIES), m=st.integers(1, 10), n=st.integers(0, 10), y=st.floats(-3, 3))
def test_closed_forms_satisfy_the_difference_equation(fam, m, n, y):
    assert recurrence_residual(fam, m, n, y, lambda a, b: corr_value(fam, a, b, y)) <= 1e-9


def test_required_seeds():
    assert required_seeds(1, 0) == [(0, 0), (0, 1), (1, 0)]
    keys = required_seeds(4, 2)
    assert (0, 2 + 2) in keys and (0, 5) not in keys
    assert (1, 2 + 2) in keys and (1, 4) in keys and (1, 5) not in keys
    assert [(m, 0) for m in (2, 3, 4)] == [k for k in keys if k[0] >= 2]


def test_propagation_needs_every_seed():
    fam = Family.legendre()
    keys = required_seeds(4, 3)[:-1]
    seeds = CorrTable.from_function(fam, 0.5, keys, lambda m, n: corr_value(fam, m, n, 0.5))
    with pytest.raises(IncompleteStencilError):
        propagate_table(fam, 0.5, 4, 3, seeds)
    with pytest.raises(ParameterDomainError):
        propagate_table(fam, 0.5, -1, 3, seeds)


def test_single_row_table_is_just_the_seeds():
    fam = Family.chebyshev_t()
    seeds = CorrTable.from_function(fam, 0.5, required_seeds(1, 3), lambda m, n: corr_value(fam, m, n, 0.5))
    table = propagate_table(fam, 0.5, 1, 3, seeds)
    assert table.values == seeds.values
    assert set(table.provenance.values()) == {"seed"}


@pytest.mark.parametrize("fam,y,tol", [(Family.hermite(), 0.8, 1e-9), (Family.chebyshev_t(), 0.5, 1e-7),
                                       (Family.laguerre(1.5), -1.3, 1e-7), (Family.jacobi(0.3, -0.4), 0.5, 1e-7)],
                         ids=["hermite", "chebyshev-t", "laguerre", "jacobi"])
def test_propagation_from_oracle_seeds(fam, y, tol):
    m_max, n_max = 7, 5
    seeds = CorrTable.from_function(fam, y, required_seeds(m_max, n_max), lambda m, n: corr_oracle(fam, m, n, y))
    table = propagate_table(fam, y, m_max, n_max, seeds)
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            want = corr_value(fam, m, n, y)
            assert abs(table[(m, n)] - want) <= tol * abs(want) + 1e-12, (m, n)
            assert table.provenance[(m, n)] == ("seed" if m < 2 or n == 0 else "propagated")


def test_propagation_is_deterministic():
    fam = Family.gegenbauer(0.6)
    seeds = CorrTable.from_function(fam, 0.9, required_seeds(6, 4), lambda m, n: corr_oracle(fam, m, n, 0.9))
    a = propagate_table(fam, 0.9, 6, 4, seeds)
    b = propagate_table(fam, 0.9, 6, 4, seeds)
    assert a.values == b.values
    assert seeds.values == CorrTable.from_function(
        fam, 0.9, required_seeds(6, 4), lambda m, n: corr_oracle(fam, m, n, 0.9)).values
