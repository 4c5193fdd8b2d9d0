import math

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from orthocorr.errors import (
    IllPosedSeriesError, NotTerminatingError, PoleError, TransformInapplicableError,
)
from orthocorr.hypergeom import (
    AppellF2Spec, HypSeriesSpec, appell_f2_graded, appell_f2_graded_exact, appell_f2_symmetric_sum,
    appell_f2_terminating, f2_symmetric_to_4f3, gamma_ratio, is_saalschutzian, lemma1_reverse,
    lemma2_shift, ln_gamma_signed, nonpositive_int, pfq_regularized_sum, pfq_sum, pfq_terminating,
    pochhammer,
)


def mp_pfq(upper, lower, x, K):
    """Direct summation at 40 digits, the oracle for every pFq test here."""
    with mpmath.workdps(40):
        total, t = mpmath.mpf(1), mpmath.mpf(1)
        for k in range(K):
            t *= mpmath.fprod(mpmath.mpf(a) + k for a in upper) / mpmath.fprod(mpmath.mpf(b) + k for b in lower)
            t *= mpmath.mpf(x) / (k + 1)
            total += t
        return total


# --- gamma and pochhammer ----------------------------------------------------

def test_ln_gamma_examples():
    v, s = ln_gamma_signed(5.0)
    assert (v, s) == (pytest.approx(math.log(24)), 1)
    v, s = ln_gamma_signed(0.5)
    assert (v, s) == (pytest.approx(math.log(math.sqrt(math.pi))), 1)
    v, s = ln_gamma_signed(-1.5)
    assert s == 1 and v == pytest.approx(math.log(4 * math.sqrt(math.pi) / 3), rel=1e-14)
    assert ln_gamma_signed(-0.5)[1] == -1


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_ln_gamma_poles(x):
    with pytest.raises(PoleError):
        ln_gamma_signed(x)


@settings(max_examples=200, deadline=None)
@given(st.floats(-50, 170).filter(lambda x: abs(x - round(x)) > 1e-6 or x > 0.5))
def test_ln_gamma_against_mpmath(x):
    v, s = ln_gamma_signed(x)
    g = mpmath.gamma(mpmath.mpf(x))
    assert s == (1 if g > 0 else -1)
    # relative error of Gamma itself is the absolute error of its logarithm
    assert abs(v - float(mpmath.log(abs(g)))) <= 1e-13 * max(1.0, abs(float(mpmath.log(abs(g)))))


def test_gamma_ratio_examples():
    assert gamma_ratio([5], [3]) == pytest.approx(12.0)
    assert gamma_ratio([1], [0]) == 0.0
    assert gamma_ratio([2.5], [0.5]) == pytest.approx(0.75)
    assert gamma_ratio([3.5, 2], [-4]) == 0.0
    with pytest.raises(PoleError):
        gamma_ratio([-2], [1])


def test_gamma_ratio_large_arguments():
    # the log path takes over beyond the range of math.gamma
    want = mpmath.gamma(300.5) / mpmath.gamma(298.25)
    assert gamma_ratio([300.5], [298.25]) == pytest.approx(float(want), rel=1e-12)


def test_pochhammer_examples():
    assert pochhammer(3, 4) == 360
    assert pochhammer(-2, 5) == 0
    assert pochhammer(0.37, 0) == 1


def test_nonpositive_int():
    assert nonpositive_int(-3.0) == 3
    assert nonpositive_int(0.0) == 0
    assert nonpositive_int(-2.5) is None
    assert nonpositive_int(2.0) is None


# --- terminating pFq -----------------------------------------------------------

def test_pfq_examples():
    assert pfq_terminating(HypSeriesSpec((-1, 2), (3,), 2.0)) == pytest.approx(-1 / 3)
    assert pfq_terminating(HypSeriesSpec((-2, 1), (1,), 1.0)) == pytest.approx(0.0, abs=1e-15)
    assert pfq_terminating(HypSeriesSpec((-4, 2), (5,), 1.0)) == pytest.approx(3 / 14)
    assert pfq_terminating(HypSeriesSpec((0, 2.3), (-1.5,), 7.0)) == 1.0


def test_spec_termination_index():
    assert HypSeriesSpec((-3, -1, 2), (1,), 0.5).K == 1
    assert HypSeriesSpec((0.5,), (1,), 0.5, termination=4).K == 4
    with pytest.raises(NotTerminatingError):
        HypSeriesSpec((0.5, 1.5), (2,), 0.5).K


def test_termination_before_pole():
    # upper (1-m)/2 = 0 stops the series before the lower 1-m = 0 pole is reached
    assert pfq_terminating(HypSeriesSpec((-0.5, 0.0, 0.0, 0.5), (0.0, -1.0, 2.0), 4.0)) == 1.0


def test_lower_pole_before_termination():
    with pytest.raises(IllPosedSeriesError):
        pfq_terminating(HypSeriesSpec((-4, 1.5), (-2,), 0.3))


params = st.floats(-8, 8).filter(lambda v: abs(v - round(v)) > 0.02)


@settings(max_examples=150, deadline=None)
@given(K=st.integers(0, 12), upper=st.lists(params, min_size=0, max_size=3),
       lower=st.lists(params, min_size=0, max_size=3), x=st.floats(-3, 3))
def test_pfq_against_mpmath(K, upper, lower, x):
    spec = HypSeriesSpec((-float(K), *upper), tuple(lower), x)
    value, mag = pfq_sum(spec)
    want = float(mp_pfq(spec.upper, spec.lower, x, K))
    # the direct sum is reliable to rounding relative to its term magnitudes
    assert abs(value - want) <= 1e-11 * max(abs(want), 1e-3 * mag) + 1e-300


# --- lemma 1 ---------------------------------------------------------------------

def test_lemma1_example():
    spec = HypSeriesSpec((-1, 2), (3,), 2.0)
    pre, rev = lemma1_reverse(spec)
    assert pre == pytest.approx(-4 / 3)
    assert rev.upper == (-1.0, -3.0) and rev.lower == (-2.0,) and rev.argument == 0.5
    assert pfq_terminating(rev) == pytest.approx(0.25)
    assert pre * pfq_terminating(rev) == pytest.approx(pfq_terminating(spec))


def test_lemma1_trivial_and_3f2():
    pre, rev = lemma1_reverse(HypSeriesSpec((0, 1.5), (2.5,), 0.7))
    assert pre == 1.0 and pfq_terminating(rev) == 1.0
    spec = HypSeriesSpec((-2, 1.5, 2.5), (2, 4), 1.3)
    pre, rev = lemma1_reverse(spec)
    assert pre * pfq_terminating(rev) == pytest.approx(pfq_terminating(spec), rel=1e-13)


def test_lemma1_inapplicable():
    with pytest.raises(TransformInapplicableError):
        lemma1_reverse(HypSeriesSpec((-3, 1.5), (-1,), 0.5))  # (b)_3 = 0
    with pytest.raises(TransformInapplicableError):
        lemma1_reverse(HypSeriesSpec((-3, 1.5), (2, 3), 0.5))  # not (p+1)F(p)
    with pytest.raises(TransformInapplicableError):
        lemma1_reverse(HypSeriesSpec((-3, 1.5), (2,), 0.0))


@settings(max_examples=100, deadline=None)
@given(n=st.integers(0, 10), a=st.lists(params, min_size=1, max_size=3), data=st.data())
def test_lemma1_identity_and_involution(n, a, data):
    b = data.draw(st.lists(params, min_size=len(a), max_size=len(a)))
    x = data.draw(st.floats(0.2, 2.0)) * data.draw(st.sampled_from([-1, 1]))
    spec = HypSeriesSpec((-float(n), *a), tuple(b), x)
    pre, rev = lemma1_reverse(spec)
    lhs, mag = pfq_sum(spec)
    rhs, rmag = pfq_sum(rev)
    assert abs(lhs - pre * rhs) <= 1e-11 * max(mag, abs(pre) * rmag)
    pre2, back = lemma1_reverse(rev)
    assert pre * pre2 == pytest.approx(1.0, rel=1e-12)
    assert sorted(back.upper) == pytest.approx(sorted(spec.upper), rel=1e-13)
    assert sorted(back.lower) == pytest.approx(sorted(spec.lower), rel=1e-13)
    assert back.argument == pytest.approx(x, rel=1e-15)


# --- lemma 2 ---------------------------------------------------------------------

def test_lemma2_nonterminating_example():
    spec = HypSeriesSpec((1.0, 1.0), (0.0,), 0.5)
    pre, shifted = lemma2_shift(spec)
    assert pre == pytest.approx(0.5)
    assert shifted.upper == (2.0, 2.0) and shifted.lower == (2.0,)
    # 2F1(2, 2; 2; 0.5) = (1 - 0.5)^-2 = 4, so the regularized value is 2
    assert pre * float(mpmath.hyp2f1(2, 2, 2, 0.5)) == pytest.approx(2.0)


def test_lemma2_zero_argument():
    pre, _ = lemma2_shift(HypSeriesSpec((-3, 1.5), (0.0,), 0.0))
    assert pre == 0.0


def test_lemma2_terminating_against_regularized_sum():
    spec = HypSeriesSpec((-6, 1.7, -2.3), (-2, 0.4), 0.9)
    lhs, mag = pfq_regularized_sum(spec)
    pre, shifted = lemma2_shift(spec)
    assert shifted.K == 3
    assert pre * pfq_terminating(shifted) == pytest.approx(lhs, rel=1e-13)
    # the regularized series starts at k = M + 1 = 3
    with mpmath.workdps(40):
        want = mpmath.fsum(
            mpmath.rf(-6, k) * mpmath.rf(mpmath.mpf("1.7"), k) * mpmath.rf(mpmath.mpf("-2.3"), k)
            / mpmath.rf(mpmath.mpf("0.4"), k) * mpmath.mpf("0.9") ** k
            / (mpmath.factorial(k) * mpmath.factorial(k - 3))
            for k in range(3, 7))
    assert lhs == pytest.approx(float(want), rel=1e-12)


def test_lemma2_inapplicable():
    with pytest.raises(TransformInapplicableError):
        lemma2_shift(HypSeriesSpec((-3, 1.5), (2.5,), 0.5))
    with pytest.raises(TransformInapplicableError):
        lemma2_shift(HypSeriesSpec((-3, 1.5), (-1, -2), 0.5))
    with pytest.raises(TransformInapplicableError):
        lemma2_shift(HypSeriesSpec((-3, 1.5), (-1, -2.0 + 0.0, 0.5), 0.5))


@settings(max_examples=100, deadline=None)
@given(M=st.integers(0, 5), extra=st.integers(0, 6), a=st.lists(params, max_size=2), data=st.data())
def test_lemma2_identity(M, extra, a, data):
    b = data.draw(st.lists(params, min_size=len(a), max_size=len(a)))
    x = data.draw(st.floats(0.2, 2.0)) * data.draw(st.sampled_from([-1, 1]))
    spec = HypSeriesSpec((-float(M + 1 + extra), *a), (-float(M), *b), x)
    lhs, mag = pfq_regularized_sum(spec)
    pre, shifted = lemma2_shift(spec)
    rhs, rmag = pfq_sum(shifted)
    assert abs(lhs - pre * rhs) <= 1e-11 * max(mag, abs(pre) * rmag)
    # independent check of the regularized left side with mpmath
    with mpmath.workdps(40):
        want = mpmath.fsum(
            mpmath.fprod(mpmath.rf(mpmath.mpf(u), k) for u in spec.upper)
            / mpmath.fprod(mpmath.rf(mpmath.mpf(v), k) for v in b)
            * mpmath.mpf(x) ** k / (mpmath.factorial(k) * mpmath.factorial(k - M - 1))
            for k in range(M + 1, spec.K + 1))
    assert abs(lhs - float(want)) <= 1e-12 * max(mag, 1e-300)


# --- Appell F2 -------------------------------------------------------------------

def test_f2_examples():
    assert appell_f2_terminating(AppellF2Spec(-3, 1.2, 0.4, 2.5, -0.7, 0.0, 0.0)) == 1.0
    assert appell_f2_terminating(AppellF2Spec(-1, 2, 1, 3, 4, 0.3, 0.2)) == pytest.approx(0.75)


def test_f2_requires_termination():
    with pytest.raises(NotTerminatingError):
        appell_f2_terminating(AppellF2Spec(-1.5, 2, 1, 3, 4, 0.3, 0.2))


def mp_f2(a, b1, b2, c1, c2, x, y):
    m = -int(a)
    with mpmath.workdps(40):
        return mpmath.fsum(
            mpmath.rf(a, j + k) * mpmath.rf(b1, j) * mpmath.rf(b2, k)
            / (mpmath.rf(c1, j) * mpmath.rf(c2, k) * mpmath.factorial(j) * mpmath.factorial(k))
            * mpmath.mpf(x) ** j * mpmath.mpf(y) ** k
            for j in range(m + 1) for k in range(m + 1 - j))


@settings(max_examples=80, deadline=None)
@given(m=st.integers(0, 8), b1=params, b2=params, c1=params, c2=params,
       x=st.floats(-2, 2), y=st.floats(-2, 2))
def test_f2_against_mpmath(m, b1, b2, c1, c2, x, y):
    spec = AppellF2Spec(-m, b1, b2, c1, c2, x, y)
    g, mag = appell_f2_graded(spec)
    want = float(mp_f2(-m, b1, b2, c1, c2, x, y))
    assert abs(math.fsum(g) - want) <= 1e-12 * max(math.fsum(mag), 1e-300)
    exact = appell_f2_graded_exact(spec)
    assert abs(math.fsum(exact) - want) <= 1e-13 * max(math.fsum(mag), 1e-300)


def test_f2_exact_grading_removes_cancellation():
    # a Jacobi-type instance where the float sums of one degree cancel heavily
    spec = AppellF2Spec(-11, 2.5 + 8 + 1, -2.5 - 11 - 8, -0.4 + 2.5 + 18, 0.4 - 2.5 - 38, -2.0, 2.0)
    exact = appell_f2_graded_exact(spec)
    with mpmath.workdps(50):
        for s in (9, 10):
            want = mpmath.fsum(
                mpmath.rf(spec.a, s) * mpmath.rf(spec.b1, j) * mpmath.rf(spec.b2, s - j)
                / (mpmath.rf(spec.c1, j) * mpmath.rf(spec.c2, s - j) * mpmath.factorial(j) * mpmath.factorial(s - j))
                * mpmath.mpf(-2) ** j * mpmath.mpf(2) ** (s - j) for j in range(s + 1))
            assert exact[s] == pytest.approx(float(want), rel=1e-14)


@settings(max_examples=60, deadline=None)
@given(m=st.integers(0, 6), b1=params, b2=params, c1=params, c2=params, x=st.floats(-1.5, 1.5))
def test_symmetric_single_sum(m, b1, b2, c1, c2, x):
    # the inner 3F2 has lower parameters 1 - b2 - k; keep them off the poles
    assume(all(abs(1 - b2 - k - round(1 - b2 - k)) > 0.02 for k in range(m + 1)))
    g, mag = appell_f2_graded(AppellF2Spec(-m, b1, b2, c1, c2, -x, x))
    single = appell_f2_symmetric_sum(-m, b1, b2, c1, c2, x)
    assert abs(math.fsum(g) - single) <= 1e-11 * max(math.fsum(mag), 1e-300)


def test_f2_to_4f3_examples():
    spec = f2_symmetric_to_4f3(-2, 1.5, 0.5, 0.4)
    direct = appell_f2_terminating(AppellF2Spec(-2, 1.5, 0.5, 3.0, 1.0, -0.4, 0.4))
    assert pfq_terminating(spec) == pytest.approx(direct, rel=1e-13)
    assert pfq_terminating(f2_symmetric_to_4f3(-3, 1.5, 0.5, 0.0)) == 1.0


def test_f2_to_4f3_gegenbauer_parameters():
    alpha, m, n = 0.7, 5, 3
    spec = f2_symmetric_to_4f3(-m, alpha + n + 0.5, 0.5 - alpha - m - n, 2.0)
    assert spec.upper == pytest.approx((-m / 2, (1 - m) / 2, (1 - m) / 2, (2 - m) / 2))
    assert spec.lower == pytest.approx((n + alpha + 1, 1 - m - n - alpha, 1 - m))
    assert spec.argument == 4.0


def test_f2_to_4f3_pattern_mismatch():
    with pytest.raises(TransformInapplicableError):
        f2_symmetric_to_4f3(-2, 1.5, 0.5, 0.4, c1=3.1)
    with pytest.raises(TransformInapplicableError):
        f2_symmetric_to_4f3(-2.5, 1.5, 0.5, 0.4)


@settings(max_examples=80, deadline=None)
@given(m=st.integers(0, 8), b1=params, b2=params, x=st.floats(-1.5, 1.5))
def test_f2_to_4f3_identity(m, b1, b2, x):
    assume(abs(2 * b1 - round(2 * b1)) > 0.05 and abs(2 * b2 - round(2 * b2)) > 0.05)
    g, mag = appell_f2_graded(AppellF2Spec(-m, b1, b2, 2 * b1, 2 * b2, -x, x))
    value, rmag = pfq_sum(f2_symmetric_to_4f3(-m, b1, b2, x))
    assert abs(math.fsum(g) - value) <= 1e-11 * max(math.fsum(mag), rmag)


def test_saalschutz_predicate():
    # balanced: sum of lower parameters = 1 + sum of upper parameters
    assert is_saalschutzian(HypSeriesSpec((-2, 1.5, 0.5), (2.5, -1.5), 1.0))
    assert not is_saalschutzian(HypSeriesSpec((-2, 1.5, 0.5), (2.5, -1.4), 1.0))
    # the argument plays no part in the balance condition
    assert is_saalschutzian(HypSeriesSpec((-2, 1.5, 0.5), (2.5, -1.5), 0.9))
