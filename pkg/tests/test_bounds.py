import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from btcodes.bounds import (
    BoundPoint, LDeltaBound, bound_curve, bound_ells, entropy_q, gv_ell, gv_tvz_crossing,
    ihara_bounds, manin_prime_bound, max_tvz_gv_gap, restrict_code_bound, restriction_good, tvz_ell,
)


def h_q(x, q):
    # direct transcription of the q-ary entropy with logs base q
    if x == 0:
        return 0.0
    return x * math.log(q - 1, q) - x * math.log(x, q) - (1 - x) * math.log(1 - x, q)


@pytest.mark.parametrize("q", [2, 3, 4, 9, 49, 64, 81, 121])
def test_entropy_endpoints(q):
    assert entropy_q(0, q) == 0
    assert abs(entropy_q(1 - 1 / q, q) - 1) < 1e-12


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 9, 49]), st.floats(0.001, 0.999))
def test_entropy_matches_formula(q, t):
    x = t * (1 - 1 / q)
    assert abs(entropy_q(x, q) - h_q(x, q)) < 1e-12


@pytest.mark.parametrize("q", [2, 9, 64])
def test_entropy_concave(q):
    hi = 1 - 1 / q
    xs = [hi * i / 400 for i in range(401)]
    ys = [entropy_q(x, q) for x in xs]
    assert all(ys[i - 1] - 2 * ys[i] + ys[i + 1] <= 1e-9 for i in range(1, 400))


def test_entropy_domain():
    with pytest.raises(ValueError):
        entropy_q(0.6, 2)
    with pytest.raises(ValueError):
        entropy_q(0.1, 1)


def test_tvz_values():
    assert tvz_ell(49) == Fraction(5, 6)
    assert tvz_ell(64) == Fraction(6, 7)
    assert tvz_ell(9) == Fraction(1, 2)
    with pytest.raises(ValueError):
        tvz_ell(27)
    with pytest.raises(ValueError):
        tvz_ell(4)


@pytest.mark.parametrize("q", [49, 64, 81, 121])
def test_crossing_exists(q):
    iv = gv_tvz_crossing(q)
    assert len(iv) == 1
    lo, hi = iv[0]
    assert 0 < lo < hi < 1 - 1 / q
    ell = float(tvz_ell(q))
    for x in (lo, hi):
        assert abs(ell - gv_ell(x, q)) < 1e-8


@pytest.mark.parametrize("q", [9, 16, 25])
def test_no_crossing_small_squares(q):
    assert gv_tvz_crossing(q) == []
    assert max_tvz_gv_gap(q) <= 0


def test_halved_entropy_never_crosses():
    for q in (49, 64, 81, 121):
        ell = float(tvz_ell(q))
        hi = 1 - 1 / q
        assert all(ell < gv_ell(hi * i / 1000, q, halved=True) for i in range(1001))


def test_ihara_bounds():
    ib = ihara_bounds(64)
    assert ib.square_exact == 7
    assert ib.zink_cubic == Fraction(2 * 15, 6)
    assert ib.serre_lower == pytest.approx(6 / 96)
    assert ib.dv_upper == pytest.approx(7)
    assert ihara_bounds(27).square_exact is None
    assert ihara_bounds(27).zink_cubic == Fraction(16, 5)
    with pytest.raises(ValueError):
        ihara_bounds(10)


def test_bound_ells():
    ells = bound_ells(49)
    assert ells["TVZ"] == Fraction(5, 6)
    assert "ZINK_CUBIC" not in ells
    # Serre's estimate is below 1 for every desk-scale q, so it gives no line
    assert "SERRE_LOWER" not in ells


def test_linear_points_exact():
    pts = bound_curve(49, ["linear"], step=0.01, ells=[Fraction(1, 3)])
    for p in pts:
        assert p.value == max(Fraction(1, 3) - p.delta, 0)
        assert isinstance(p.value, Fraction)
    assert [p.delta for p in pts] == sorted(p.delta for p in pts)


def test_bound_curve_kinds():
    pts = bound_curve(49, ["gv", "tvz"], step=0.1)
    kinds = {p.bound_kind for p in pts}
    assert kinds == {"GV", "TVZ"}
    assert pts[0].delta == 0 and pts[-1].delta == Fraction(48, 49)
    with pytest.raises(ValueError):
        bound_curve(49, ["nope"])


def test_ldelta_bound():
    b = LDeltaBound(Fraction(5, 6), Fraction(1, 3))
    assert b.rate == Fraction(1, 2)
    with pytest.raises(ValueError):
        LDeltaBound(Fraction(1, 3), Fraction(1, 2))
    with pytest.raises(ValueError):
        BoundPoint(Fraction(2), 0.0, "GV")


def test_restrict_examples():
    assert restrict_code_bound(10, 10, 1, 3) == (10, 1)
    assert restrict_code_bound(10, 4, 5, 1) == (4, 5)
    assert restrict_code_bound(10, 8, 2, 2) == (6, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 200), st.integers(0, 200), st.integers(1, 5), st.integers(1, 5))
def test_restrict_composes(n, k, s1, s2):
    k = min(k, n)
    k1, _ = restrict_code_bound(n, k, 1, s1)
    # the k-lower formula is affine in k, so apply it to k1 without the range check
    k2 = s2 * k1 - (s2 - 1) * n
    assert k2 == restrict_code_bound(n, k, 1, s1 * s2)[0]


def test_manin_examples():
    d = Fraction(1, 10)
    assert manin_prime_bound(13, 1, d) == Fraction(5, 6) - d
    assert manin_prime_bound(2, 3, 0) == Fraction(1, 7)
    assert manin_prime_bound(7, 2, 0) == 1 - Fraction(4, 48)


def test_restriction_good_examples():
    assert restriction_good(5, 1)
    assert not restriction_good(3, 1) and restriction_good(3, 2)
    assert not restriction_good(2, 2) and restriction_good(2, 3)
    assert all(restriction_good(p, m) for p in (5, 7, 11) for m in range(1, 6))
