"""Tests for surfaces, 3-fold Chern numbers and blow-ups."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from topology.flags import TriState
from topology.surface import connect_sum_cp2bar, cp2_surface, k3_surface, mk_surface
from topology.threefold import (
    CharNumbers, ThreeFold, blow_up, chern_relation, same_underlying_c3, todd_genus,
)
from utils.errors import DomainError, IntegralityError


def _threefold(c1_cubed, c1c2, c3, spin=False, almost_complex_only=False):
    return ThreeFold(
        numbers=CharNumbers(c1_cubed, c1c2, c3),
        spin=spin,
        kahler_type=TriState.UNKNOWN,
        simply_connected=TriState.UNKNOWN,
        almost_complex_only=almost_complex_only,
    )


threefolds = st.builds(
    lambda a, b, c, spin: _threefold(8 * a, 24 * b, c, spin=spin),
    st.integers(-1000, 1000), st.integers(-1000, 1000),
    st.integers(-1000, 1000), st.booleans(),
)


def test_k3_surface():
    k3 = k3_surface()
    assert k3.c1_squared == 0, f"c1^2(K3) should be 0, got {k3.c1_squared}"
    assert k3.todd == 2
    assert k3.p1 == -48
    assert k3.simply_connected is TriState.YES


def test_cp2_surface():
    cp2 = cp2_surface()
    assert cp2.c1_squared == 9
    assert cp2.todd == 1


def test_mk_surface_accepts_bool_simply_connected():
    s = mk_surface("S", 4, 0, spin=True, kahler=True, simply_connected=False)
    assert s.simply_connected is TriState.NO
    assert s.provenance == ("surface S (chi=4, tau=0)",)


def test_mk_surface_rejects_complex_with_fractional_todd():
    with pytest.raises(IntegralityError):
        mk_surface("bad", 5, 1, spin=False, kahler=False, simply_connected=TriState.UNKNOWN)


def test_mk_surface_rejects_odd_chi_plus_tau():
    with pytest.raises(IntegralityError):
        mk_surface("odd", 3, 0, False, False, TriState.UNKNOWN, complex=False)


def test_non_complex_surface_may_have_fractional_todd():
    s4 = mk_surface("S4", 2, 0, spin=True, kahler=False, simply_connected=True, complex=False)
    assert s4.todd == Fraction(1, 2)


def test_kahler_requires_complex():
    with pytest.raises(DomainError):
        mk_surface("X", 2, 0, spin=True, kahler=True, simply_connected=True, complex=False)


def test_connect_sum_cp2bar():
    s = connect_sum_cp2bar(k3_surface(), 5)
    assert (s.chi, s.tau) == (29, -21)
    assert s.c1_squared == -5
    assert not s.spin
    assert s.cp2bar_count == 5
    assert s.provenance[-1] == "connect_sum_cp2bar(5)"


def test_connect_sum_zero_is_identity():
    k3 = k3_surface()
    assert connect_sum_cp2bar(k3, 0) is k3


def test_connect_sum_negative_count():
    with pytest.raises(DomainError):
        connect_sum_cp2bar(k3_surface(), -1)


@given(st.integers(0, 200), st.integers(0, 200))
def test_connect_sum_decrements_c1_squared(k, j):
    s = connect_sum_cp2bar(k3_surface(), k)
    assert s.c1_squared == -k
    t, u = connect_sum_cp2bar(s, j), connect_sum_cp2bar(k3_surface(), k + j)
    assert (t.chi, t.tau, t.cp2bar_count) == (u.chi, u.tau, u.cp2bar_count)
    assert s.todd == 2


def test_todd_genus():
    assert todd_genus(CharNumbers(64, 24, 4)) == 1
    assert todd_genus(CharNumbers(0, -48, 0)) == -2


def test_threefold_rejects_c1c2_not_divisible_by_24():
    with pytest.raises(IntegralityError):
        _threefold(0, 12, 0)


def test_spin_threefold_needs_c1_cubed_divisible_by_8():
    with pytest.raises(IntegralityError):
        _threefold(4, 24, 0, spin=True)
    assert _threefold(4, 24, 0).c1_cubed == 4


def test_chern_relation():
    assert chern_relation(64, 16) == 24
    assert chern_relation(0, -96) == 48
    with pytest.raises(IntegralityError):
        chern_relation(1, 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
       st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_chern_relation_is_linear(a, b, c, d):
    a, b, c, d = 2 * a, 2 * b, 2 * c, 2 * d
    assert chern_relation(a + c, b + d) == chern_relation(a, b) + chern_relation(c, d)


def test_blow_up_example():
    x = blow_up(_threefold(64, 24, 4, spin=True), 1)
    assert x.numbers.as_tuple() == (72, 24, 6)
    assert x.provenance == ("blow_up(1)",)


@given(threefolds, st.integers(0, 50), st.integers(0, 50))
def test_blow_up_is_additive(x, a, b):
    assert blow_up(blow_up(x, a), b) == blow_up(x, a + b)
    y = blow_up(x, a)
    assert (y.c1_cubed - x.c1_cubed, y.c1c2 - x.c1c2, y.c3 - x.c3) == (8 * a, 0, 2 * a)
    assert y.spin == x.spin
    assert y.todd == x.todd


def test_blow_up_zero_is_identity():
    x = _threefold(0, 48, 48)
    assert blow_up(x, 0) is x


def test_blow_up_rejects_negative_count():
    with pytest.raises(DomainError):
        blow_up(_threefold(0, 48, 48), -2)


def test_blow_up_rejects_almost_complex_records():
    with pytest.raises(DomainError):
        blow_up(_threefold(8, 0, 4, almost_complex_only=True), 1)


def test_same_underlying_c3():
    assert same_underlying_c3(_threefold(0, 24, 48), _threefold(-48, 48, 48))
    assert not same_underlying_c3(_threefold(0, 24, 48), _threefold(0, 24, 50))


def test_tristate_parse():
    assert TriState.parse("YES") is TriState.YES
    assert str(TriState.UNKNOWN) == "unknown"
    with pytest.raises(ValueError):
        TriState.parse("maybe")


def test_todd_genus_rejects_non_multiples_of_24():
    with pytest.raises(IntegralityError):
        todd_genus(CharNumbers(0, 36, 0))


def test_blow_up_k3_product():
    assert blow_up(_threefold(0, 48, 48, spin=True), 1).numbers.as_tuple() == (8, 48, 50)


def test_connect_sum_of_quadric():
    quadric = mk_surface("CP1xCP1", 4, 0, spin=True, kahler=True, simply_connected=True)
    s = connect_sum_cp2bar(quadric, 14)
    assert (s.chi, s.tau, s.c1_squared) == (18, -14, -6)
