"""Tests for the graded ring engine and the ring oracle."""

import pytest
from hypothesis import given, strategies as st

from cohomology.bundles import cp3_ring, projective_bundle_ring, surface_characteristic_ring
from cohomology.oracle import (
    Cp3, ProductK3Sphere, ProjCanonical, TwistorSymmetric, chern_numbers_via_ring,
)
from cohomology.ring import RingPresentation, integrate, mk_graded_ring
from constructions.catalogue import standard_surface
from constructions.policy import AsdPolicy
from constructions.threefolds import (
    cp3_almost_complex, k3_pullback_family, proj_canonical_threefold, twistor_threefold,
)
from topology.surface import connect_sum_cp2bar, cp2_surface, k3_surface, mk_surface
from utils.errors import DomainError, RingError


def test_cp3_ring_integrals():
    ring = cp3_ring()
    h = ring.element("H")
    assert integrate(h * h * h) == 1
    assert integrate(4 * h * (6 * (h * h))) == 24


def test_unit_acts_as_identity():
    ring = cp3_ring()
    h2 = ring.element("H2")
    assert ring.unit * h2 == h2


def test_integrate_requires_top_degree():
    ring = cp3_ring()
    with pytest.raises(RingError):
        integrate(ring.element("H2"))


def test_adding_classes_of_different_degree_fails():
    ring = cp3_ring()
    with pytest.raises(RingError):
        ring.element("H") + ring.element("H2")


def test_products_above_top_degree_vanish():
    ring = cp3_ring()
    assert (ring.element("H3") * ring.element("H")).is_zero()


def test_halve():
    ring = cp3_ring()
    h = ring.element("H")
    assert (4 * h).halve() == 2 * h
    with pytest.raises(RingError):
        (3 * h).halve()


def test_missing_volume_class():
    with pytest.raises(RingError, match="missing volume class"):
        mk_graded_ring(RingPresentation(basis={0: ["1"], 2: ["a"]}, volume="v"))


def test_wrong_volume_label():
    with pytest.raises(RingError):
        mk_graded_ring(RingPresentation(basis={0: ["1"], 6: ["v"]}, volume="w"))


def test_degree_zero_must_be_the_unit():
    with pytest.raises(RingError):
        mk_graded_ring(RingPresentation(basis={0: ["1", "e"], 6: ["v"]}, volume="v"))


def test_product_degree_mismatch():
    with pytest.raises(RingError):
        mk_graded_ring(RingPresentation(
            basis={0: ["1"], 2: ["a"], 4: ["b"], 6: ["v"]},
            products={("a", "a"): {"v": 1}},
            volume="v",
        ))


def test_unknown_label_in_product():
    with pytest.raises(RingError):
        mk_graded_ring(RingPresentation(
            basis={0: ["1"], 2: ["a"], 6: ["v"]},
            products={("a", "z"): {"v": 1}},
            volume="v",
        ))


def test_non_commutative_table_rejected():
    with pytest.raises(RingError, match="commutative"):
        mk_graded_ring(RingPresentation(
            basis={0: ["1"], 2: ["a"], 4: ["b"], 6: ["v"]},
            products={("a", "b"): {"v": 1}, ("b", "a"): {"v": 2}},
            volume="v",
        ))


def test_non_associative_table_rejected():
    # (a a) c = b c = v, but a (a c) = 0
    with pytest.raises(RingError, match="associative"):
        mk_graded_ring(RingPresentation(
            basis={0: ["1"], 2: ["a", "c"], 4: ["b"], 6: ["v"]},
            products={("a", "a"): {"b": 1}, ("a", "b"): {"v": 1}, ("c", "b"): {"v": 1}},
            volume="v",
        ))


def test_surface_characteristic_ring():
    ring = surface_characteristic_ring(cp2_surface())
    u = ring.element("u")
    assert ring.dimension == 4
    assert integrate(u * u) == 9


def test_projective_bundle_ring_relation():
    base = surface_characteristic_ring(cp2_surface())
    ring, xi = projective_bundle_ring(base, base.element("u"), base.zero(4))
    u = ring.element("u")
    assert xi * xi == u * xi
    assert integrate(xi * xi * xi) == 9
    assert integrate(u * u * xi) == 9


def test_projective_bundle_ring_needs_surface_base():
    ring = cp3_ring()
    with pytest.raises(RingError):
        projective_bundle_ring(ring, ring.element("H"), ring.element("H2"))


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_projective_bundle_rings_are_associative(c1, c2):
    # mk_graded_ring validates commutativity and associativity of every table
    base = mk_graded_ring(RingPresentation(
        basis={0: ["1"], 2: ["u"], 4: ["pt"]},
        products={("u", "u"): {"pt": c1}},
        volume="pt",
        dimension=4,
    ))
    ring, xi = projective_bundle_ring(base, base.element("u"), c2 * base.element("pt"))
    assert integrate(xi * xi * xi) == c1 - c2


def test_ring_oracle_examples():
    assert chern_numbers_via_ring(ProductK3Sphere()).as_tuple() == (0, 48, 48)
    assert chern_numbers_via_ring(Cp3(2)).as_tuple() == (64, 24, 4)


@pytest.mark.parametrize("m", range(1, 8))
def test_ring_oracle_k3_family(m):
    assert chern_numbers_via_ring(ProductK3Sphere(m)) == k3_pullback_family(m).numbers


@pytest.mark.parametrize("j", range(-4, 5))
def test_ring_oracle_cp3(j):
    assert chern_numbers_via_ring(Cp3(j)) == cp3_almost_complex(j).numbers


@given(st.integers(-5, 5), st.integers(0, 10))
def test_ring_oracle_matches_closed_forms(m, k):
    base, _ = standard_surface(m, AsdPolicy.ASSUME)
    s = connect_sum_cp2bar(base, k)
    assert chern_numbers_via_ring(ProjCanonical(s)) == proj_canonical_threefold(s).numbers
    assert chern_numbers_via_ring(TwistorSymmetric(s)) == twistor_threefold(s, AsdPolicy.ASSUME).numbers


def test_ring_oracle_twistor_k3():
    assert chern_numbers_via_ring(TwistorSymmetric(k3_surface())).as_tuple() == (0, 96, 48)


def test_ring_oracle_needs_complex_surface():
    s4 = mk_surface("S4", 2, 0, spin=True, kahler=False, simply_connected=True, complex=False)
    with pytest.raises(DomainError):
        chern_numbers_via_ring(ProjCanonical(s4))


def test_ring_oracle_rejects_unknown_builder():
    with pytest.raises(DomainError):
        chern_numbers_via_ring("CP3")


def test_integrate_is_linear():
    ring = cp3_ring()
    assert integrate(5 * ring.element("H3")) == 5


def test_trivial_bundle_is_a_product_with_cp1():
    base = surface_characteristic_ring(cp2_surface())
    ring, xi = projective_bundle_ring(base, base.zero(2), base.zero(4))
    assert (xi * xi).is_zero()
    assert integrate(xi * ring.element("pt")) == 1


def test_canonical_bundle_over_k3_has_vanishing_xi_cube():
    base = surface_characteristic_ring(k3_surface())
    ring, xi = projective_bundle_ring(base, base.element("u"), base.zero(4))
    assert integrate(xi * xi * xi) == 0


def test_xi_reduction_is_confluent():
    base = surface_characteristic_ring(cp2_surface())
    ring, xi = projective_bundle_ring(base, base.element("u"), base.element("pt"))
    assert xi * (xi * xi) == (xi * xi) * xi
