"""Chern numbers recomputed by brute force in explicit cohomology rings.

Each builder names a 3-fold whose Chern classes are written down in a
finite ring and integrated; the results are compared against the closed
forms of the constructions package.
"""

import logging
from dataclasses import dataclass

from cohomology.bundles import cp3_ring, projective_bundle_ring, surface_characteristic_ring
from cohomology.ring import integrate
from topology.surface import k3_surface
from topology.threefold import CharNumbers, chern_relation
from utils.constants import CP3_EULER, CP3_P1_COEFF, K3_P1, K3_S2_EULER
from utils.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjCanonical:
    surface: object


@dataclass(frozen=True)
class TwistorSymmetric:
    surface: object


@dataclass(frozen=True)
class ProductK3Sphere:
    m: int = 1


@dataclass(frozen=True)
class Cp3:
    j: int


def _require_complex(s):
    if not s.complex:
        raise DomainError(f"{s.name} is not a complex surface; c1(M) is undefined")


def _canonical_bundle_ring(s):
    """P(O + K^-1) over s: xi = Sigma, Sigma-bar = xi - u."""
    base = surface_characteristic_ring(s)
    ring, xi = projective_bundle_ring(base, base.element("u"), base.zero(4))
    return ring, xi, ring.element("u"), ring.element("pt")


def _pontryagin(s, xi, u, pt):
    """p1(Z) = pi*p1(M) + e(T_vert)^2 with e = Sigma + Sigma-bar = 2 xi - u."""
    vertical_euler = 2 * xi - u
    return s.p1 * pt + vertical_euler * vertical_euler


def _proj_canonical_numbers(s):
    _require_complex(s)
    ring, xi, u, pt = _canonical_bundle_ring(s)
    # c(Z) = pi*c(M) (1 + Sigma)(1 + Sigma-bar)
    sigma, sigma_bar = xi, xi - u
    vertical_c1 = sigma + sigma_bar
    vertical_c2 = sigma * sigma_bar
    c1 = u + vertical_c1
    c2 = s.chi * pt + u * vertical_c1 + vertical_c2
    return integrate(c1 * c1 * c1), integrate(c1 * c2)


def _twistor_numbers(s):
    _require_complex(s)
    ring, xi, u, pt = _canonical_bundle_ring(s)
    c1 = 2 * xi + 2 * (xi - u)
    p1 = _pontryagin(s, xi, u, pt)
    c1_cubed = integrate(c1 * c1 * c1)
    return c1_cubed, chern_relation(c1_cubed, integrate(c1 * p1))


def _product_k3_numbers(m):
    if m < 1:
        raise DomainError(f"ProductK3Sphere: m must be positive, got {m}")
    base = surface_characteristic_ring(k3_surface())
    ring, sigma = projective_bundle_ring(base, base.zero(2), base.zero(4))
    fiber = ring.element("pt")
    c1 = 2 * m * sigma  # m c1(L), c1(L) = 2 sigma
    p1 = K3_P1 * fiber
    c2 = (c1 * c1 - p1).halve()
    return integrate(c1 * c1 * c1), integrate(c1 * c2)


def _cp3_numbers(j):
    ring = cp3_ring()
    h = ring.element("H")
    c1 = 2 * j * h
    p1 = CP3_P1_COEFF * (h * h)
    c2 = (c1 * c1 - p1).halve()
    return integrate(c1 * c1 * c1), integrate(c1 * c2)


def chern_numbers_via_ring(builder):
    """Compute (c1^3, c1c2) in an explicit ring; c3 comes from the closed form.

    Args:
        builder: ProjCanonical, TwistorSymmetric, ProductK3Sphere or Cp3

    Returns:
        CharNumbers
    """
    if isinstance(builder, ProjCanonical):
        c1_cubed, c1c2 = _proj_canonical_numbers(builder.surface)
        c3 = 2 * builder.surface.chi
    elif isinstance(builder, TwistorSymmetric):
        c1_cubed, c1c2 = _twistor_numbers(builder.surface)
        c3 = 2 * builder.surface.chi
    elif isinstance(builder, ProductK3Sphere):
        c1_cubed, c1c2 = _product_k3_numbers(builder.m)
        c3 = K3_S2_EULER
    elif isinstance(builder, Cp3):
        c1_cubed, c1c2 = _cp3_numbers(builder.j)
        c3 = CP3_EULER
    else:
        raise DomainError(f"unsupported ring builder {builder!r}")
    logger.debug("ring oracle %s -> (%d, %d)", builder, c1_cubed, c1c2)
    return CharNumbers(c1_cubed=c1_cubed, c1c2=c1c2, c3=c3)
