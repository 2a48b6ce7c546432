"""The catalogue N(m) of complex surfaces with Todd genus m."""

import logging
from dataclasses import replace

from constructions.policy import k0_for
from topology.flags import TriState
from topology.surface import mk_surface

logger = logging.getLogger(__name__)

# I0* fibers of the elliptic fibration (E x C)/Z2 -> C/Z2 contribute 6 each,
# one over each of the 2m Weierstrass points of C.
I0_STAR_EULER = 6


def _product_surface(m):
    """C x CP1 with C of genus 1 - m (m <= 1)."""
    genus = 1 - m
    chi = (2 - 2 * genus) * 2
    if genus == 0:
        name = "CP1xCP1"
    elif genus == 1:
        name = "T2xCP1"
    else:
        name = f"C{genus}xCP1"
    return mk_surface(
        name, chi, 0,
        spin=True, kahler=True,
        simply_connected=TriState.from_bool(genus == 0),
    )


def _weierstrass_quotient(m):
    """Minimal resolution of (E x C)/Z2, C hyperelliptic of genus m - 1 (m > 1).

    chi = 2m * 6 from the I0* fibers (equivalently (0 - 8m)/2 + 8m + 8m
    from the 8m fixed points), tau = 4m - chi from Todd genus m, so c1^2 = 0.
    K = (m - 2)F with a section, hence spin iff m is even.
    """
    chi = 2 * m * I0_STAR_EULER
    tau = 4 * m - chi
    return mk_surface(
        f"N({m})", chi, tau,
        spin=(m % 2 == 0), kahler=True,
        simply_connected=TriState.YES,
    )


def standard_surface(m, policy):
    """N(m) together with its ASD threshold k0(m).

    Args:
        m: Target Todd genus
        policy: AsdPolicy

    Returns:
        (Surface4, k0) where k0 is None under KNOWN_TABLE for untabulated m
    """
    k0 = k0_for(m, policy)
    base = _product_surface(m) if m <= 1 else _weierstrass_quotient(m)
    surface = replace(
        base,
        catalogue=m,
        provenance=(f"catalog({m}) = {base.name} (chi={base.chi}, tau={base.tau})",),
    )
    logger.debug("N(%d) = %s, k0 = %s", m, surface.name, k0)
    return surface, k0
