"""Closed-form Chern numbers of the named 3-fold constructions."""

import logging
from dataclasses import dataclass

from analysis.kahler_obstruction import cp3_family, kahler_excluded
from constructions.policy import certify_asd
from topology.flags import TriState
from topology.threefold import CharNumbers, ThreeFold, blow_up, chern_relation
from utils.constants import (
    CP3_EULER, CP3_P1_COEFF, HITCHIN_KAHLER_TWISTOR_INVARIANTS,
    K3_P1, K3_S2_B2, K3_S2_EULER,
)
from utils.errors import DomainError

logger = logging.getLogger(__name__)


def twistor_threefold(s, policy):
    """Twistor space (Z, J2) of an anti-self-dual metric on s.

    Args:
        s: Surface4
        policy: AsdPolicy deciding whether the ASD metric may be assumed

    Returns:
        ThreeFold (16(2chi+3tau), 12(chi+tau), 2chi)
    """
    assumptions = certify_asd(s, policy)
    numbers = CharNumbers(
        c1_cubed=16 * s.c1_squared,
        c1c2=12 * (s.chi + s.tau),
        c3=2 * s.chi,
    )
    # Only S4 and CP2 have Kahler twistor spaces.
    if (s.chi, s.tau) in HITCHIN_KAHLER_TWISTOR_INVARIANTS:
        kahler_type = TriState.UNKNOWN
    else:
        kahler_type = TriState.NO
    logger.debug("twistor(%s) -> %s", s.name, numbers)
    return ThreeFold(
        numbers=numbers,
        spin=True,
        kahler_type=kahler_type,
        simply_connected=s.simply_connected,
        provenance=s.provenance + ("twistor",),
        assumptions=assumptions,
    )


def proj_canonical_threefold(s):
    """P(O + K^-1) over a complex surface, the structure J1 on the twistor 6-manifold.

    Args:
        s: Surface4 flagged complex

    Returns:
        ThreeFold (8(2chi+3tau), 6(chi+tau), 2chi)
    """
    if not s.complex:
        raise DomainError(
            f"proj_canonical: {s.name} is not a complex surface, K is undefined"
        )
    numbers = CharNumbers(
        c1_cubed=8 * s.c1_squared,
        c1c2=6 * (s.chi + s.tau),
        c3=2 * s.chi,
    )
    return ThreeFold(
        numbers=numbers,
        spin=True,
        kahler_type=TriState.YES if s.kahler else TriState.UNKNOWN,
        simply_connected=s.simply_connected,
        provenance=s.provenance + ("proj_canonical",),
    )


@dataclass(frozen=True)
class K3FamilyDerivation:
    """Derivation of c1c2 for the pulled-back twistor family of K3's.

    c1 = m c1(L), L the vertical line bundle with c1(L)^2 = 0 and
    integral 2 on a fiber; p1 = -48 F with F the class of a fiber S2.
    """

    m: int
    c1_multiple_of_L: int
    p1_multiple_of_F: int
    c1_L_on_fiber: int
    c1_cubed: int
    c1_p1: int
    c1c2: int


def k3_family_derivation(m):
    c1_L_on_fiber = 2
    c1_p1 = m * K3_P1 * c1_L_on_fiber
    return K3FamilyDerivation(
        m=m,
        c1_multiple_of_L=m,
        p1_multiple_of_F=K3_P1,
        c1_L_on_fiber=c1_L_on_fiber,
        c1_cubed=0,
        c1_p1=c1_p1,
        c1c2=chern_relation(0, c1_p1),
    )


def _k3_family_kahler_type(m):
    if m == 1:
        return TriState.YES
    # m = 2 is a twistor space; for 2m - 1 > b2 the Hodge bound h2(O) <= b2 fails.
    if m == 2 or 2 * m - 1 > K3_S2_B2:
        return TriState.NO
    return TriState.UNKNOWN


def k3_pullback_family(m):
    """Complex structure J_m on K3 x S2 pulled back by a degree m-1 map of CP1.

    Args:
        m: Positive integer

    Returns:
        ThreeFold (0, 48m, 48)
    """
    if m < 1:
        raise DomainError(f"k3_family: m must be a positive integer, got {m}")
    derivation = k3_family_derivation(m)
    if derivation.c1c2 != 48 * m:
        raise DomainError(f"k3_family: derivation gave c1c2 = {derivation.c1c2}, expected {48 * m}")
    return ThreeFold(
        numbers=CharNumbers(c1_cubed=derivation.c1_cubed, c1c2=derivation.c1c2, c3=K3_S2_EULER),
        spin=True,
        kahler_type=_k3_family_kahler_type(m),
        simply_connected=TriState.YES,
        provenance=(f"k3_family({m}) on K3 x S2",),
    )


def cp3_almost_complex(j):
    """Almost-complex structure on CP3 with c1 = 2jH.

    c2 = (c1^2 - p1)/2 with p1 = 4H^2, so c1c2 = 4j^3 - 4j.
    """
    c1_p1 = 2 * j * CP3_P1_COEFF
    c1_cubed = 8 * j ** 3
    c1c2 = chern_relation(c1_cubed, c1_p1)

    # c1 = 2jH is the member n = j - 2 of the pencil 2nH + 4H.
    if j == 2:
        kahler_type = TriState.YES
    elif kahler_excluded(cp3_family(), j - 2):
        kahler_type = TriState.NO
    else:
        kahler_type = TriState.UNKNOWN
    return ThreeFold(
        numbers=CharNumbers(c1_cubed=c1_cubed, c1c2=c1c2, c3=CP3_EULER),
        spin=True,
        kahler_type=kahler_type,
        simply_connected=TriState.YES,
        almost_complex_only=True,
        provenance=(f"cp3_ac({j}): c1 = {2 * j}H",),
    )


def corollary_family(m, n):
    """(K3 x S2) # n CP3 with c1c2 = 48m and c1^3 = 8n."""
    if m < 1:
        raise DomainError(f"corollary: m must be a positive integer, got {m}")
    if n < 0:
        raise DomainError(f"corollary: n must be non-negative, got {n}")
    return blow_up(k3_pullback_family(m), n)
