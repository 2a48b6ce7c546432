"""Closed oriented 4-manifolds and complex surfaces modeled by (chi, tau) and flags."""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction

from topology.flags import TriState
from utils.constants import (
    CP2_CHI, CP2_TAU, CP2BAR_CHI, CP2BAR_TAU, K3_CHI, K3_TAU, SURFACE_TODD_DENOMINATOR
)
from utils.errors import DomainError, IntegralityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Surface4:
    """A closed oriented 4-manifold, optionally carrying a complex structure.

    Attributes:
        name: Human-readable label
        chi: Euler characteristic
        tau: Signature
        spin: Whether w2 vanishes
        kahler: Whether the complex structure is of Kahler type
        simply_connected: TriState
        complex: Whether the record is a complex surface
        catalogue: m when the surface is N(m) or N(m) # k CP2-bar
        cp2bar_count: Number of CP2-bar summands added by connect_sum_cp2bar
        provenance: Construction steps, oldest first
    """

    name: str
    chi: int
    tau: int
    spin: bool
    kahler: bool
    simply_connected: TriState
    complex: bool = True
    catalogue: object = None
    cp2bar_count: int = 0
    provenance: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if (self.chi + self.tau) % 2 != 0:
            raise IntegralityError(
                f"{self.name}: chi + tau = {self.chi + self.tau} is odd, "
                "impossible for a closed oriented 4-manifold"
            )
        if self.complex and (self.chi + self.tau) % SURFACE_TODD_DENOMINATOR != 0:
            raise IntegralityError(
                f"{self.name}: chi + tau = {self.chi + self.tau} is not divisible by 4, "
                "so these are not the invariants of a complex surface"
            )
        if self.kahler and not self.complex:
            raise DomainError(f"{self.name}: a Kahler surface must be complex")
        if self.cp2bar_count < 0:
            raise DomainError(f"{self.name}: negative CP2-bar summand count")

    @property
    def c1_squared(self):
        """c1^2 = 2 chi + 3 tau."""
        return 2 * self.chi + 3 * self.tau

    @property
    def todd(self):
        """Todd genus (chi + tau) / 4; an int for complex surfaces."""
        value = Fraction(self.chi + self.tau, SURFACE_TODD_DENOMINATOR)
        return int(value) if value.denominator == 1 else value

    @property
    def p1(self):
        """First Pontryagin number, 3 tau."""
        return 3 * self.tau


def mk_surface(name, chi, tau, spin, kahler, simply_connected, complex=True):
    """Build a validated surface record.

    Args:
        name: Label for reports and provenance
        chi: Euler characteristic
        tau: Signature
        spin: Spin flag
        kahler: Kahler flag
        simply_connected: TriState (bools are accepted and converted)
        complex: Whether the data describes a complex surface

    Returns:
        Surface4

    Raises:
        IntegralityError: complex data with chi + tau not divisible by 4
    """
    if isinstance(simply_connected, bool):
        simply_connected = TriState.from_bool(simply_connected)
    surface = Surface4(
        name=name,
        chi=int(chi),
        tau=int(tau),
        spin=bool(spin),
        kahler=bool(kahler),
        simply_connected=simply_connected,
        complex=bool(complex),
        provenance=(f"surface {name} (chi={chi}, tau={tau})",),
    )
    logger.debug("built surface %s: c1^2=%d", name, surface.c1_squared)
    return surface


def connect_sum_cp2bar(s, k):
    """Connected sum with k copies of CP2-bar (an iterated blow-up of a complex surface).

    Args:
        s: Surface4
        k: Number of CP2-bar summands (>= 0)

    Returns:
        Surface4 with chi + k, tau - k; spin lost when k > 0
    """
    if k < 0:
        raise DomainError(f"connect_sum_cp2bar: k must be non-negative, got {k}")
    if k == 0:
        return s

    return replace(
        s,
        name=f"{s.name} # {k} CP2bar",
        chi=s.chi + k * (CP2BAR_CHI - 2),
        tau=s.tau + k * CP2BAR_TAU,
        spin=False,
        cp2bar_count=s.cp2bar_count + k,
        provenance=s.provenance + (f"connect_sum_cp2bar({k})",),
    )


def k3_surface():
    """The K3 surface: chi = 24, tau = -16, spin, Kahler, simply connected."""
    return mk_surface("K3", K3_CHI, K3_TAU, spin=True, kahler=True, simply_connected=TriState.YES)


def cp2_surface():
    return mk_surface("CP2", CP2_CHI, CP2_TAU, spin=False, kahler=True, simply_connected=TriState.YES)
