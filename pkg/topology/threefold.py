"""Chern numbers of almost-complex 6-manifolds and the universal relations between them."""

import logging
from dataclasses import dataclass, field, replace

from topology.flags import TriState
from utils.constants import (
    BLOWUP_C1_CUBED_SHIFT, BLOWUP_C3_SHIFT, SPIN_C1_CUBED_DIVISOR, TODD_DENOMINATOR
)
from utils.errors import DomainError, IntegralityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharNumbers:
    """The Chern numbers (c1^3, c1c2, c3) of an almost-complex 6-manifold."""

    c1_cubed: int
    c1c2: int
    c3: int

    def as_tuple(self):
        return (self.c1_cubed, self.c1c2, self.c3)

    def __str__(self):
        return f"(c1^3={self.c1_cubed}, c1c2={self.c1c2}, c3={self.c3})"


@dataclass(frozen=True)
class ThreeFold:
    """A 6-manifold with a recorded (almost-)complex structure.

    Attributes:
        numbers: CharNumbers
        spin: Whether the underlying manifold is spin
        kahler_type: TriState
        simply_connected: TriState
        almost_complex_only: True when no integrable structure is recorded
        provenance: Construction steps, oldest first
        assumptions: Policy assumptions made on the way (become report warnings)
    """

    numbers: CharNumbers
    spin: bool
    kahler_type: TriState
    simply_connected: TriState
    almost_complex_only: bool = False
    provenance: tuple = field(default=(), compare=False)
    assumptions: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.numbers.c1c2 % TODD_DENOMINATOR != 0:
            raise IntegralityError(
                f"c1c2 = {self.numbers.c1c2} is not divisible by 24; "
                "no almost-complex structure has these Chern numbers"
            )
        if self.spin and self.numbers.c1_cubed % SPIN_C1_CUBED_DIVISOR != 0:
            raise IntegralityError(
                f"spin 3-fold with c1^3 = {self.numbers.c1_cubed} not divisible by 8"
            )

    @property
    def c1_cubed(self):
        return self.numbers.c1_cubed

    @property
    def c1c2(self):
        return self.numbers.c1c2

    @property
    def c3(self):
        return self.numbers.c3

    @property
    def todd(self):
        return todd_genus(self.numbers)


def todd_genus(x):
    """Todd genus chi(O) = c1c2 / 24.

    Args:
        x: CharNumbers

    Returns:
        int

    Raises:
        IntegralityError: c1c2 not divisible by 24
    """
    quotient, remainder = divmod(x.c1c2, TODD_DENOMINATOR)
    if remainder:
        raise IntegralityError(
            f"Todd genus c1c2/24 = {x.c1c2}/24 is not an integer; "
            "not realizable by an almost-complex structure"
        )
    return quotient


def chern_relation(c1_cubed, c1_p1):
    """c1c2 from c1^3 and c1.p1, using p1 = c1^2 - 2 c2.

    Args:
        c1_cubed: Integral of c1^3
        c1_p1: Integral of c1 p1

    Returns:
        (c1^3 - c1 p1) / 2
    """
    difference = c1_cubed - c1_p1
    if difference % 2:
        raise IntegralityError(
            f"c1^3 - c1p1 = {difference} is odd; inconsistent Chern data"
        )
    return difference // 2


def blow_up(x, l):
    """Blow up l points; smoothly a connected sum with l copies of CP3.

    Args:
        x: ThreeFold with an integrable structure
        l: Number of points (>= 0)

    Returns:
        ThreeFold with (c1^3 + 8l, c1c2, c3 + 2l); spin and Kahler type kept
    """
    if l < 0:
        raise DomainError(f"blow_up: number of points must be non-negative, got {l}")
    if x.almost_complex_only:
        raise DomainError(
            "blow_up: record is almost-complex only; a holomorphic blow-up needs "
            "an integrable structure"
        )
    if l == 0:
        return x

    numbers = CharNumbers(
        c1_cubed=x.c1_cubed + BLOWUP_C1_CUBED_SHIFT * l,
        c1c2=x.c1c2,
        c3=x.c3 + BLOWUP_C3_SHIFT * l,
    )
    logger.debug("blow_up(%d): %s -> %s", l, x.numbers, numbers)
    return replace(x, numbers=numbers, provenance=x.provenance + (f"blow_up({l})",))


def same_underlying_c3(a, b):
    """True if two structures can live on one 6-manifold as far as c3 = chi(X) can tell."""
    return a.c3 == b.c3
