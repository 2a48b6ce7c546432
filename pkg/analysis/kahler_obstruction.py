"""Todd genus of the pencil c1 = 2n alpha + beta and the non-Kahler threshold.

For integer classes alpha, beta on a 6-manifold X, 2n alpha + beta is again
a lift of w2, so it is c1 of some almost-complex structure J_n. If J_n were
integrable and of Kahler type, Hodge theory would give
|chi(O)| <= sum_j b_j(X). The Todd genus

    chi(O) = ((2n alpha + beta)^3 - (2n alpha + beta) p1) / 48

is cubic in n with leading coefficient alpha^3 / 6, so it eventually beats
the Betti sum.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from utils.constants import CP3_BETTI_SUM, CP3_P1_COEFF, TODD_FAMILY_DENOMINATOR
from utils.errors import DomainError, IntegralityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CupFormFamily:
    """Cup-product and p1 pairings of alpha and beta, plus the Betti sum of X."""

    a3: int
    a2b: int
    ab2: int
    b3: int
    a_p1: int
    b_p1: int
    betti_sum: int
    beta_complex: bool = False

    def __post_init__(self):
        if self.betti_sum < 0:
            raise DomainError(f"betti_sum must be non-negative, got {self.betti_sum}")
        if self.beta_complex and (self.b3 - self.b_p1) % TODD_FAMILY_DENOMINATOR:
            raise IntegralityError(
                f"beta^3 - beta.p1 = {self.b3 - self.b_p1} is not divisible by 48; "
                "beta is not c1 of a complex structure"
            )


def cp3_family():
    """CP3 with alpha = H and beta = c1 = 4H."""
    return CupFormFamily(
        a3=1, a2b=4, ab2=16, b3=64,
        a_p1=CP3_P1_COEFF, b_p1=4 * CP3_P1_COEFF,
        betti_sum=CP3_BETTI_SUM, beta_complex=True,
    )


def _integer_cubic(f):
    """48 * Todd as integer coefficients (c0, c1, c2, c3) in n."""
    return (
        f.b3 - f.b_p1,
        6 * f.ab2 - 2 * f.a_p1,
        12 * f.a2b,
        8 * f.a3,
    )


def todd_cubic(f):
    """Exact rational coefficients (c0, c1, c2, c3) of Todd(n)."""
    return tuple(Fraction(c, TODD_FAMILY_DENOMINATOR) for c in _integer_cubic(f))


def _scaled_todd(f, n):
    c0, c1, c2, c3 = _integer_cubic(f)
    return ((c3 * n + c2) * n + c1) * n + c0


def todd_of_family(f, n):
    """chi(O) of the structure with c1 = 2n alpha + beta, as an exact Fraction."""
    return Fraction(_scaled_todd(f, n), TODD_FAMILY_DENOMINATOR)


def is_realizable(f, n):
    """Whether the Todd value is integral, as it is for every almost-complex structure."""
    return todd_of_family(f, n).denominator == 1


def kahler_excluded(f, n):
    """True when |Todd| > Betti sum, so J_n cannot be of Kahler type."""
    return abs(_scaled_todd(f, n)) > TODD_FAMILY_DENOMINATOR * f.betti_sum


def leading_coefficient(f):
    """Coefficient of n^3: 8 a3 / 48 = a3 / 6."""
    return Fraction(8 * f.a3, TODD_FAMILY_DENOMINATOR)


def dominance_radius(f):
    """R such that |Todd(n)| > betti_sum for all |n| >= R.

    With 48 Todd = c3 n^3 + c2 n^2 + c1 n + c0 and |n| >= 1,
    |48 Todd| >= n^2 (|c3| |n| - |c2| - |c1| - |c0|), which exceeds
    48 betti_sum as soon as |c3| |n| > |c2| + |c1| + |c0| + 48 betti_sum.
    """
    c0, c1, c2, c3 = _integer_cubic(f)
    if c3 == 0:
        raise DomainError("a3 = 0: the Todd family is not cubic, no threshold exists")
    slack = abs(c2) + abs(c1) + abs(c0) + TODD_FAMILY_DENOMINATOR * f.betti_sum
    return slack // abs(c3) + 1


def non_kahler_threshold(f):
    """Minimal N >= 0 with |Todd(n)| > betti_sum for every |n| > N.

    Args:
        f: CupFormFamily with a3 != 0

    Returns:
        int
    """
    radius = dominance_radius(f)
    threshold = 0
    for n in range(-radius, radius + 1):
        if not kahler_excluded(f, n):
            threshold = max(threshold, abs(n))
    logger.debug("non-Kahler threshold %d (scanned |n| <= %d)", threshold, radius)
    return threshold


def excluded_window(f, radius):
    """Values n in [-radius, radius] whose J_n cannot be of Kahler type."""
    return [n for n in range(-radius, radius + 1) if kahler_excluded(f, n)]
