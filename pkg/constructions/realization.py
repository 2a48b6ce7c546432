"""Solver for target Chern numbers: one 6-manifold, two complex structures.

Given integers (m, n, n_tilde) the solver builds M = N(m) # k CP2bar and
X = Z(M) # l CP3, where

    k = n - n_tilde + c1^2(N(m)),    l = 2n - n_tilde,

and returns X with the blown-up P(O + K^-1) structure J, with
(c1^3, c1c2) = (8n, 24m), and the blown-up twistor structure J~, with
(c1^3, c1c2) = (8 n_tilde, 48m). Admissibility requires

    n_tilde <= min(n - k0(m) + c1^2(N(m)), 2n).
"""

import logging
from dataclasses import dataclass

from constructions.catalogue import standard_surface
from constructions.threefolds import proj_canonical_threefold, twistor_threefold
from topology.surface import connect_sum_cp2bar
from topology.threefold import blow_up, same_underlying_c3
from utils.errors import ConstraintViolation, DomainError, PolicyRejection

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RealizationPlan:
    """Output of realize_targets."""

    m: int
    n: int
    n_tilde: int
    surface: object
    k: int
    l: int
    k0: int
    max_n_tilde: int
    x_J: object
    x_Jtilde: object


def max_admissible_n_tilde(n, k0, c1_squared):
    return min(n - k0 + c1_squared, 2 * n)


def realize_targets(m, n, n_tilde, policy):
    """Build the two structures realizing (8n, 24m) and (8 n_tilde, 48m).

    Args:
        m: Target Todd genus of (X, J)
        n: c1^3(X, J) / 8
        n_tilde: c1^3(X, J~) / 8
        policy: AsdPolicy

    Returns:
        RealizationPlan

    Raises:
        ConstraintViolation: n_tilde above the admissible bound
        PolicyRejection: k0(m) unknown under the policy
    """
    base, k0 = standard_surface(m, policy)
    if k0 is None:
        raise PolicyRejection(f"k0({m}) unknown: cannot certify an anti-self-dual metric")

    bound = max_admissible_n_tilde(n, k0, base.c1_squared)
    if n_tilde > bound:
        raise ConstraintViolation(
            f"n_tilde = {n_tilde} exceeds min(n - k0(m) + c1^2(N(m)), 2n) = {bound} "
            f"for m = {m}, n = {n}; max admissible n_tilde is {bound}",
            max_admissible=bound,
        )

    k = n - n_tilde + base.c1_squared
    l = 2 * n - n_tilde
    surface = connect_sum_cp2bar(base, k)
    logger.debug("realize(%d, %d, %d): k=%d, l=%d, M=%s", m, n, n_tilde, k, l, surface.name)

    x_J = blow_up(proj_canonical_threefold(surface), l)
    x_Jtilde = blow_up(twistor_threefold(surface, policy), l)

    expected = ((8 * n, 24 * m), (8 * n_tilde, 48 * m))
    actual = ((x_J.c1_cubed, x_J.c1c2), (x_Jtilde.c1_cubed, x_Jtilde.c1c2))
    if actual != expected or not same_underlying_c3(x_J, x_Jtilde):
        raise DomainError(f"realize: got {actual}, expected {expected}")

    return RealizationPlan(
        m=m, n=n, n_tilde=n_tilde,
        surface=surface, k=k, l=l, k0=k0, max_n_tilde=bound,
        x_J=x_J, x_Jtilde=x_Jtilde,
    )
