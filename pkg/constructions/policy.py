"""Anti-self-dual metric policy: when may a twistor space be built over a surface."""

import logging
from enum import Enum

from utils.constants import K0_NEGATIVE_M, K0_TABLE, K3_CHI, K3_TAU
from utils.errors import PolicyRejection
from topology.flags import TriState

logger = logging.getLogger(__name__)


class AsdPolicy(Enum):
    """How to treat surfaces whose anti-self-dual metrics are not certified.

    KNOWN_TABLE: only the published k0 values; unknown cases fail at the
        twistor step.
    ASSUME: every surface is treated as admitting an ASD metric (k0 = 0 when
        unknown); each use is recorded as an assumption.
    REJECT_UNKNOWN: like KNOWN_TABLE, but catalogue lookups outside the table
        fail immediately.
    """

    KNOWN_TABLE = "known"
    ASSUME = "assume"
    REJECT_UNKNOWN = "reject"

    @classmethod
    def parse(cls, text):
        """Parse a CLI/config policy name (known, assume, reject)."""
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            choices = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown ASD policy {text!r}; choose one of {choices}") from None


def tabulated_k0(m):
    """k0(m) from the table, or None where only existence is known."""
    if m < 0:
        return K0_NEGATIVE_M
    return K0_TABLE.get(m)


def k0_for(m, policy):
    """k0(m) under a policy.

    Args:
        m: Catalogue index (Todd genus of N(m))
        policy: AsdPolicy

    Returns:
        int, or None under KNOWN_TABLE when the table has no entry

    Raises:
        PolicyRejection: REJECT_UNKNOWN and m outside the table
    """
    k0 = tabulated_k0(m)
    if k0 is not None:
        return k0
    if policy is AsdPolicy.ASSUME:
        logger.info("k0(%d) is not tabulated; assuming k0 = 0 (unverified)", m)
        return 0
    if policy is AsdPolicy.REJECT_UNKNOWN:
        raise PolicyRejection(f"k0({m}) unknown: no anti-self-dual threshold is tabulated")
    return None


def _is_hyperkahler_k3(s):
    return (
        s.chi == K3_CHI and s.tau == K3_TAU and s.spin and s.kahler
        and s.cp2bar_count == 0 and s.simply_connected is not TriState.NO
    )


def certify_asd(s, policy):
    """Decide whether a twistor space over s may be built.

    Args:
        s: Surface4
        policy: AsdPolicy

    Returns:
        Tuple of assumption strings (empty when the ASD metric is certified)

    Raises:
        PolicyRejection: no certified ASD metric and the policy does not assume one
    """
    if _is_hyperkahler_k3(s):
        return ()

    if s.catalogue is not None:
        k0 = tabulated_k0(s.catalogue)
        if k0 is not None and s.cp2bar_count >= k0:
            return ()
        if k0 is None:
            reason = f"k0({s.catalogue}) unknown"
        else:
            reason = f"N({s.catalogue}) # {s.cp2bar_count} CP2bar is below k0({s.catalogue}) = {k0}"
    else:
        reason = f"no anti-self-dual metric is certified on {s.name}"

    if policy is AsdPolicy.ASSUME:
        note = f"assumed anti-self-dual metric on {s.name} ({reason})"
        logger.info(note)
        return (note,)
    raise PolicyRejection(reason)
