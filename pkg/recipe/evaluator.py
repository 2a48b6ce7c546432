"""Evaluate a checked recipe into a Report."""

import logging

from constructions.catalogue import standard_surface
from constructions.policy import AsdPolicy
from constructions.threefolds import (
    corollary_family, cp3_almost_complex, k3_pullback_family,
    proj_canonical_threefold, twistor_threefold,
)
from data.report import Report
from recipe.nodes import (
    FUNCTION_NAMES, BlowUp, CatalogSurface, ConnSumCp2bar, CorollaryFamily, Cp3Ac,
    K3Family, ProjCanonical, Ref, SurfaceLiteral, Twistor,
)
from topology.surface import connect_sum_cp2bar, mk_surface
from topology.threefold import blow_up
from utils.errors import ChernForgeError, DomainError

logger = logging.getLogger(__name__)


def _step(node):
    name = "surface" if isinstance(node, SurfaceLiteral) else FUNCTION_NAMES[type(node)]
    return f"{name}@{node.pos}"


def _apply(node, env, policy):
    if isinstance(node, Ref):
        return env[node.name]
    if isinstance(node, SurfaceLiteral):
        return mk_surface(
            node.name, node.chi, node.tau, node.spin, node.kahler,
            node.simply_connected, complex=node.complex,
        )
    if isinstance(node, CatalogSurface):
        surface, _ = standard_surface(node.m, policy)
        return surface
    if isinstance(node, ConnSumCp2bar):
        return connect_sum_cp2bar(_evaluate(node.child, env, policy), node.k)
    if isinstance(node, Twistor):
        return twistor_threefold(_evaluate(node.child, env, policy), policy)
    if isinstance(node, ProjCanonical):
        return proj_canonical_threefold(_evaluate(node.child, env, policy))
    if isinstance(node, K3Family):
        return k3_pullback_family(node.m)
    if isinstance(node, Cp3Ac):
        return cp3_almost_complex(node.j)
    if isinstance(node, BlowUp):
        return blow_up(_evaluate(node.child, env, policy), node.l)
    if isinstance(node, CorollaryFamily):
        return corollary_family(node.m, node.n)
    raise DomainError(f"cannot evaluate {node!r}")


def _evaluate(node, env, policy):
    try:
        return _apply(node, env, policy)
    except ChernForgeError as err:
        if not isinstance(node, Ref):
            err.add_context(_step(node))
        raise


def eval_recipe(recipe, policy=AsdPolicy.KNOWN_TABLE):
    """Evaluate bindings in source order, then the emitted 3-fold.

    Args:
        recipe: Recipe from parse_recipe
        policy: AsdPolicy for catalogue and twistor steps

    Returns:
        Report

    Raises:
        DomainError, PolicyRejection: with the failing steps as context
    """
    env = {}
    for binding in recipe.bindings:
        try:
            env[binding.name] = _evaluate(binding.expr, env, policy)
        except ChernForgeError as err:
            err.add_context(f"let {binding.name}")
            raise
        logger.debug("let %s evaluated", binding.name)

    threefold = _evaluate(recipe.emit, env, policy)
    return Report.from_threefold(threefold)
