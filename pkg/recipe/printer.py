"""Canonical text of a checked recipe; format_recipe(parse_recipe(t)) re-parses to the same tree."""

import json
from dataclasses import fields

from recipe.nodes import FUNCTION_NAMES, SURFACE_FUNCTION, Ref, SurfaceLiteral
from topology.flags import TriState


def _format_surface(node):
    words = [
        json.dumps(node.name, ensure_ascii=False),
        str(node.chi),
        str(node.tau),
        "spin" if node.spin else "nonspin",
        "kahler" if node.kahler else "nonkahler",
        "complex" if node.complex else "noncomplex",
    ]
    if node.simply_connected is TriState.YES:
        words.append("simply_connected")
    elif node.simply_connected is TriState.NO:
        words.append("nonsimply_connected")
    return f"{SURFACE_FUNCTION}({', '.join(words)})"


def format_expr(node):
    if isinstance(node, int):
        return str(node)
    if isinstance(node, Ref):
        return node.name
    if isinstance(node, SurfaceLiteral):
        return _format_surface(node)
    args = [format_expr(getattr(node, f.name)) for f in fields(node) if f.name != "pos"]
    return f"{FUNCTION_NAMES[type(node)]}({', '.join(args)})"


def format_recipe(recipe):
    """One statement per line, ending with the emit statement."""
    lines = [f"let {binding.name} = {format_expr(binding.expr)}" for binding in recipe.bindings]
    lines.append(f"emit {format_expr(recipe.emit)}")
    return "\n".join(lines) + "\n"
