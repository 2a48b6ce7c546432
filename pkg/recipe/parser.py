"""Recipe text -> checked syntax tree.

Parsing happens in two passes: lark builds a raw tree of calls, names and
literals, then a checker resolves let-bindings, function arities and the
surface / 3-fold kinds of every argument.
"""

import ast
import logging
from dataclasses import dataclass

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from recipe.grammar import RECIPE_GRAMMAR
from recipe.nodes import (
    FUNCTIONS, RESERVED_NAMES, SURFACE_FLAGS, SURFACE_FUNCTION,
    Kind, Let, Recipe, Ref, SourcePos, SurfaceLiteral,
)
from utils.errors import RecipeSyntaxError

logger = logging.getLogger(__name__)

_PARSER = Lark(RECIPE_GRAMMAR, parser="lalr")


@dataclass(frozen=True)
class _RawCall:
    name: str
    args: tuple
    pos: SourcePos


@dataclass(frozen=True)
class _RawName:
    name: str
    pos: SourcePos


@dataclass(frozen=True)
class _RawInt:
    value: int
    pos: SourcePos


@dataclass(frozen=True)
class _RawString:
    value: str
    pos: SourcePos


@dataclass(frozen=True)
class _RawLet:
    name: str
    expr: object
    pos: SourcePos


@dataclass(frozen=True)
class _RawEmit:
    expr: object
    pos: SourcePos


def _pos(token):
    return SourcePos(token.line, token.column)


class _RawBuilder(Transformer):
    def start(self, children):
        return children

    def let_stmt(self, children):
        name, expr = children
        return _RawLet(str(name), expr, _pos(name))

    def emit_stmt(self, children):
        (expr,) = children
        return _RawEmit(expr, expr.pos)

    def call(self, children):
        name, *rest = children
        args = tuple(rest[0]) if rest else ()
        return _RawCall(str(name), args, _pos(name))

    def arguments(self, children):
        return list(children)

    def ref(self, children):
        (token,) = children
        return _RawName(str(token), _pos(token))

    def integer(self, children):
        (token,) = children
        return _RawInt(int(token), _pos(token))

    def string(self, children):
        (token,) = children
        pos = _pos(token)
        try:
            value = ast.literal_eval(str(token))
        except (SyntaxError, ValueError) as err:
            raise _error(f"bad string literal {token}: {getattr(err, 'msg', err)}", pos) from err
        return _RawString(value, pos)


def _error(message, pos):
    return RecipeSyntaxError(message, pos.line, pos.column)


def _describe(err):
    if isinstance(err, UnexpectedToken):
        if err.token.type == "$END":
            return "unexpected end of recipe (a recipe ends with 'emit <3-fold>')"
        return f"unexpected {err.token.type} {str(err.token)!r}"
    if isinstance(err, UnexpectedCharacters):
        return f"unexpected character {err.char!r}"
    return "unexpected end of recipe (a recipe ends with 'emit <3-fold>')"


def _error_position(err):
    line = getattr(err, "line", None)
    column = getattr(err, "column", None)
    if not isinstance(line, int) or line < 1:
        return None, None
    return line, column


class _Checker:
    """Resolves names and kinds; builds nodes from the raw tree."""

    def __init__(self):
        self.kinds = {}

    def recipe(self, statements):
        *lets, emit = statements
        bindings = []
        for raw in lets:
            if raw.name in RESERVED_NAMES:
                raise _error(f"{raw.name!r} is a reserved word and cannot be bound", raw.pos)
            if raw.name in self.kinds:
                raise _error(f"{raw.name!r} is already bound", raw.pos)
            node, kind = self.expr(raw.expr)
            if kind is Kind.INT:
                raise _error(f"let {raw.name}: bindings must name a surface or a 3-fold", raw.pos)
            self.kinds[raw.name] = kind
            bindings.append(Let(raw.name, node, kind, raw.pos))

        node, kind = self.expr(emit.expr)
        if kind is not Kind.THREEFOLD:
            raise _error(f"emit needs a 3-fold, got a {kind}", emit.pos)
        return Recipe(tuple(bindings), node, emit.pos)

    def expr(self, raw):
        if isinstance(raw, _RawInt):
            return raw.value, Kind.INT
        if isinstance(raw, _RawString):
            raise _error("string literals are only allowed as surface labels", raw.pos)
        if isinstance(raw, _RawName):
            if raw.name in SURFACE_FLAGS:
                raise _error(f"flag {raw.name!r} is only allowed inside surface(...)", raw.pos)
            if raw.name not in self.kinds:
                raise _error(f"unbound name {raw.name!r}", raw.pos)
            return Ref(raw.name, raw.pos), self.kinds[raw.name]

        if raw.name == SURFACE_FUNCTION:
            return self.surface(raw), Kind.SURFACE
        if raw.name not in FUNCTIONS:
            raise _error(f"unknown function {raw.name!r}", raw.pos)

        node_class, arg_kinds, result = FUNCTIONS[raw.name]
        if len(raw.args) != len(arg_kinds):
            raise _error(
                f"{raw.name} takes {len(arg_kinds)} argument(s), got {len(raw.args)}", raw.pos
            )
        values = []
        for index, (arg, expected) in enumerate(zip(raw.args, arg_kinds), start=1):
            value, kind = self.expr(arg)
            if kind is not expected:
                raise _error(
                    f"{raw.name}: argument {index} must be a {expected}, got a {kind}", arg.pos
                )
            values.append(value)
        return node_class(*values, pos=raw.pos), result

    def surface(self, raw):
        """surface("label", chi, tau, flag...)"""
        if len(raw.args) < 3:
            raise _error("surface takes a label, chi, tau and optional flags", raw.pos)
        label, chi, tau, *flags = raw.args
        if not isinstance(label, _RawString):
            raise _error("surface: argument 1 must be a string label", label.pos)
        for index, arg in ((2, chi), (3, tau)):
            if not isinstance(arg, _RawInt):
                raise _error(f"surface: argument {index} must be an integer", arg.pos)

        fields = {}
        for flag in flags:
            if not isinstance(flag, _RawName) or flag.name not in SURFACE_FLAGS:
                raise _error(
                    f"surface: expected a flag ({', '.join(SURFACE_FLAGS)})", flag.pos
                )
            field_name, value = SURFACE_FLAGS[flag.name]
            if field_name in fields:
                raise _error(f"surface: {field_name} given twice", flag.pos)
            fields[field_name] = value
        return SurfaceLiteral(label.value, chi.value, tau.value, pos=raw.pos, **fields)


def parse_recipe(text):
    """Parse and check recipe text.

    Args:
        text: Recipe source

    Returns:
        Recipe

    Raises:
        RecipeSyntaxError: with line and column of the offending token
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as err:
        line, column = _error_position(err)
        raise RecipeSyntaxError(_describe(err), line, column) from err

    try:
        statements = _RawBuilder().transform(tree)
    except VisitError as err:
        if isinstance(err.orig_exc, RecipeSyntaxError):
            raise err.orig_exc from None
        raise
    recipe = _Checker().recipe(statements)
    logger.debug("parsed recipe with %d binding(s)", len(recipe.bindings))
    return recipe
