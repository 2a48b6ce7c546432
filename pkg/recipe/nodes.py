"""Syntax tree of construction recipes.

Source positions are carried on every node but take no part in equality,
so a re-parsed printout compares equal to the original tree.
"""

from dataclasses import dataclass, field
from enum import Enum

from topology.flags import TriState


class Kind(Enum):
    """Value kinds of recipe expressions."""

    SURFACE = "surface"
    THREEFOLD = "3-fold"
    INT = "integer"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SourcePos:
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


NO_POS = SourcePos(0, 0)


@dataclass(frozen=True)
class SurfaceLiteral:
    name: str
    chi: int
    tau: int
    spin: bool = False
    kahler: bool = False
    simply_connected: TriState = TriState.UNKNOWN
    complex: bool = True
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class CatalogSurface:
    m: int
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class ConnSumCp2bar:
    child: object
    k: int
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Twistor:
    child: object
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class ProjCanonical:
    child: object
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class K3Family:
    m: int
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Cp3Ac:
    j: int
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class BlowUp:
    child: object
    l: int
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class CorollaryFamily:
    m: int
    n: int
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Ref:
    """Reference to an earlier let-binding."""

    name: str
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    kind: Kind
    pos: SourcePos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Recipe:
    """let-bindings in source order followed by the emitted 3-fold expression."""

    bindings: tuple
    emit: object
    pos: SourcePos = field(default=NO_POS, compare=False)


# Recipe function name -> (node class, argument kinds, result kind).
# surface(...) takes a label, chi, tau and bare flags and is handled apart.
FUNCTIONS = {
    "catalog": (CatalogSurface, (Kind.INT,), Kind.SURFACE),
    "connsum_cp2bar": (ConnSumCp2bar, (Kind.SURFACE, Kind.INT), Kind.SURFACE),
    "twistor": (Twistor, (Kind.SURFACE,), Kind.THREEFOLD),
    "proj_canonical": (ProjCanonical, (Kind.SURFACE,), Kind.THREEFOLD),
    "k3_family": (K3Family, (Kind.INT,), Kind.THREEFOLD),
    "cp3_ac": (Cp3Ac, (Kind.INT,), Kind.THREEFOLD),
    "blowup": (BlowUp, (Kind.THREEFOLD, Kind.INT), Kind.THREEFOLD),
    "corollary": (CorollaryFamily, (Kind.INT, Kind.INT), Kind.THREEFOLD),
}
SURFACE_FUNCTION = "surface"

FUNCTION_NAMES = {cls: name for name, (cls, _, _) in FUNCTIONS.items()}

# Flag word -> (SurfaceLiteral field, value)
SURFACE_FLAGS = {
    "spin": ("spin", True),
    "nonspin": ("spin", False),
    "kahler": ("kahler", True),
    "nonkahler": ("kahler", False),
    "complex": ("complex", True),
    "noncomplex": ("complex", False),
    "simply_connected": ("simply_connected", TriState.YES),
    "nonsimply_connected": ("simply_connected", TriState.NO),
}

RESERVED_NAMES = frozenset(FUNCTIONS) | {SURFACE_FUNCTION, "let", "emit"} | frozenset(SURFACE_FLAGS)
