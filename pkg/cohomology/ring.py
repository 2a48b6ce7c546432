"""Finite graded-commutative rings concentrated in even degrees 0..6.

A ring is given by a basis per degree and structure constants for products
of basis elements. Structure constants are stored as numpy object arrays so
that all arithmetic stays in exact Python integers.
"""

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian

import numpy as np

from utils.errors import RingError

logger = logging.getLogger(__name__)

MAX_DIMENSION = 6


@dataclass(frozen=True)
class RingPresentation:
    """Input to mk_graded_ring.

    Attributes:
        basis: degree -> list of basis labels; degree 0 holds the unit only
        products: (label_a, label_b) -> {label: coefficient}; unlisted
            products vanish, products with the unit are implied, and (b, a)
            is implied by (a, b)
        volume: Label of the top-degree class with integral 1
        dimension: Real dimension (top degree)
    """

    basis: dict
    products: dict = field(default_factory=dict)
    volume: str = ""
    dimension: int = MAX_DIMENSION


@dataclass(frozen=True)
class RingClass:
    """A homogeneous class: integer coefficients over the basis of one degree."""

    ring: object = field(compare=False, repr=False)
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.ring.rank(self.degree):
            raise RingError(
                f"degree {self.degree} class needs {self.ring.rank(self.degree)} "
                f"coefficients, got {len(self.coeffs)}"
            )

    def _check_compatible(self, other):
        if not isinstance(other, RingClass) or other.ring is not self.ring:
            raise RingError("classes belong to different rings")
        if other.degree != self.degree:
            raise RingError(f"cannot add classes of degrees {self.degree} and {other.degree}")

    def __add__(self, other):
        self._check_compatible(other)
        return RingClass(self.ring, self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RingClass(self.ring, self.degree, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingClass(self.ring, self.degree, tuple(other * a for a in self.coeffs))
        if not isinstance(other, RingClass) or other.ring is not self.ring:
            raise RingError("classes belong to different rings")
        return self.ring.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def halve(self):
        """Exact division by 2."""
        if any(a % 2 for a in self.coeffs):
            raise RingError(f"{self} is not divisible by 2")
        return RingClass(self.ring, self.degree, tuple(a // 2 for a in self.coeffs))

    def terms(self):
        """Nonzero coefficients keyed by basis label."""
        labels = self.ring.basis.get(self.degree, ())
        return {label: c for label, c in zip(labels, self.coeffs) if c}

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        terms = self.terms()
        if not terms:
            return "0"
        return " + ".join(f"{c}*{label}" for label, c in terms.items())


class GradedRing:
    """A validated ring; built only through mk_graded_ring."""

    def __init__(self, basis, tables, volume, dimension):
        self.basis = {d: tuple(names) for d, names in basis.items() if names}
        self.volume = volume
        self.dimension = dimension
        self._tables = tables
        self._index = {
            name: (degree, i)
            for degree, names in self.basis.items()
            for i, name in enumerate(names)
        }

    def rank(self, degree):
        return len(self.basis.get(degree, ()))

    def degrees(self):
        return range(0, self.dimension + 1, 2)

    def labels(self):
        return list(self._index)

    def element(self, name):
        """Basis element by label."""
        if name not in self._index:
            raise RingError(f"unknown basis element {name!r}")
        degree, i = self._index[name]
        coeffs = [0] * self.rank(degree)
        coeffs[i] = 1
        return RingClass(self, degree, tuple(coeffs))

    def from_terms(self, degree, terms):
        """Class of a given degree from {label: coefficient}."""
        coeffs = [0] * self.rank(degree)
        for name, c in terms.items():
            label_degree, i = self._index.get(name, (None, None))
            if label_degree != degree:
                raise RingError(f"{name!r} is not a degree {degree} basis element")
            coeffs[i] += c
        return RingClass(self, degree, tuple(coeffs))

    def zero(self, degree):
        return RingClass(self, degree, (0,) * self.rank(degree))

    @property
    def unit(self):
        return self.element(self.basis[0][0])

    def multiply(self, a, b):
        degree = a.degree + b.degree
        table = self._tables.get((a.degree, b.degree))
        if table is None or table.size == 0:
            return self.zero(degree)
        left = np.array(a.coeffs, dtype=object)
        right = np.array(b.coeffs, dtype=object)
        result = np.tensordot(np.tensordot(left, table, axes=(0, 0)), right, axes=(0, 0))
        return RingClass(self, degree, tuple(int(c) for c in result))


def integrate(c):
    """Evaluate a top-degree class on the fundamental class.

    Args:
        c: RingClass of degree equal to the ring dimension

    Returns:
        The coefficient of the volume class
    """
    if c.degree != c.ring.dimension:
        raise RingError(f"can only integrate degree {c.ring.dimension} classes, got degree {c.degree}")
    return c.coeffs[0]


def _vector(basis, degree, terms, context):
    names = basis.get(degree, [])
    vec = np.zeros(len(names), dtype=object)
    for name, c in terms.items():
        if name not in names:
            raise RingError(f"{context}: {name!r} is not a degree {degree} basis element")
        vec[names.index(name)] += c
    return vec


def mk_graded_ring(presentation):
    """Validate a presentation and build its multiplication tables.

    Args:
        presentation: RingPresentation

    Returns:
        GradedRing

    Raises:
        RingError: malformed basis, missing volume class, degree mismatch,
            non-commutative or non-associative tables
    """
    dimension = presentation.dimension
    if dimension % 2 or not 0 < dimension <= MAX_DIMENSION:
        raise RingError(f"dimension must be 2, 4 or 6, got {dimension}")

    basis = {d: list(presentation.basis.get(d, [])) for d in range(0, dimension + 1, 2)}
    extra = set(presentation.basis) - set(basis)
    if any(presentation.basis[d] for d in extra):
        raise RingError(f"basis degrees {sorted(extra)} outside 0..{dimension} (even)")
    if len(basis[0]) != 1:
        raise RingError("degree 0 must have rank 1 (the unit)")
    if not basis[dimension]:
        raise RingError(f"missing volume class: no degree {dimension} basis")
    if basis[dimension] != [presentation.volume]:
        raise RingError(
            f"degree {dimension} basis must be exactly the volume class "
            f"{presentation.volume!r}, got {basis[dimension]}"
        )

    degree_of = {}
    for degree, names in basis.items():
        for name in names:
            if name in degree_of:
                raise RingError(f"duplicate basis label {name!r}")
            degree_of[name] = degree

    tables = {}
    for d, e in cartesian(basis, repeat=2):
        if d + e <= dimension:
            table = np.zeros((len(basis[d]), len(basis[e]), len(basis[d + e])), dtype=object)
            tables[(d, e)] = table

    unit = basis[0][0]
    for name, degree in degree_of.items():
        i = basis[degree].index(name)
        tables[(0, degree)][0, i, i] = 1
        tables[(degree, 0)][i, 0, i] = 1

    given = {}
    for (a, b), terms in presentation.products.items():
        if a not in degree_of or b not in degree_of:
            raise RingError(f"product ({a}, {b}) uses an unknown basis label")
        da, db = degree_of[a], degree_of[b]
        if da + db > dimension:
            if any(terms.values()):
                raise RingError(f"product ({a}, {b}) lands above degree {dimension}")
            continue
        vec = _vector(basis, da + db, terms, f"product ({a}, {b})")
        if unit in (a, b):
            other = b if a == unit else a
            expected = _vector(basis, degree_of[other], {other: 1}, "unit")
            if not np.array_equal(vec, expected):
                raise RingError(f"unit does not act as identity on {other!r}")
            continue
        given[(a, b)] = vec

    for (a, b), vec in given.items():
        da, db = degree_of[a], degree_of[b]
        ia, ib = basis[da].index(a), basis[db].index(b)
        tables[(da, db)][ia, ib, :] = vec
        if (b, a) not in given:
            tables[(db, da)][ib, ia, :] = vec

    ring = GradedRing(basis, tables, presentation.volume, dimension)
    _check_commutative(ring, tables)
    _check_associative(ring)
    logger.debug("validated ring with basis %s", ring.basis)
    return ring


def _check_commutative(ring, tables):
    for (d, e), table in tables.items():
        if not np.array_equal(table, tables[(e, d)].transpose(1, 0, 2)):
            raise RingError(f"multiplication is not commutative in degrees ({d}, {e})")


def _check_associative(ring):
    labels = ring.labels()
    for a, b, c in cartesian(labels, repeat=3):
        x, y, z = ring.element(a), ring.element(b), ring.element(c)
        if x.degree + y.degree + z.degree > ring.dimension:
            continue
        if (x * y) * z != x * (y * z):
            raise RingError(f"multiplication is not associative on ({a}, {b}, {c})")
