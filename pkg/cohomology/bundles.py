"""Ring presentations of surfaces, CP3 and projectivized rank-2 bundles."""

import logging

from cohomology.ring import RingPresentation, mk_graded_ring
from utils.errors import RingError

logger = logging.getLogger(__name__)

SURFACE_DIMENSION = 4
XI = "xi"


def surface_characteristic_ring(s):
    """Subring of H*(M) generated by u = c1(M) and the point class.

    u^2 = c1^2(M) pt. Every Chern number of the constructions over M only
    involves these classes.
    """
    return mk_graded_ring(RingPresentation(
        basis={0: ["1"], 2: ["u"], 4: ["pt"]},
        products={("u", "u"): {"pt": s.c1_squared}},
        volume="pt",
        dimension=SURFACE_DIMENSION,
    ))


def cp3_ring():
    """Z[H]/(H^4)."""
    return mk_graded_ring(RingPresentation(
        basis={0: ["1"], 2: ["H"], 4: ["H2"], 6: ["H3"]},
        products={("H", "H"): {"H2": 1}, ("H", "H2"): {"H3": 1}},
        volume="H3",
    ))


def _times_xi(name):
    return XI if name == "1" else f"{name}*{XI}"


def projective_bundle_ring(base, c1E, c2E):
    """H* of P(E) for a rank-2 bundle E over a 4-dimensional base.

    Basis {pi*b} + {pi*b . xi}, reduced with xi^2 = pi*c1(E) xi - pi*c2(E).
    Pulled-back classes keep their base labels.

    Args:
        base: GradedRing of dimension 4
        c1E: Degree 2 class of base
        c2E: Degree 4 class of base

    Returns:
        (GradedRing, xi)
    """
    if base.dimension != SURFACE_DIMENSION:
        raise RingError(f"projective_bundle_ring needs a 4-dimensional base, got {base.dimension}")
    if c1E.ring is not base or c2E.ring is not base:
        raise RingError("bundle Chern classes must live in the base ring")
    if c1E.degree != 2 or c2E.degree != 4:
        raise RingError(f"c1(E), c2(E) must have degrees 2, 4; got {c1E.degree}, {c2E.degree}")

    basis = {}
    lifts = {}  # label -> (A, B) meaning pi*A + pi*B . xi
    for degree in range(0, 7, 2):
        names = []
        for name in base.basis.get(degree, ()):
            names.append(name)
            lifts[name] = (base.element(name), None)
        for name in base.basis.get(degree - 2, ()):
            names.append(_times_xi(name))
            lifts[_times_xi(name)] = (None, base.element(name))
        basis[degree] = names

    def mul(x, y):
        return None if x is None or y is None else x * y

    def add(*classes):
        present = [c for c in classes if c is not None]
        if not present:
            return None
        total = present[0]
        for c in present[1:]:
            total = total + c
        return total

    def to_terms(a, b):
        terms = {}
        if a is not None:
            terms.update(a.terms())
        if b is not None:
            terms.update({_times_xi(name): c for name, c in b.terms().items()})
        return terms

    products = {}
    labels = list(lifts)
    for i, p in enumerate(labels):
        for q in labels[i:]:
            a1, b1 = lifts[p]
            a2, b2 = lifts[q]
            xi_squared = mul(b1, b2)
            constant = add(mul(a1, a2), None if xi_squared is None else -(xi_squared * c2E))
            linear = add(mul(a1, b2), mul(b1, a2), None if xi_squared is None else xi_squared * c1E)
            terms = to_terms(constant, linear)
            if terms:
                products[(p, q)] = terms

    ring = mk_graded_ring(RingPresentation(
        basis=basis,
        products=products,
        volume=_times_xi(base.volume),
    ))
    logger.debug("projective bundle ring: xi^2 = (%s) xi - (%s)", c1E, c2E)
    return ring, ring.element(XI)
