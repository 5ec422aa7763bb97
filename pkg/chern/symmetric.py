"""Symmetric polynomials in Chern roots and their elementary-class expansion."""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Optional, Tuple

import config
from core.errors import DegreeTooSmall, NotSymmetric
from core.polynomial import Exponents, GradedPolynomial
from core.ring import RingDescriptor

logger = logging.getLogger(__name__)


def root_name(i: int) -> str:
    return f"x{i}"


def chern_name(i: int) -> str:
    return f"c{i}"


def roots_ring(base: RingDescriptor, n: int) -> RingDescriptor:
    """*base* extended with Chern roots ``x1..xn`` of weight 1."""
    return base.extend((root_name(i), 1) for i in range(1, n + 1))


def chern_classes_ring(base: RingDescriptor, n: int) -> RingDescriptor:
    """*base* extended with Chern classes ``c1..cn``, ``c_i`` of weight ``i``."""
    return base.extend((chern_name(i), i) for i in range(1, n + 1))


def split_roots_ring(ring: RingDescriptor) -> Tuple[RingDescriptor, int]:
    """Undo :func:`roots_ring`: return the base ring and the number of roots."""
    names = ring.names
    start = names.index(root_name(1)) if root_name(1) in names else ring.rank
    base = RingDescriptor(ring.base, ring.generators[:start])
    n = ring.rank - start
    if roots_ring(base, n) != ring:
        raise ValueError(f"{ring} does not end with Chern roots x1..xn")
    return base, n


def elementary_symmetric(ring: RingDescriptor, k: int) -> GradedPolynomial:
    """``e_k`` of the roots of a ring built by :func:`roots_ring`."""
    base, n = split_roots_ring(ring)
    g = base.rank
    terms: Dict[Exponents, int] = {}
    if k == 0:
        return GradedPolynomial.one(ring)
    for chosen in combinations(range(n), k):
        exps = [0] * ring.rank
        for i in chosen:
            exps[g + i] = 1
        terms[tuple(exps)] = 1
    return GradedPolynomial(ring, terms)


def _root_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    if n <= config.FULL_PERMUTATION_LIMIT:
        for perm in permutations(range(n)):
            yield perm
        return
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        yield tuple(perm)


def is_symmetric(s: GradedPolynomial) -> bool:
    """True iff *s* is invariant under permuting its Chern roots.

    Every permutation is tried for up to ``config.FULL_PERMUTATION_LIMIT``
    roots, adjacent transpositions beyond.
    """
    base, n = split_roots_ring(s.ring)
    g = base.rank
    terms = s.terms
    for perm in _root_permutations(n):
        for exps, value in terms.items():
            roots = exps[g:]
            moved = exps[:g] + tuple(roots[j] for j in perm)
            if terms.get(moved) != value:
                return False
    return True


def _root_degree(exps: Exponents, g: int) -> int:
    return sum(exps[g:])


def expand_in_elementary(s: GradedPolynomial, degree: Optional[int] = None) -> GradedPolynomial:
    """Write the symmetric *s* as a polynomial in ``c_i = e_i(x1..xn)``.

    Leading terms in the lexicographic order of root exponents are removed
    one at a time. Raises :class:`NotSymmetric` for non-symmetric input and
    :class:`DegreeTooSmall` when *s* has root degree above *degree*.
    """
    base, n = split_roots_ring(s.ring)
    g = base.rank
    if degree is not None and any(_root_degree(e, g) > degree for e in s.terms):
        raise DegreeTooSmall(f"polynomial has root degree above {degree}")
    if not is_symmetric(s):
        raise NotSymmetric(f"{s} is not symmetric in x1..x{n}")
    target = chern_classes_ring(base, n)
    if n == 0:
        return GradedPolynomial(target, s.terms)
    elementary = [elementary_symmetric(s.ring, k) for k in range(1, n + 1)]
    cache: Dict[Tuple[int, int], GradedPolynomial] = {}

    def power(k: int, e: int) -> GradedPolynomial:
        if (k, e) not in cache:
            cache[(k, e)] = elementary[k] ** e
        return cache[(k, e)]

    out: Dict[Exponents, Fraction] = {}
    rest = s
    steps = 0
    while not rest.is_zero:
        lead = max(exps[g:] for exps in rest.terms)
        coeff = {exps[:g] + (0,) * n: value for exps, value in rest.terms.items() if exps[g:] == lead}
        steps_exps = [lead[k] - lead[k + 1] for k in range(n - 1)] + [lead[n - 1]]
        product = GradedPolynomial(s.ring, coeff)
        for k, e in enumerate(steps_exps):
            if e:
                product = product * power(k, e)
        rest = rest - product
        for exps, value in coeff.items():
            out[exps[:g] + tuple(steps_exps)] = value
        steps += 1
    logger.debug("expanded a symmetric polynomial in %d roots in %d steps", n, steps)
    return GradedPolynomial(target, out)


def substitute_elementary(p: GradedPolynomial, ring: RingDescriptor) -> GradedPolynomial:
    """Replace each ``c_i`` by ``e_i`` of the roots of *ring*."""
    base, n = split_roots_ring(ring)
    assignments = {chern_name(k): elementary_symmetric(ring, k) for k in range(1, n + 1)}
    return p.specialize(assignments, ring)


def root_polynomials(ring: RingDescriptor) -> List[GradedPolynomial]:
    """The roots ``x1..xn`` of *ring* as polynomials."""
    _, n = split_roots_ring(ring)
    return [GradedPolynomial.generator(ring, root_name(i)) for i in range(1, n + 1)]
