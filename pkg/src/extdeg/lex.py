"""Lexicographic submodules with a prescribed Hilbert function."""

from __future__ import annotations

from itertools import islice
from math import comb

from .errors import DegreeCapError, MacaulayError, StructureError
from .monomial import HilbertSeries, MonomialSubmodule, contains, hilbert_series, minimalize, saturate
from .poly import FreeModuleShape, RingContext, monomials_of_degree

DEFAULT_DEGREE_CAP = 50


def free_dimension(n, shape: FreeModuleShape, d):
    """dim_K F_d."""
    total = 0
    for tw in shape.twists:
        r = d - tw
        if r >= 0:
            total += comb(r + n - 1, n - 1) if n else int(r == 0)
    return total


def lex_monomials(n, shape: FreeModuleShape, d):
    """Monomials of F_d, largest first: e_1's block, then e_2's, each lex-descending."""
    for j, tw in enumerate(shape.twists):
        for u in monomials_of_degree(n, d - tw):
            yield (u, j)


def _count(n, d):
    if d < 0:
        return 0
    return comb(d + n - 1, n - 1) if n else int(d == 0)


def _ascending(n, d, skip=0):
    """Monomials of degree d in lex-ascending order, starting after the ``skip`` smallest."""
    if n == 0:
        if d == 0 and skip == 0:
            yield ()
        return
    if n == 1:
        if skip == 0:
            yield (d,)
        return
    for a in range(d + 1):
        block = _count(n - 1, d - a)
        if skip >= block:
            skip -= block
            continue
        for rest in _ascending(n - 1, d - a, skip):
            yield (a,) + rest
        skip = 0


def lex_segment(shape: FreeModuleShape, ring: RingContext, d: int, s: int):
    """The first ``s`` monomials of F_d in the lex order."""
    size = free_dimension(ring.n, shape, d)
    if not 0 <= s <= size:
        raise StructureError(f"segment size {s} outside 0..{size}")
    return list(islice(lex_monomials(ring.n, shape, d), s))


def lex_module(U: MonomialSubmodule, degree_cap=DEFAULT_DEGREE_CAP) -> MonomialSubmodule:
    """The lex submodule with the same Hilbert function as U.

    Built degree by degree; stops as soon as its Hilbert series equals U's.
    """
    if U.shape.m == 1 and U.n > 0:
        return _lex_ideal(U, degree_cap)
    return _lex_generic(U, degree_cap)


def _lex_generic(U: MonomialSubmodule, degree_cap):
    """Any rank: fill each degree with a segment and compare Hilbert series."""
    n, shape = U.n, U.shape
    target = hilbert_series(U)
    gens = []
    L = MonomialSubmodule.zero(U.ring, shape)
    current = hilbert_series(L)
    d = min(shape.twists)
    while current != target:
        if d > degree_cap:
            raise DegreeCapError(f"lex construction did not stabilise by degree {degree_cap}")
        size = free_dimension(n, shape, d)
        want = size - target.value(d)
        have = size - current.value(d)
        if have > want:
            raise MacaulayError(f"degree {d}: span of earlier generators ({have}) exceeds target ({want})")
        if want > have:
            seen = 0
            new = []
            for term in islice(lex_monomials(n, shape, d), want):
                if contains(L, term):
                    seen += 1
                else:
                    new.append(term)
            if seen != have:
                raise MacaulayError(f"degree {d}: earlier generators do not span a lex segment")
            gens.extend(new)
            L = minimalize(U.ring, shape, gens)
            current = hilbert_series(L)
        d += 1
    return L


def _lex_ideal(U: MonomialSubmodule, degree_cap):
    """Rank one, with the series of the partial result kept incrementally.

    At every stage the ideal generated so far is lex, hence stable, so it is
    the direct sum of g * K[x_m(g)..x_n] over its generators g, m(g) the last
    variable of g.  That gives its series, and with it how much of the next
    degree is already spanned, without any pivot recursion.
    """
    n, tw = U.n, U.shape.twists[0]
    target = hilbert_series(U)
    # numerator of S/L over (1-t)^n, relative to t^tw
    num = [1]
    gens = []
    d = tw
    current = HilbertSeries(tuple(num), n, tw)
    while current != target:
        if d > degree_cap:
            raise DegreeCapError(f"lex construction did not stabilise by degree {degree_cap}")
        r = d - tw
        h, spanned = target.value(d), current.value(d)
        if h > spanned:
            raise MacaulayError(f"degree {d}: target {h} exceeds what earlier generators leave ({spanned})")
        # L_d and (S_1 L)_d are initial segments: new generators sit just above the h smallest monomials
        new = list(islice(_ascending(n, r, h), spanned - h))
        for u in new:
            last = max(i for i, e in enumerate(u) if e) if r else 0
            # subtract t^r (1-t)^(last) from the numerator
            if len(num) < r + last + 1:
                num.extend([0] * (r + last + 1 - len(num)))
            for k in range(last + 1):
                num[r + k] -= (-1) ** k * comb(last, k)
        gens.extend(new)
        if new:
            current = HilbertSeries(tuple(num), n, tw)
        d += 1
    return MonomialSubmodule(U.ring, U.shape, frozenset((u, 0) for u in gens))


def is_lex_segment_in_degree(L: MonomialSubmodule, d: int) -> bool:
    """Whether L_d is spanned by an initial segment of F_d."""
    inside = [contains(L, t) for t in lex_monomials(L.n, L.shape, d)]
    k = sum(inside)
    return all(inside[:k])


def saturate_lex(L: MonomialSubmodule) -> MonomialSubmodule:
    return saturate(L)
