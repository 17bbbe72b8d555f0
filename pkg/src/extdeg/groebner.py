"""Buchberger's algorithm for graded submodules of F, initial modules and gin.

Internally a polynomial vector is a ``dict`` mapping ``(exponents, component)``
to a nonzero coefficient; :class:`~extdeg.poly.ModuleElement` is used at the
public boundary.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import GinDisagreementError, MathAssertionError, StructureError
from .monomial import MonomialSubmodule, hilbert_series, is_borel_type, minimalize
from .poly import (
    REVLEX,
    FreeModuleShape,
    ModuleElement,
    RingContext,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    order_key,
)

ENTRY_BOUND = 10_000
MAX_RESAMPLES = 100


class PrimeFieldWarning(UserWarning):
    pass


# -- dict-polynomial kernel ---------------------------------------------------


class _Arith:
    """Coefficient handling for the reduction kernel.

    Over GF(p) polynomials are kept monic.  Over QQ they are kept with
    primitive integer coefficients (fraction-free reduction), which avoids
    the gcd cost of :class:`~fractions.Fraction` arithmetic.
    """

    def __init__(self, ring: RingContext):
        self.p = ring.characteristic

    def norm(self, c):
        return c % self.p if self.p else c

    def monic(self, f, lt):
        """Monic copy of a normalized polynomial, with field coefficients."""
        lc = f[lt]
        if self.p or lc == 1:
            return f
        return {t: Fraction(c, lc) for t, c in f.items()}

    def normalize(self, f, lt):
        """Return ``(g, s)`` with f = s * g and g normalized."""
        p = self.p
        if p:
            lc = f[lt]
            if lc == 1:
                return f, 1
            inv = pow(lc, -1, p)
            return {t: c * inv % p for t, c in f.items()}, lc
        den = 1
        for c in f.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                den = lcm(den, c.denominator)
        ints = {t: int(c * den) for t, c in f.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
            if g == 1:
                break
        if ints[lt] < 0:
            g = -g
        if g != 1:
            ints = {t: c // g for t, c in ints.items()}
        return ints, Fraction(g, den)


def _leading(f, key):
    return max(f, key=lambda t: key(t[0], t[1]))


def _content(f, rem):
    g = 0
    for c in f.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    for c in rem.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _sub_multiple(f, c, shift, g, p):
    """f - c * x^shift * g, in place."""
    for (v, j), b in g.items():
        t = (mono_mul(v, shift), j)
        val = f.get(t, 0) - c * b
        if p:
            val %= p
        if val:
            f[t] = val
        else:
            f.pop(t, None)


class _Basis:
    """Normalized polynomials indexed by component for fast divisor lookup."""

    def __init__(self, key, ar):
        self.key = key
        self.ar = ar
        self.polys = []
        self.leads = []
        self.by_comp = {}

    def add(self, g):
        lt = _leading(g, self.key)
        g, _ = self.ar.normalize(g, lt)
        self.polys.append(g)
        self.leads.append(lt)
        self.by_comp.setdefault(lt[1], []).append(len(self.polys) - 1)
        return len(self.polys) - 1

    def divisor(self, term, active=None):
        u, j = term
        for k in self.by_comp.get(j, ()):
            if active is not None and k not in active:
                continue
            if mono_divides(self.leads[k][0], u):
                return k
        return None


_CONTENT_EVERY = 8


def _reduce_dict(f, basis: _Basis, active=None):
    """Normal form of ``f`` modulo the basis, as ``(r, s)`` with the true remainder s * r."""
    if not f:
        return {}, 1
    key, ar = basis.key, basis.ar
    p = ar.p
    f, scale = ar.normalize(dict(f), _leading(f, key))
    rem = {}
    steps = 0
    while f:
        t = _leading(f, key)
        k = basis.divisor(t, active)
        if k is None:
            rem[t] = f.pop(t)
            continue
        g = basis.polys[k]
        c = f[t]
        if p:
            mult = c
        else:
            a = g[basis.leads[k]]
            h = gcd(a, c)
            mf, mult = a // h, c // h
            if mf < 0:
                mf, mult = -mf, -mult
            if mf != 1:
                for s in f:
                    f[s] *= mf
                for s in rem:
                    rem[s] *= mf
                scale /= mf
        _sub_multiple(f, mult, mono_div(t[0], basis.leads[k][0]), g, p)
        steps += 1
        if not p and steps % _CONTENT_EVERY == 0:
            h = _content(f, rem)
            if h > 1:
                for s in f:
                    f[s] //= h
                for s in rem:
                    rem[s] //= h
                scale *= h
    return rem, scale


# -- public types --------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    shape: FreeModuleShape
    order: str
    elements: tuple
    source: tuple = field(default=(), compare=False)

    def leading_terms(self):
        return [(e.terms[0][0], e.terms[0][1]) for e in self.elements]


def _to_dicts(gens: Sequence[ModuleElement]):
    return [dict(g.as_dict()) for g in gens if g]


def reduce(e: ModuleElement, basis: Sequence[ModuleElement], order=REVLEX) -> ModuleElement:
    """Fully reduced normal form of ``e`` modulo ``basis``."""
    key = order_key(order, e.shape)
    b = _Basis(key, _Arith(e.ring))
    for g in basis:
        if not g:
            raise StructureError("basis elements must be nonzero")
        b.add(dict(g.as_dict()))
    r, scale = _reduce_dict(e.as_dict(), b)
    return ModuleElement.from_dict(e.ring, e.shape, {t: c * scale for t, c in r.items()}, order)


def _degree_of(term, twists):
    u, j = term
    return sum(u) + twists[j]


def buchberger(gens: Sequence[ModuleElement], order=REVLEX, ring=None, shape=None) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by homogeneous ``gens``.

    Pairs are taken lowest degree first; only leading terms in the same
    component give S-pairs.  Pairs are skipped by the coprime-leading-monomial
    criterion (rank one only) and by the chain criterion.
    """
    gens = list(gens)
    if gens:
        ring, shape = gens[0].ring, gens[0].shape
    if ring is None or shape is None:
        raise StructureError("ring and shape required for an empty generator list")
    for g in gens:
        if g.ring != ring or g.shape != shape:
            raise StructureError("generators live in different free modules")
        if g and not g.is_homogeneous():
            raise StructureError(f"generator {g} is not homogeneous")
    key = order_key(order, shape)
    ar = _Arith(ring)
    p = ar.p
    twists = shape.twists
    basis = _Basis(key, ar)
    pairs = []
    open_pairs = set()
    pending = sorted(_to_dicts(gens), key=lambda f: _degree_of(next(iter(f)), twists))

    def insert(h):
        k = basis.add(h)
        lt_k = basis.leads[k]
        for i in basis.by_comp[lt_k[1]]:
            if i == k:
                continue
            lt_i = basis.leads[i]
            if shape.m == 1 and all(a == 0 or b == 0 for a, b in zip(lt_i[0], lt_k[0])):
                continue
            lcm_ik = mono_lcm(lt_i[0], lt_k[0])
            pairs.append((sum(lcm_ik) + twists[lt_k[1]], i, k, lcm_ik))
            open_pairs.add((i, k))

    def chain_skip(i, k, lcm_ik):
        comp = basis.leads[i][1]
        for l in basis.by_comp[comp]:
            if l == i or l == k or not mono_divides(basis.leads[l][0], lcm_ik):
                continue
            if (min(i, l), max(i, l)) not in open_pairs and (min(k, l), max(k, l)) not in open_pairs:
                return True
        return False

    while pending or pairs:
        # process everything of the lowest available degree
        deg_p = min((q[0] for q in pairs), default=None)
        deg_g = _degree_of(next(iter(pending[0])), twists) if pending else None
        if deg_g is not None and (deg_p is None or deg_g <= deg_p):
            h, _ = _reduce_dict(pending.pop(0), basis)
            if h:
                insert(h)
            continue
        pairs.sort(key=lambda q: q[0])
        _, i, k, lcm_ik = pairs.pop(0)
        open_pairs.discard((i, k))
        if chain_skip(i, k, lcm_ik):
            continue
        lt_i, lt_k = basis.leads[i], basis.leads[k]
        fi, fk = basis.polys[i], basis.polys[k]
        ci, ck = (1, 1) if p else (fk[lt_k], fi[lt_i])
        si = mono_div(lcm_ik, lt_i[0])
        s = {(mono_mul(v, si), j): ci * c for (v, j), c in fi.items()}
        _sub_multiple(s, ck, mono_div(lcm_ik, lt_k[0]), fk, p)
        if s:
            h, _ = _reduce_dict(s, basis)
            if h:
                insert(h)

    reduced = _interreduce(basis, key, ar)
    elements = tuple(
        sorted(
            (ModuleElement.from_dict(ring, shape, f, order) for f in reduced),
            key=lambda e: key(e.terms[0][0], e.terms[0][1]),
        )
    )
    return GroebnerBasis(ring, shape, order, elements, tuple(gens))


def _interreduce(basis: _Basis, key, ar):
    """Minimal, fully reduced, monic basis from a Groebner basis."""
    idx = list(range(len(basis.polys)))
    keep = []
    for k in idx:
        lt = basis.leads[k]
        redundant = False
        for i in idx:
            if i == k or basis.leads[i][1] != lt[1]:
                continue
            lu = basis.leads[i][0]
            if mono_divides(lu, lt[0]) and (lu != lt[0] or i < k):
                redundant = True
                break
        if not redundant:
            keep.append(k)
    active = set(keep)
    out = []
    for k in keep:
        g = dict(basis.polys[k])
        lt = basis.leads[k]
        c = g.pop(lt)
        tail, scale = _reduce_dict(g, basis, active - {k})
        # true element: c*lt + scale*tail; make it monic
        f = {t: ar.norm(v * scale / c if not ar.p else v * scale * pow(c, -1, ar.p)) for t, v in tail.items()}
        f[lt] = 1
        out.append({t: v for t, v in f.items() if v})
    return out


def initial_module(gb: GroebnerBasis) -> MonomialSubmodule:
    return minimalize(gb.ring, gb.shape, gb.leading_terms())


def initial_module_of(gens: Sequence[ModuleElement], order=REVLEX, ring=None, shape=None):
    return initial_module(buchberger(gens, order, ring, shape))


# -- coordinate changes and gin -----------------------------------------------


def _det_nonzero(mat, ring):
    """Gaussian elimination over the coefficient field."""
    p = ring.characteristic
    a = [[ring.coerce(x) for x in row] for row in mat]
    n = len(a)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return False
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, p) if p else 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [(x - f * y) % p if p else x - f * y for x, y in zip(a[r], a[col])]
    return True


def _inverse(mat, ring):
    p = ring.characteristic
    n = len(mat)
    a = [[ring.coerce(x) for x in row] + [ring.coerce(int(i == r)) for i in range(n)] for r, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise StructureError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, p) if p else 1 / a[col][col]
        a[col] = [ring.coerce(x * inv) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [ring.coerce(x - f * y) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class CoordinateChange:
    """x_i -> sum_k ring_matrix[i][k] x_k and e_j -> sum_k module_matrix[k][j] e_k.

    ``module_matrix`` is block diagonal over groups of basis elements with equal
    twist, so the grading is preserved.
    """

    ring_matrix: tuple
    module_matrix: tuple
    seed: object = None

    def inverse(self, ring):
        return CoordinateChange(
            tuple(map(tuple, _inverse(self.ring_matrix, ring))),
            tuple(map(tuple, _inverse(self.module_matrix, ring))),
            self.seed,
        )


def _sample_matrix(rng, size, ring):
    p = ring.characteristic
    for _ in range(MAX_RESAMPLES):
        if p:
            mat = [[rng.randrange(1, p) for _ in range(size)] for _ in range(size)]
        else:
            mat = [[rng.randint(-ENTRY_BOUND, ENTRY_BOUND) for _ in range(size)] for _ in range(size)]
        if _det_nonzero(mat, ring):
            return mat
    raise MathAssertionError(f"no invertible {size}x{size} sample in {MAX_RESAMPLES} attempts")


def random_change(ring: RingContext, shape: FreeModuleShape, seed) -> CoordinateChange:
    """Deterministic random element of GL(n) x (block-constant part of GL(F))."""
    rng = random.Random(f"extdeg-change/{seed}")
    A = _sample_matrix(rng, ring.n, ring) if ring.n else []
    m = shape.m
    B = [[ring.coerce(int(i == j)) for j in range(m)] for i in range(m)]
    groups = {}
    for j, tw in enumerate(shape.twists):
        groups.setdefault(tw, []).append(j)
    for tw in sorted(groups):
        idx = groups[tw]
        if len(idx) > 1:
            block = _sample_matrix(rng, len(idx), ring)
            for a, r in enumerate(idx):
                for b, c in enumerate(idx):
                    B[r][c] = ring.coerce(block[a][b])
    return CoordinateChange(
        tuple(tuple(ring.coerce(x) for x in row) for row in A),
        tuple(tuple(row) for row in B),
        seed,
    )


def _poly_mul(f, g, ar):
    out = {}
    for u, a in f.items():
        for v, b in g.items():
            w = mono_mul(u, v)
            out[w] = out.get(w, 0) + a * b
    return {w: ar.norm(c) for w, c in out.items() if ar.norm(c)}


def apply_change(change: CoordinateChange, gens: Sequence[ModuleElement]):
    if not gens:
        return []
    ring, shape = gens[0].ring, gens[0].shape
    ar = _Arith(ring)
    n = ring.n
    A, B = change.ring_matrix, change.module_matrix
    linear = [{tuple(int(k == t) for t in range(n)): A[i][k] for k in range(n) if A[i][k]} for i in range(n)]
    one = {(0,) * n: ring.coerce(1)}
    powers = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = one if e == 0 else _poly_mul(power(i, e - 1), linear[i], ar)
        return powers[(i, e)]

    out = []
    for g in gens:
        acc = {}
        for u, j, c in g.terms:
            image = {(0,) * n: c}
            for i, e in enumerate(u):
                if e:
                    image = _poly_mul(image, power(i, e), ar)
            for k in range(shape.m):
                b = B[k][j]
                if not b:
                    continue
                for w, a in image.items():
                    acc[(w, k)] = acc.get((w, k), 0) + a * b
        out.append(ModuleElement.from_dict(ring, shape, acc, g.order))
    return out


def _trial_seed(master, k):
    return f"{master}:{k}"


def gin(gens: Sequence[ModuleElement], trials=3, seed=0, ring=None, shape=None, check=True) -> MonomialSubmodule:
    """Generic initial module with respect to revlex, by consensus of random trials.

    The answer is correct with probability one but is never certified.
    """
    gens = [g for g in gens if g]
    if gens:
        ring, shape = gens[0].ring, gens[0].shape
    if ring is None or shape is None:
        raise StructureError("ring and shape required for an empty generator list")
    if trials < 1:
        raise StructureError("need at least one trial")
    if ring.characteristic:
        warnings.warn(
            f"gin over GF({ring.characteristic}) may differ from characteristic 0",
            PrimeFieldWarning,
            stacklevel=2,
        )
        if ring.characteristic < 32003:
            warnings.warn("small prime field: random changes are not reliably generic", PrimeFieldWarning, stacklevel=2)
    if not gens:
        return MonomialSubmodule.zero(ring, shape)
    candidates = []
    for k in range(trials):
        change = random_change(ring, shape, _trial_seed(seed, k))
        candidates.append(initial_module_of(apply_change(change, gens), REVLEX))
    if any(c != candidates[0] for c in candidates):
        raise GinDisagreementError(sorted({str(c) for c in candidates}))
    result = candidates[0]
    if check:
        expected = hilbert_series(initial_module_of(gens, REVLEX))
        if hilbert_series(result) != expected:
            raise MathAssertionError("gin changed the Hilbert series")
        if ring.characteristic == 0 and not is_borel_type(result):
            raise MathAssertionError(f"gin candidate {result} is not of Borel type")
    return result


def monomial_elements(U: MonomialSubmodule, order=REVLEX):
    """The generators of a monomial submodule as module elements."""
    return [ModuleElement.monomial(U.ring, U.shape, u, j, 1, order) for u, j in U.sorted_gens()]


def ideal_dimension_in_degree(gens: Sequence[ModuleElement], degree: int) -> int:
    """dim_K U_degree by linear algebra on all monomial multiples (independent of Groebner bases)."""
    if not gens:
        return 0
    ring = gens[0].ring
    p = ring.characteristic
    rows = []
    for g in gens:
        if not g:
            continue
        dg = g.degree()
        for u in monomials_of_degree(ring.n, degree - dg):
            rows.append({(mono_mul(v, u), j): c for v, j, c in g.terms})
    # row echelon with dict rows, pivot on the largest key
    pivots = {}
    rank = 0
    for r in rows:
        r = dict(r)
        while r:
            t = max(r)
            if t in pivots:
                prow = pivots[t]
                f = r[t]
                for s, c in prow.items():
                    val = r.get(s, 0) - f * c
                    if p:
                        val %= p
                    if val:
                        r[s] = val
                    else:
                        r.pop(s, None)
            else:
                inv = pow(r[t], -1, p) if p else 1 / Fraction(r[t])
                pivots[t] = {s: (c * inv) % p if p else c * inv for s, c in r.items()}
                rank += 1
                break
    return rank
