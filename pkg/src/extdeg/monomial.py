"""Monomial submodules U = I_1 e_1 + ... + I_m e_m of a graded free module F.

Covers minimal generation, colon and saturation by variables, intersections,
the Borel-type test, Hilbert series of F/U, dimension, degree and lengths of
finite-length quotients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple

from .errors import ContainmentError, InfiniteLengthError, NotRegularError, StructureError
from .poly import (
    FreeModuleShape,
    RingContext,
    check_shape,
    format_monomial,
    mono_divides,
    mono_lcm,
    monomials_of_degree,
)


def _minimal(gens):
    """Drop every generator divisible by another one in the same component."""
    by_comp = {}
    for u, j in gens:
        by_comp.setdefault(j, set()).add(tuple(u))
    out = set()
    for j, mons in by_comp.items():
        # sorting by degree means a divisor is always seen before its multiples
        kept = []
        for u in sorted(mons, key=lambda v: (sum(v), v)):
            if not any(mono_divides(g, u) for g in kept):
                kept.append(u)
        out.update((u, j) for u in kept)
    return frozenset(out)


@dataclass(frozen=True)
class MonomialSubmodule:
    """A monomial submodule given by its unique minimal generating set.

    ``gens`` holds ``(exponents, component)`` pairs with 0-based components.
    Use :func:`minimalize` (or :meth:`of`) to build one from arbitrary generators.
    """

    ring: RingContext
    shape: FreeModuleShape
    gens: frozenset

    @classmethod
    def of(cls, ring, gens: Iterable = (), shape: FreeModuleShape | None = None):
        return minimalize(ring, shape or FreeModuleShape(), gens)

    @classmethod
    def zero(cls, ring, shape=None):
        return cls(ring, shape or FreeModuleShape(), frozenset())

    @classmethod
    def full(cls, ring, shape=None):
        shape = shape or FreeModuleShape()
        one = (0,) * ring.n
        return cls(ring, shape, frozenset((one, j) for j in range(shape.m)))

    @property
    def n(self):
        return self.ring.n

    def component(self, j):
        """Generators of the ideal I_j, sorted."""
        return sorted((u for u, k in self.gens if k == j), key=lambda v: (sum(v), tuple(-e for e in v)))

    def sorted_gens(self):
        return sorted(self.gens, key=lambda g: (g[1], sum(g[0]), tuple(-e for e in g[0])))

    def __contains__(self, term):
        return contains(self, term)

    def is_zero(self):
        return not self.gens

    def is_full(self):
        one = (0,) * self.n
        return all((one, j) in self.gens for j in range(self.shape.m))

    def max_degree(self):
        tw = self.shape.twists
        return max((sum(u) + tw[j] for u, j in self.gens), default=None)

    def format_gens(self):
        names = self.ring.variables
        out = []
        for u, j in self.sorted_gens():
            mono = format_monomial(u, names)
            if self.shape.m > 1:
                mono = f"e{j + 1}" if mono == "1" else f"{mono}*e{j + 1}"
            out.append(mono)
        return out

    def __str__(self):
        return "(" + ", ".join(self.format_gens()) + ")"


def minimalize(ring, shape, gens) -> MonomialSubmodule:
    gens = [(tuple(u), j) for u, j in gens]
    check_shape(ring.n, shape, gens)
    return MonomialSubmodule(ring, shape, _minimal(gens))


def _same_module(U, V):
    if U.ring.n != V.ring.n or U.shape != V.shape:
        raise StructureError("monomial submodules of different free modules")


def contains(U: MonomialSubmodule, term) -> bool:
    u, j = term
    if len(u) != U.n:
        raise StructureError(f"monomial {u} does not have {U.n} exponents")
    return any(k == j and mono_divides(g, u) for g, k in U.gens)


def is_submodule(V, W):
    """True iff V is contained in W."""
    _same_module(V, W)
    return all(contains(W, g) for g in V.gens)


def colon_variable_power(U: MonomialSubmodule, t: int) -> MonomialSubmodule:
    """U : x_t^inf for a 0-based variable index ``t``: strip x_t from every generator."""
    if not 0 <= t < U.n:
        raise StructureError(f"variable index {t} out of range for {U.n} variables")
    gens = [(u[:t] + (0,) + u[t + 1:], j) for u, j in U.gens]
    return MonomialSubmodule(U.ring, U.shape, _minimal(gens))


def intersect(U: MonomialSubmodule, V: MonomialSubmodule) -> MonomialSubmodule:
    _same_module(U, V)
    gens = [(mono_lcm(u, v), j) for u, j in U.gens for v, k in V.gens if j == k]
    return MonomialSubmodule(U.ring, U.shape, _minimal(gens))


def colon_ideal_power(U: MonomialSubmodule, i: int) -> MonomialSubmodule:
    """U : (x_1, ..., x_i)^inf as the intersection of the single-variable saturations."""
    if not 1 <= i <= U.n:
        raise StructureError(f"need 1 <= i <= {U.n}, got {i}")
    out = colon_variable_power(U, 0)
    for t in range(1, i):
        out = intersect(out, colon_variable_power(U, t))
    return out


def saturate(U: MonomialSubmodule) -> MonomialSubmodule:
    """U : m^inf.  Over the ring with no variables this is all of F."""
    if U.n == 0:
        return MonomialSubmodule.full(U.ring, U.shape)
    return colon_ideal_power(U, U.n)


def borel_type_failure(U: MonomialSubmodule):
    """Smallest i (1-based) with U : x_i^inf != U : (x_1..x_i)^inf, or None."""
    for i in range(1, U.n + 1):
        if colon_variable_power(U, i - 1) != colon_ideal_power(U, i):
            return i
    return None


def is_borel_type(U: MonomialSubmodule) -> bool:
    return borel_type_failure(U) is None


def restrict_variables(U: MonomialSubmodule, keep: int) -> MonomialSubmodule:
    """Re-read U's generators over K[x_1..x_keep]; they must not involve later variables."""
    if not 0 <= keep <= U.n:
        raise StructureError(f"cannot keep {keep} of {U.n} variables")
    for u, j in U.gens:
        if any(u[keep:]):
            raise StructureError(f"generator {u} involves a dropped variable")
    ring = U.ring.drop_last(U.n - keep)
    return MonomialSubmodule(ring, U.shape, frozenset((u[:keep], j) for u, j in U.gens))


def quotient_by_last_variable(U: MonomialSubmodule) -> MonomialSubmodule:
    """Presentation of (F/U)/x_n(F/U) over K[x_1..x_{n-1}], for x_n regular on F/U."""
    if U.n == 0:
        raise StructureError("no variable to divide by")
    if colon_variable_power(U, U.n - 1) != U:
        raise NotRegularError(f"x_{U.n} not regular on F/U")
    gens = [(u[:-1], j) for u, j in U.gens if u[-1] == 0]
    return MonomialSubmodule(U.ring.drop_last(), U.shape, _minimal(gens))


# -- univariate integer polynomials (tuples of coefficients, low degree first) --


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q, sign=1):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += sign * c
    return _trim(out)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for k, b in enumerate(q):
                out[i + k] += a * b
    return _trim(out)


def _shift(p, k):
    return _trim((0,) * k + tuple(p)) if p else ()


def _divide_one_minus_t(p):
    """Exact quotient p / (1 - t), or None if (1 - t) does not divide p."""
    q, acc = [], 0
    for c in p:
        acc += c
        q.append(acc)
    if not p:
        return ()
    if q[-1] != 0:
        return None
    return _trim(q[:-1])


@lru_cache(maxsize=100_000)
def _ideal_numerator(gens: frozenset):
    """K-polynomial N with HS(S/I) = N(t)/(1-t)^n for minimal monomial generators of I."""
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return ()
    n = len(next(iter(gens)))
    usage = Counter(t for g in gens for t in range(n) if g[t])
    var, count = max(usage.items(), key=lambda kv: (kv[1], -kv[0]))
    if count <= 1:
        # supports pairwise disjoint: complete intersection
        out = (1,)
        for g in gens:
            d = sum(g)
            out = _pmul(out, (1,) + (0,) * (d - 1) + (-1,))
        return out
    exps = sorted(g[var] for g in gens if g[var])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if t == var else 0 for t in range(n))
    # 0 -> S/(I:x^e)(-e) -> S/I -> S/(I + x^e) -> 0
    plus = _minimal_ideal(list(gens) + [pivot])
    colon = _minimal_ideal([g[:var] + (max(g[var] - e, 0),) + g[var + 1:] for g in gens])
    return _padd(_ideal_numerator(plus), _shift(_ideal_numerator(colon), e))


def _minimal_ideal(mons):
    return frozenset(u for u, _ in _minimal((m, 0) for m in mons))


@dataclass(frozen=True)
class HilbertSeries:
    """sum_j dim_K M_j t^j = t^offset * (sum_k numerator[k] t^k) / (1 - t)^nvars."""

    numerator: tuple
    nvars: int
    offset: int = 0

    def __post_init__(self):
        num = list(_trim(self.numerator))
        off = self.offset
        while num and num[0] == 0:
            num.pop(0)
            off += 1
        if not num:
            off = 0
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "offset", off)

    def is_zero(self):
        return not self.numerator

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise StructureError("Hilbert series over rings of different size")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.offset, other.offset)
        a = _shift(self.numerator, self.offset - low)
        b = _shift(other.numerator, other.offset - low)
        return HilbertSeries(_padd(a, b), self.nvars, low)

    def __neg__(self):
        return HilbertSeries(tuple(-c for c in self.numerator), self.nvars, self.offset)

    def __sub__(self, other):
        return self + (-other)

    def value(self, j: int) -> int:
        """dim_K M_j."""
        n = self.nvars
        total = 0
        for k, c in enumerate(self.numerator):
            r = j - self.offset - k
            if r < 0:
                break
            total += c * (comb(r + n - 1, n - 1) if n else int(r == 0))
        return total

    def reduced(self):
        """(Q, d) with the series equal to t^offset Q(t)/(1-t)^d and Q(1) != 0."""
        q, d = self.numerator, self.nvars
        while q and d > 0:
            nxt = _divide_one_minus_t(q)
            if nxt is None:
                break
            q, d = nxt, d - 1
        return q, d

    def polynomial_part(self):
        """If the series is a polynomial, its coefficient list (from ``offset``), else None."""
        if self.is_zero():
            return ()
        q, d = self.reduced()
        return q if d == 0 else None


class DimDeg(NamedTuple):
    dim: int
    deg: int | None
    is_zero: bool


def hilbert_series(U: MonomialSubmodule) -> HilbertSeries:
    """Hilbert series of F/U."""
    total = HilbertSeries((), U.n)
    for j, tw in enumerate(U.shape.twists):
        ideal = frozenset(u for u, k in U.gens if k == j)
        total = total + HilbertSeries(_ideal_numerator(ideal), U.n, tw)
    return total


def dimension_and_degree(h: HilbertSeries) -> DimDeg:
    if h.is_zero():
        return DimDeg(-1, None, True)
    q, d = h.reduced()
    return DimDeg(d, sum(q), False)


def length_of_quotient(W: MonomialSubmodule, V: MonomialSubmodule) -> int:
    """l(W/V) for V contained in W, which must be finite."""
    if not is_submodule(V, W):
        raise ContainmentError("V is not contained in W")
    diff = hilbert_series(V) - hilbert_series(W)
    poly = diff.polynomial_part()
    if poly is None:
        raise InfiniteLengthError("W/V does not have finite length")
    return sum(poly)


def standard_monomials(U: MonomialSubmodule, degree: int):
    """Brute-force basis of (F/U)_degree as ``(exponents, component)`` pairs."""
    out = []
    for j, tw in enumerate(U.shape.twists):
        for u in monomials_of_degree(U.n, degree - tw):
            if not contains(U, (u, j)):
                out.append((u, j))
    return out
