"""Brute-force oracles and small builders shared by the test modules.

The oracles here count monomials degree by degree and never call the
Hilbert-series, colon or chain code they are used to check.
"""

from __future__ import annotations

import random
from math import comb

from hypothesis import strategies as st

from extdeg.monomial import MonomialSubmodule, contains
from extdeg.poly import FreeModuleShape, RingContext, monomials_of_degree
from extdeg.problem import parse_element
from extdeg.sampling import random_borel_type_ideal


def ring(n, char=0):
    return RingContext.of(n, char)


def elem(R, text, shape=None):
    return parse_element(text, R, shape or FreeModuleShape())


def elems(R, *texts, shape=None):
    return [elem(R, t, shape) for t in texts]


def mono(R, text):
    """Exponent vector of a monomial written like ``x^2*y``."""
    e = elem(R, text)
    assert e.is_monomial()
    return e.terms[0][0]


def ideal(R, *texts):
    return MonomialSubmodule.of(R, [(mono(R, t), 0) for t in texts])


def in_degree(U, d):
    """Monomials of F_d lying in U."""
    out = set()
    for j, tw in enumerate(U.shape.twists):
        for u in monomials_of_degree(U.n, d - tw):
            if contains(U, (u, j)):
                out.add((u, j))
    return out


def hilbert_function(U, d):
    """dim_K (F/U)_d by counting."""
    total = 0
    for j, tw in enumerate(U.shape.twists):
        for u in monomials_of_degree(U.n, d - tw):
            if not contains(U, (u, j)):
                total += 1
    return total


def brute_length(W, V):
    """l(W/V) by counting, V inside W, both of finite colength difference.

    Stops at the first degree past every generator degree where nothing of W
    is missing from V; beyond that degree W_d = V_d persists.
    """
    top = max(W.max_degree() or 0, V.max_degree() or 0)
    low = min(V.shape.twists)
    total, d = 0, low
    while True:
        diff = len(in_degree(W, d)) - len(in_degree(V, d))
        assert diff >= 0
        total += diff
        if d >= top and diff == 0:
            return total
        d += 1
        assert d < top + 200, "runaway length computation"


def brute_saturation_member(U, term, k):
    """term in U : (x_1..x_k)^inf, tested with x_i^N for N past the top degree."""
    N = (U.max_degree() or 0) + 1
    u, j = term
    for i in range(k):
        v = list(u)
        v[i] += N
        if not contains(U, (tuple(v), j)):
            return False
    return True


def depth_by_regular_variables(U):
    """depth of F/U for Borel-type U: how many trailing variables occur in no generator."""
    n = U.n
    depth = 0
    while depth < n and all(u[n - 1 - depth] == 0 for u, _ in U.gens):
        depth += 1
    return depth


def hilbert_polynomial_degree(U, extra=8):
    """(dim, deg) with dim = degree of Hilbert polynomial + 1 and deg its normalised lead coefficient."""
    top = 3 * (U.max_degree() or 0) + U.n + extra
    vals = [hilbert_function(U, d) for d in range(top + 1)]
    if all(v == 0 for v in vals[-4:]):
        total = sum(vals)
        return (0, total) if total else (-1, 0)
    diffs = vals
    k = 0
    while len(set(diffs[-3:])) != 1:
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        k += 1
        assert k <= U.n
    return k + 1, diffs[-1]


def borel_ideals(seed, count, n_max=5, max_degree=6):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        out.append(random_borel_type_ideal(rng, n, max_degree))
    return out


@st.composite
def monomial_ideals(draw, n_max=3, degree_max=4, gens_max=4):
    n = draw(st.integers(1, n_max))
    R = ring(n)
    k = draw(st.integers(0, gens_max))
    gens = []
    for _ in range(k):
        d = draw(st.integers(0, degree_max))
        mons = list(monomials_of_degree(n, d))
        gens.append((draw(st.sampled_from(mons)), 0))
    return MonomialSubmodule.of(R, gens)


@st.composite
def borel_type_ideals(draw, n_max=4, max_degree=5):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return random_borel_type_ideal(rng, rng.randint(1, n_max), max_degree)


def binom_hdeg(deg, d, lam):
    """Independent restatement of the closed hdeg formula."""
    return deg + sum(comb(d - 1, i) * lam[i] for i in range(d))
