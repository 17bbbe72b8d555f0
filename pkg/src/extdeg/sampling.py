"""Seeded random generators for monomial and polynomial test inputs."""

from __future__ import annotations

import random

from .monomial import MonomialSubmodule, is_borel_type, minimalize
from .poly import FreeModuleShape, ModuleElement, RingContext, monomials_of_degree


def random_monomial(rng: random.Random, n, degree):
    """Uniform exponent vector of the given total degree."""
    mons = list(monomials_of_degree(n, degree))
    return rng.choice(mons)


def borel_closure(mons):
    """Smallest strongly stable set of monomials containing ``mons``: close under x_j -> x_i, i < j."""
    seen = set(map(tuple, mons))
    todo = list(seen)
    while todo:
        u = todo.pop()
        for j in range(1, len(u)):
            if u[j]:
                for i in range(j):
                    v = list(u)
                    v[j] -= 1
                    v[i] += 1
                    v = tuple(v)
                    if v not in seen:
                        seen.add(v)
                        todo.append(v)
    return seen


def random_borel_fixed_ideal(rng, n, max_degree=6, max_seeds=3, ring=None):
    ring = ring or RingContext.of(n)
    k = rng.randint(1, max_seeds)
    seeds = [random_monomial(rng, n, rng.randint(1, max_degree)) for _ in range(k)]
    return MonomialSubmodule.of(ring, [(u, 0) for u in borel_closure(seeds)])


def random_borel_type_ideal(rng, n, max_degree=6, max_gens=4, ring=None, attempts=200):
    """A Borel-type monomial ideal: rejection sampling, falling back to a Borel closure.

    Half of the draws come from rejection sampling, so the output is not
    always strongly stable.
    """
    ring = ring or RingContext.of(n)
    if rng.random() < 0.5:
        for _ in range(attempts):
            k = rng.randint(1, max_gens)
            gens = [(random_monomial(rng, n, rng.randint(1, max_degree)), 0) for _ in range(k)]
            U = MonomialSubmodule.of(ring, gens)
            if is_borel_type(U):
                return U
    return random_borel_fixed_ideal(rng, n, max_degree, ring=ring)


def random_borel_type_module(rng, n, rank, max_degree=4, ring=None):
    """Direct sum of Borel-type ideals (some possibly zero) with random twists."""
    ring = ring or RingContext.of(n)
    twists = tuple(rng.randint(0, 2) for _ in range(rank))
    gens = []
    for j in range(rank):
        if rng.random() < 0.15:
            continue
        I = random_borel_type_ideal(rng, n, max_degree, ring=ring)
        gens.extend((u, j) for u, _ in I.gens)
    return minimalize(ring, FreeModuleShape(twists), gens)


def random_homogeneous_ideal(rng, n, max_degree=4, max_gens=3, max_terms=3, coeff_bound=5, ring=None):
    """Random homogeneous polynomials with small integer coefficients."""
    ring = ring or RingContext.of(n)
    shape = FreeModuleShape()
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        mons = list(monomials_of_degree(n, d))
        chosen = rng.sample(mons, min(len(mons), rng.randint(1, max_terms)))
        coeffs = {}
        for u in chosen:
            c = 0
            while c == 0:
                c = rng.randint(-coeff_bound, coeff_bound)
            coeffs[(u, 0)] = c
        gens.append(ModuleElement.from_dict(ring, shape, coeffs))
    return gens
