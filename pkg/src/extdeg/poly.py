"""Exact polynomial and free-module arithmetic.

Monomials are exponent tuples.  A term of the free module F = S e_1 + ... + S e_m
is a pair ``(exponents, component)`` with ``component`` a 0-based basis index.
Coefficients are :class:`fractions.Fraction` over the rationals or ``int``
residues over a prime field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import StructureError

DEFAULT_PRIME = 32003

Monomial = tuple  # tuple[int, ...]
TermKey = tuple  # (Monomial, component)


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class RingContext:
    """S = K[x_1..x_n] with K = QQ (characteristic 0) or GF(p)."""

    variables: tuple
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise StructureError(f"variable names not distinct: {self.variables}")
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise StructureError(f"characteristic {self.characteristic} is not prime")

    @classmethod
    def of(cls, n_or_names, characteristic=0):
        if isinstance(n_or_names, int):
            if n_or_names <= 4:
                names = tuple("xyzt"[:n_or_names])
            else:
                names = tuple(f"x{i + 1}" for i in range(n_or_names))
            return cls(tuple(names), characteristic)
        return cls(tuple(n_or_names), characteristic)

    @property
    def n(self):
        return len(self.variables)

    @property
    def is_prime_field(self):
        return self.characteristic != 0

    def coerce(self, c):
        if self.characteristic:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.characteristic) % self.characteristic
            return int(c) % self.characteristic
        return Fraction(c)

    def inverse(self, c):
        if self.characteristic:
            return pow(c, -1, self.characteristic)
        return 1 / c

    def drop_last(self, k=1):
        return RingContext(self.variables[: self.n - k], self.characteristic)


@dataclass(frozen=True)
class FreeModuleShape:
    """Rank and twists: basis element e_j sits in degree ``twists[j]``."""

    twists: tuple = (0,)

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if len(self.twists) < 1:
            raise StructureError("free module must have rank >= 1")

    @classmethod
    def rank(cls, m):
        return cls((0,) * m)

    @property
    def m(self):
        return len(self.twists)


# -- term orders ---------------------------------------------------------------

REVLEX = "revlex"
LEX = "lex"
ORDERS = (REVLEX, LEX)


def order_key(order, shape):
    """Return ``key(monomial, component)`` such that larger key = larger term."""
    twists = shape.twists
    if order == REVLEX:
        def key(u, j):
            d = sum(u)
            return (d + twists[j], d, tuple(-e for e in reversed(u)), -j)
    elif order == LEX:
        def key(u, j):
            return (-j, tuple(u))
    else:
        raise StructureError(f"unknown term order {order!r}")
    return key


def compare_terms(order, a, b, shape):
    """Compare two ``(monomial, component)`` pairs; returns -1, 0 or 1."""
    (u, i), (v, j) = a, b
    if len(u) != len(v):
        raise StructureError(f"monomials of different length: {u} vs {v}")
    for c in (i, j):
        if not 0 <= c < shape.m:
            raise StructureError(f"component {c} out of range for rank {shape.m}")
    key = order_key(order, shape)
    ka, kb = key(tuple(u), i), key(tuple(v), j)
    return (ka > kb) - (ka < kb)


# -- monomial helpers -----------------------------------------------------------


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def mono_div(v, u):
    return tuple(b - a for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def monomials_of_degree(n, d):
    """All exponent tuples of length n and total degree d, in lex-descending order."""
    if d < 0:
        return
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            yield (a,) + rest


def format_monomial(u, names):
    parts = []
    for e, x in zip(u, names):
        if e == 1:
            parts.append(x)
        elif e > 1:
            parts.append(f"{x}^{e}")
    return "*".join(parts) if parts else "1"


# -- module elements ----------------------------------------------------------


@dataclass(frozen=True)
class ModuleElement:
    """An element of F with terms sorted strictly descending under ``order``.

    Build with :meth:`from_dict`; the constructor assumes canonical input.
    """

    ring: RingContext
    shape: FreeModuleShape
    terms: tuple = ()
    order: str = REVLEX
    _dict: dict = field(default=None, compare=False, repr=False, hash=False)

    @classmethod
    def from_dict(cls, ring, shape, coeffs: Mapping, order=REVLEX):
        clean = {}
        for (u, j), c in coeffs.items():
            u = tuple(u)
            if len(u) != ring.n:
                raise StructureError(f"monomial {u} does not have {ring.n} exponents")
            if any(e < 0 for e in u):
                raise StructureError(f"negative exponent in {u}")
            if not 0 <= j < shape.m:
                raise StructureError(f"component {j} out of range for rank {shape.m}")
            c = ring.coerce(c)
            if c:
                clean[(u, j)] = c
        key = order_key(order, shape)
        terms = tuple(
            sorted(((u, j, c) for (u, j), c in clean.items()), key=lambda t: key(t[0], t[1]), reverse=True)
        )
        return cls(ring, shape, terms, order, clean)

    @classmethod
    def monomial(cls, ring, shape, u, j=0, coeff=1, order=REVLEX):
        return cls.from_dict(ring, shape, {(tuple(u), j): coeff}, order)

    @classmethod
    def zero(cls, ring, shape, order=REVLEX):
        return cls(ring, shape, (), order, {})

    def as_dict(self):
        if self._dict is None:
            object.__setattr__(self, "_dict", {(u, j): c for u, j, c in self.terms})
        return self._dict

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.ring != other.ring or self.shape != other.shape:
            raise StructureError("elements live in different free modules")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.as_dict())
        for key, c in other.as_dict().items():
            acc[key] = acc.get(key, 0) + c
        return ModuleElement.from_dict(self.ring, self.shape, acc, self.order)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ring.coerce(c)
        return ModuleElement.from_dict(
            self.ring, self.shape, {(u, j): a * c for u, j, a in self.terms}, self.order
        )

    def monomial_multiply(self, u):
        u = tuple(u)
        if len(u) != self.ring.n:
            raise StructureError(f"monomial {u} does not have {self.ring.n} exponents")
        # multiplication by a monomial preserves the order of terms
        terms = tuple((mono_mul(v, u), j, c) for v, j, c in self.terms)
        return ModuleElement(self.ring, self.shape, terms, self.order)

    def with_order(self, order):
        return ModuleElement.from_dict(self.ring, self.shape, self.as_dict(), order)

    def leading_term(self):
        if not self.terms:
            raise StructureError("zero element has no leading term")
        return self.terms[0]

    def degrees(self):
        tw = self.shape.twists
        return {sum(u) + tw[j] for u, j, _ in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        if len(degs) != 1:
            raise StructureError("degree of a zero or inhomogeneous element")
        return next(iter(degs))

    def is_monomial(self):
        return len(self.terms) == 1

    def format(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        chunks = []
        for u, j, c in self.terms:
            mono = format_monomial(u, names)
            if self.shape.m > 1:
                mono = f"e{j + 1}" if mono == "1" else f"{mono}*e{j + 1}"
            if self.ring.characteristic == 0:
                c = Fraction(c)
            neg = c < 0 if self.ring.characteristic == 0 else False
            mag = -c if neg else c
            if mag == 1:
                body = mono
            elif mono == "1":
                body = str(mag)
            else:
                body = f"{mag}*{mono}"
            chunks.append(("- " if neg else "+ ") + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self):
        return self.format()


def elements_from_terms(ring, shape, polys: Iterable[Mapping], order=REVLEX):
    return [ModuleElement.from_dict(ring, shape, p, order) for p in polys]


def check_shape(n, shape: FreeModuleShape, gens: Sequence):
    for u, j in gens:
        if len(u) != n:
            raise StructureError(f"monomial {u} does not have {n} exponents")
        if not 0 <= j < shape.m:
            raise StructureError(f"component {j} out of range for rank {shape.m}")
        if any(e < 0 for e in u):
            raise StructureError(f"negative exponent in {u}")
