"""Problem files: ring, free-module twists and generators in a small text grammar.

    # comment
    ring: x, y, z, t
    char: 0
    twists: [0]
    seed: 7          (optional)
    trials: 3        (optional)
    gens:
    x^2
    x*y
    y^2*z + x*t^2

Terms are ``coefficient * var^k * ... * eJ`` with explicit ``*``; component
markers ``e1..em`` are required when the rank is larger than one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InhomogeneousError, ParseError, UnknownVariableError
from .poly import FreeModuleShape, ModuleElement, RingContext, REVLEX

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-]))")
_COMPONENT = re.compile(r"e(\d+)$")
OPTION_KEYS = ("seed", "trials")


@dataclass(frozen=True)
class ProblemFile:
    ring: RingContext
    shape: FreeModuleShape
    gens: tuple
    options: dict = field(default_factory=dict, compare=True, hash=False)

    def __hash__(self):
        return hash((self.ring, self.shape, self.gens))


def _tokens(text, lineno):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", lineno, bad + 1)
        col = m.start(m.lastindex) + 1
        kind = ("num", "name", "pow", "mul", "sign")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), col))
        pos = m.end()
    return out


def parse_element(text, ring, shape, lineno=None) -> ModuleElement:
    toks = _tokens(text, lineno)
    if not toks:
        raise ParseError("empty generator", lineno, 1)
    index = {v: i for i, v in enumerate(ring.variables)}
    coeffs = {}
    k = 0

    def expect(kinds):
        nonlocal k
        if k >= len(toks):
            raise ParseError(f"unexpected end of expression, expected {kinds}", lineno, len(text.rstrip()) + 1)
        tok = toks[k]
        if tok[0] not in kinds:
            raise ParseError(f"unexpected {tok[1]!r}", lineno, tok[2])
        k += 1
        return tok

    first = True
    while k < len(toks):
        sign = 1
        if toks[k][0] == "sign":
            sign = -1 if toks[k][1] == "-" else 1
            k += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {toks[k][1]!r}", lineno, toks[k][2])
        first = False
        coeff = Fraction(sign)
        exps = [0] * ring.n
        comp = None
        while True:
            kind, val, col = expect(("num", "name"))
            if kind == "num":
                coeff *= Fraction(val)
            elif val in index:
                e = 1
                if k < len(toks) and toks[k][0] == "pow":
                    k += 1
                    e = int(expect(("num",))[1].split("/")[0])
                exps[index[val]] += e
            elif _COMPONENT.match(val):
                j = int(_COMPONENT.match(val).group(1))
                if not 1 <= j <= shape.m or comp is not None:
                    raise ParseError(f"bad component marker {val!r}", lineno, col)
                comp = j - 1
            else:
                raise UnknownVariableError(f"unknown variable {val!r}", lineno, col)
            if k < len(toks) and toks[k][0] == "mul":
                k += 1
                continue
            break
        if comp is None:
            if shape.m > 1:
                raise ParseError("term lacks a component marker e1..em", lineno, toks[k - 1][2])
            comp = 0
        key = (tuple(exps), comp)
        coeffs[key] = coeffs.get(key, 0) + coeff
    el = ModuleElement.from_dict(ring, shape, coeffs, REVLEX)
    if not el.is_homogeneous():
        raise InhomogeneousError(f"generator {text.strip()!r} is not homogeneous", lineno, 1)
    return el


def _parse_int_list(val, lineno):
    val = val.strip()
    if val.startswith("[") and val.endswith("]"):
        val = val[1:-1]
    try:
        return [int(x) for x in val.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected a list of integers, got {val!r}", lineno, 1) from None


def parse(text: str) -> ProblemFile:
    header = {}
    gen_lines = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if in_gens:
            gen_lines.append((lineno, line))
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, val = line.split(":", 1)
        key = key.strip().lower()
        if key == "gens":
            in_gens = True
            if val.strip():
                gen_lines.append((lineno, val))
            continue
        if key in header:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        header[key] = (lineno, val.strip())
    if "ring" not in header:
        raise ParseError("missing 'ring:' declaration", 1, 1)
    lineno, val = header.pop("ring")
    names = [v.strip() for v in val.split(",") if v.strip()]
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v) or _COMPONENT.match(v):
            raise ParseError(f"invalid variable name {v!r}", lineno, 1)
    if not names:
        raise ParseError("ring needs at least one variable", lineno, 1)
    char = 0
    if "char" in header:
        lineno, val = header.pop("char")
        try:
            char = int(val)
        except ValueError:
            raise ParseError(f"characteristic must be an integer, got {val!r}", lineno, 1) from None
    try:
        ring = RingContext(tuple(names), char)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None
    twists = [0]
    if "twists" in header:
        lineno, val = header.pop("twists")
        twists = _parse_int_list(val, lineno)
        if not twists:
            raise ParseError("need at least one twist", lineno, 1)
    shape = FreeModuleShape(tuple(twists))
    options = {}
    for key in OPTION_KEYS:
        if key in header:
            lineno, val = header.pop(key)
            try:
                options[key] = int(val)
            except ValueError:
                raise ParseError(f"{key} must be an integer", lineno, 1) from None
    if header:
        key, (lineno, _) = next(iter(header.items()))
        raise ParseError(f"unknown key {key!r}", lineno, 1)
    gens = tuple(parse_element(line, ring, shape, lineno) for lineno, line in gen_lines)
    return ProblemFile(ring, shape, gens, options)


def format_problem(p: ProblemFile) -> str:
    lines = [
        "ring: " + ",".join(p.ring.variables),
        f"char: {p.ring.characteristic}",
        "twists: [" + ",".join(str(t) for t in p.shape.twists) + "]",
    ]
    for key in OPTION_KEYS:
        if key in p.options:
            lines.append(f"{key}: {p.options[key]}")
    lines.append("gens:")
    lines.extend(g.format() for g in p.gens if g)
    return "\n".join(lines) + "\n"


def monomial_problem(U, options=None) -> ProblemFile:
    gens = tuple(ModuleElement.monomial(U.ring, U.shape, u, j) for u, j in U.sorted_gens())
    return ProblemFile(U.ring, U.shape, gens, dict(options or {}))
