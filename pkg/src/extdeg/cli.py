"""Command line front end.

    extdeg degrees problem.ring --seed 7 --format json

Exit codes: 0 success, 1 bad input, 2 a mathematical assertion failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import degrees as dg
from .errors import ExtDegError, InputError, MathAssertionError, ParseError
from .groebner import PrimeFieldWarning, gin, initial_module_of
from .lex import DEFAULT_DEGREE_CAP, lex_module
from .monomial import MonomialSubmodule, borel_type_failure, dimension_and_degree, hilbert_series
from .poly import DEFAULT_PRIME, ModuleElement, RingContext
from .problem import ProblemFile, format_problem, monomial_problem, parse

COMMANDS = ("chain", "degrees", "gin", "lex", "hilbert", "bounds")


def _with_field(problem: ProblemFile, field):
    if field is None:
        return problem
    char = {"q": 0, "p": DEFAULT_PRIME}.get(field)
    if char is None:
        try:
            char = int(field)
        except ValueError:
            raise InputError(f"--field must be q, p or a prime, got {field!r}") from None
    if char == problem.ring.characteristic:
        return problem
    ring = RingContext(problem.ring.variables, char)
    gens = tuple(
        ModuleElement.from_dict(ring, problem.shape, {(u, j): c for u, j, c in g.terms}, g.order)
        for g in problem.gens
    )
    return ProblemFile(ring, problem.shape, gens, problem.options)


def _monomial_input(problem: ProblemFile):
    gens = [g for g in problem.gens if g]
    if all(g.is_monomial() for g in gens):
        return MonomialSubmodule.of(problem.ring, [(g.terms[0][0], g.terms[0][1]) for g in gens], problem.shape)
    return None


def _borel_monomial(problem, trials, seed):
    """A Borel-type monomial module standing in for the input, and how it was obtained."""
    U = _monomial_input(problem)
    if U is not None and borel_type_failure(U) is None:
        return U, "input"
    G = gin(list(problem.gens), trials=trials, seed=seed, ring=problem.ring, shape=problem.shape)
    return G, "gin"


def _initial(problem):
    U = _monomial_input(problem)
    if U is not None:
        return U
    return initial_module_of(list(problem.gens), ring=problem.ring, shape=problem.shape)


def _chain_json(U, chain, source):
    return {
        "module": source,
        "generators": U.format_gens(),
        "stages": [
            {
                "i": s.index,
                "ext": f"Ext^{U.n - s.index}",
                "U": s.U.format_gens(),
                "V_sat": s.V_sat.format_gens(),
                "length": s.length,
            }
            for s in chain.stages
        ],
        "ext_degrees": list(chain.lengths),
    }


def _report_text(r: dg.DegreeReport):
    lines = [
        f"dim  = {r.dim}",
        f"deg  = {r.deg}",
        f"adeg = {r.adeg}",
        f"sdeg = {r.sdeg}",
        f"hdeg = {r.hdeg}",
        f"structure = {r.structure}",
        "ext_degrees = " + " ".join(str(x) for x in r.ext_degrees),
    ]
    lines += [f"note: {d}" for d in r.disclaimers]
    return "\n".join(lines)


def run(command, problem: ProblemFile, trials=None, seed=None, degree_cap=DEFAULT_DEGREE_CAP):
    """Execute a command; returns ``(exit_code, json_payload, text)``.

    ``trials`` and ``seed`` fall back to the problem file's options, then to 3 and 0.
    """
    if trials is None:
        trials = problem.options.get("trials", 3)
    if seed is None:
        seed = problem.options.get("seed", 0)
    if command == "degrees":
        r = dg.full_report(list(problem.gens), trials=trials, seed=seed, ring=problem.ring, shape=problem.shape)
        chk = dg.check_degree_chain(r)
        if not chk.holds:
            raise dg.TheoremViolation("; ".join(chk.violations))
        return 0, r.to_json(), _report_text(r)
    if command == "chain":
        U, source = _borel_monomial(problem, trials, seed)
        chain = dg.saturation_chain(U)
        payload = _chain_json(U, chain, source)
        text = [f"module: {source} {U}"]
        for s in payload["stages"]:
            text.append(f"i={s['i']}  {s['ext']:>6}  U_i=({', '.join(s['U'])})  length={s['length']}")
        return 0, payload, "\n".join(text)
    if command == "gin":
        G = gin(list(problem.gens), trials=trials, seed=seed, ring=problem.ring, shape=problem.shape)
        out = monomial_problem(G)
        return 0, {"generators": G.format_gens(), "problem": format_problem(out)}, format_problem(out).rstrip()
    if command == "lex":
        L = lex_module(_initial(problem), degree_cap=degree_cap)
        out = monomial_problem(L)
        return 0, {"generators": L.format_gens(), "problem": format_problem(out)}, format_problem(out).rstrip()
    if command == "hilbert":
        h = hilbert_series(_initial(problem))
        dim, deg, is_zero = dimension_and_degree(h)
        q, _ = h.reduced()
        payload = {
            "numerator": list(h.numerator),
            "offset": h.offset,
            "nvars": h.nvars,
            "reduced_numerator": list(q),
            "dim": dim,
            "deg": deg,
            "is_zero": is_zero,
        }
        text = f"HS = t^{h.offset} * {list(h.numerator)} / (1-t)^{h.nvars}\ndim = {dim}\ndeg = {deg}"
        return 0, payload, text
    if command == "bounds":
        U, source = _borel_monomial(problem, trials, seed)
        cmp = dg.compare_gin_lex(U, trials=trials, seed=seed, degree_cap=degree_cap)
        rows = [{"relation": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds} for c in cmp.checks]
        for name, r, chk in zip(("F/U", "F/gin(U)", "F/U^lex"), (cmp.module, cmp.gin, cmp.lex), cmp.chains):
            rows.append(
                {
                    "relation": f"deg <= adeg <= sdeg <= hdeg for {name}",
                    "lhs": [r.deg, r.adeg, r.sdeg, r.hdeg],
                    "rhs": None,
                    "holds": chk.holds,
                }
            )
        payload = {
            "module": source,
            "generators": U.format_gens(),
            "reports": {"module": cmp.module.to_json(), "gin": cmp.gin.to_json(), "lex": cmp.lex.to_json()},
            "checks": rows,
            "holds": cmp.holds,
        }
        text = "\n".join(f"{'ok' if r['holds'] else 'VIOLATED'}  {r['relation']}: {r['lhs']} {r['rhs'] if r['rhs'] is not None else ''}".rstrip() for r in rows)
        return (0 if cmp.holds else 2), payload, text
    raise InputError(f"unknown command {command!r}")


def _error_payload(exc):
    payload = {"code": exc.code, "message": str(exc)}
    if isinstance(exc, ParseError):
        payload["line"], payload["column"] = exc.line, exc.column
    return {"error": payload}


def build_parser():
    ap = argparse.ArgumentParser(prog="extdeg", description="Degree functions of graded quotients F/U.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file", help="problem file, or - for stdin")
    ap.add_argument("--trials", type=int, default=None, help="random trials for gin (default 3)")
    ap.add_argument("--seed", type=int, default=None, help="master seed for gin (default 0)")
    ap.add_argument("--field", default=None, help="q (rationals), p (GF(32003)) or a prime")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    ap.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    return ap


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    as_json = args.format == "json"
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        problem = _with_field(parse(text), args.field)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", PrimeFieldWarning)
            code, payload, out = run(args.command, problem, args.trials, args.seed, args.degree_cap)
        if problem.ring.characteristic and args.command in ("degrees", "gin", "chain", "bounds"):
            print(f"warning: working over GF({problem.ring.characteristic}); gin depends on the characteristic",
                  file=sys.stderr)
    except OSError as exc:
        code, payload, out = 1, {"error": {"code": "io", "message": str(exc)}}, f"error: {exc}"
    except ExtDegError as exc:
        code = 2 if isinstance(exc, MathAssertionError) else 1
        payload, out = _error_payload(exc), f"error [{exc.code}]: {exc}"
    if as_json:
        stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
