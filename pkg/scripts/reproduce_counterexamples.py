"""Recompute the d = 3 family I = (x^2, xy, y^3, y^2 z^{a-1} + x t^a) for several a.

For each a: gin(I), the lex module of gin(I) and its saturation, the degree
reports of both, and hdeg S/I from its Ext data.  Prints a table, or JSON.

    python scripts/reproduce_counterexamples.py --a 2 5 7
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field

from extdeg import degrees as dg
from extdeg.groebner import gin
from extdeg.lex import lex_module, saturate_lex
from extdeg.poly import FreeModuleShape, RingContext
from extdeg.problem import parse_element


@dataclass
class Config:
    a_values: list = field(default_factory=lambda: [2, 5])
    trials: int = 3
    seed: int = 0
    degree_cap: int = 200
    as_json: bool = False


def family(a, ring):
    # y^{d-1} z^{a-d+2} + x t^a with d = 3
    texts = ["x^2", "x*y", "y^3", f"y^2*z^{a - 1} + x*t^{a}"]
    return [parse_element(t, ring, FreeModuleShape()) for t in texts]


def hdeg_of_I(a):
    # S/I: dim 2, deg 3; only Ext^3 is nonzero below the top, and it has length a(a-1)
    return dg.degrees_from_ext_data(3, 2, (0, a * (a - 1)), mode=dg.FINITE_LENGTH).hdeg


def run(cfg: Config):
    R = RingContext.of(4)
    rows = []
    for a in cfg.a_values:
        if a < 2:
            raise SystemExit("need a >= 2")
        G = gin(family(a, R), trials=cfg.trials, seed=cfg.seed)
        L = lex_module(G, degree_cap=cfg.degree_cap)
        rg, rl = dg.borel_report(G), dg.borel_report(L)
        h = hdeg_of_I(a)
        rows.append(
            {
                "a": a,
                "gin": str(G),
                "lex_saturation": str(saturate_lex(L)),
                "hdeg_I": h,
                "hdeg_gin": rg.hdeg,
                "hdeg_lex": rl.hdeg,
                "sdeg": rg.sdeg,
                "ext_gin": list(rg.ext_degrees),
                "ext_lex": list(rl.ext_degrees),
                "I_vs_lex": "<" if h < rl.hdeg else (">" if h > rl.hdeg else "="),
            }
        )
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=int, nargs="+", default=Config().a_values)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--degree-cap", type=int, default=Config.degree_cap)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    cfg = Config(args.a, args.trials, args.seed, args.degree_cap, args.json)
    rows = run(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'a':>3} {'hdeg I':>7} {'hdeg gin':>9} {'hdeg lex':>9}  I vs lex  gin / lex saturation")
    for r in rows:
        print(
            f"{r['a']:>3} {r['hdeg_I']:>7} {r['hdeg_gin']:>9} {r['hdeg_lex']:>9}  {r['I_vs_lex']:^8}  "
            f"{r['gin']} / {r['lex_saturation']}"
        )


if __name__ == "__main__":
    main()
