"""Seeded sweep over random Borel-type ideals: degree chain, CM test and lex bounds.

Each sample gets one JSON line (with --out) and the run ends with a summary of
how often each relation held.

    python scripts/random_bounds_sweep.py --count 500 --max-vars 5 --seed 1
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass

from extdeg import degrees as dg
from extdeg.lex import lex_module
from extdeg.sampling import random_borel_type_ideal


RELATIONS = ("chain", "top_lambda", "cm", "sdeg_eq_hdeg", "sdeg_lex", "hdeg_lex")


@dataclass
class SweepConfig:
    count: int = 200
    max_vars: int = 5
    max_degree: int = 6
    seed: int = 0
    degree_cap: int = 1000
    out: str | None = None


def depth(U):
    # trailing variables absent from all generators form a regular sequence
    n, k = U.n, 0
    while k < n and all(u[n - 1 - k] == 0 for u, _ in U.gens):
        k += 1
    return k


def sample(rng, cfg):
    U = random_borel_type_ideal(rng, rng.randint(1, cfg.max_vars), cfg.max_degree)
    r = dg.borel_report(U)
    if r.dim < 0:
        return None
    rl = dg.borel_report(lex_module(U, degree_cap=cfg.degree_cap))
    lam, d = r.ext_degrees, r.dim
    rel = {
        "chain": r.deg <= r.adeg == r.sdeg <= r.hdeg,
        "top_lambda": lam[d] == r.deg,
        "cm": (depth(U) == d) == (sum(1 for x in lam if x) == 1),
        "sdeg_eq_hdeg": (r.sdeg == r.hdeg) == (not any(lam[1 : d - 1])),
        "sdeg_lex": r.sdeg <= rl.sdeg,
        "hdeg_lex": r.hdeg <= rl.hdeg,
    }
    return {"ideal": str(U), "n": U.n, "report": r.to_json(), "lex_hdeg": rl.hdeg, "relations": rel}


def run(cfg: SweepConfig, stream=sys.stdout):
    rng = random.Random(cfg.seed)
    held, total, skipped = Counter(), 0, 0
    ratio = []
    sink = open(cfg.out, "w", encoding="utf-8") if cfg.out else None
    t0 = time.perf_counter()
    try:
        for _ in range(cfg.count):
            row = sample(rng, cfg)
            if row is None:
                skipped += 1
                continue
            total += 1
            held.update(k for k, v in row["relations"].items() if v)
            ratio.append(row["lex_hdeg"] / row["report"]["hdeg"])
            if sink:
                sink.write(json.dumps(row) + "\n")
    finally:
        if sink:
            sink.close()
    print(f"config: {asdict(cfg)}", file=stream)
    print(f"{total} samples ({skipped} unit ideals skipped) in {time.perf_counter() - t0:.1f}s", file=stream)
    for key in RELATIONS:
        print(f"  {key:<13} held {held[key]}/{total}", file=stream)
    if ratio:
        print(f"  hdeg lex / hdeg: mean {sum(ratio) / len(ratio):.2f}, max {max(ratio):.2f}", file=stream)
    return all(held[k] == total for k in RELATIONS)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in ("count", "max_vars", "max_degree", "seed", "degree_cap"):
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=getattr(SweepConfig, f))
    ap.add_argument("--out", default=None, help="write one JSON line per sample")
    cfg = SweepConfig(**vars(ap.parse_args(argv)))
    return 0 if run(cfg) else 2


if __name__ == "__main__":
    sys.exit(main())
