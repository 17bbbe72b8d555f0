"""gin of random homogeneous ideals: Borel-type check, Hilbert series, timing.

    python scripts/gin_sweep.py --count 100 --max-vars 4 --max-degree 4
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import asdict, dataclass

from extdeg import degrees as dg
from extdeg.groebner import gin, initial_module_of
from extdeg.monomial import hilbert_series, is_borel_type
from extdeg.sampling import random_homogeneous_ideal


@dataclass
class GinSweepConfig:
    count: int = 100
    max_vars: int = 4
    max_degree: int = 4
    trials: int = 3
    seed: int = 0


def run(cfg: GinSweepConfig):
    rng = random.Random(cfg.seed)
    failures, slowest = [], (0.0, None)
    t0 = time.perf_counter()
    for k in range(cfg.count):
        gens = random_homogeneous_ideal(rng, rng.randint(1, cfg.max_vars), cfg.max_degree)
        t = time.perf_counter()
        G = gin(gens, trials=cfg.trials, seed=f"{cfg.seed}/{k}")
        dt = time.perf_counter() - t
        if dt > slowest[0]:
            slowest = (dt, [str(g) for g in gens])
        same_series = hilbert_series(G) == hilbert_series(initial_module_of(gens))
        if not (is_borel_type(G) and same_series):
            failures.append((k, [str(g) for g in gens], str(G)))
        r = dg.borel_report(G)
        if not dg.check_degree_chain(r).holds:
            failures.append((k, "degree chain", r))
    print(f"config: {asdict(cfg)}")
    print(f"{cfg.count} ideals in {time.perf_counter() - t0:.1f}s, {len(failures)} failures")
    print(f"slowest gin: {slowest[0]:.2f}s for {slowest[1]}")
    for f in failures[:10]:
        print("  FAIL", f)
    return not failures


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in ("count", "max_vars", "max_degree", "trials", "seed"):
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=getattr(GinSweepConfig, f))
    return 0 if run(GinSweepConfig(**vars(ap.parse_args(argv)))) else 2


if __name__ == "__main__":
    sys.exit(main())
