#!/usr/bin/env python3
"""Sweep random parameter vectors, classify each orbit, and summarise the
lock-in indices and dual convergence speed.

Usage: python scripts/dynamics_sweep.py [P] [COUNT] [SEED]
"""

import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from barypoly import (  # noqa: E402
    ParamVector,
    centroid_convergence_report,
    classify_dynamics,
    dual_trace,
)
from barypoly.config import regular_ngon  # noqa: E402


def main() -> int:
    p = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 200
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    rng = random.Random(seed)
    family = regular_ngon(max(p, 3)) if p >= 3 else regular_ngon(3)

    verdicts = Counter()
    lockins = []
    firsts = []
    rates = []
    for _ in range(count):
        t0 = ParamVector(tuple(rng.uniform(0.02, 0.98) for _ in range(p)))
        result = classify_dynamics(t0)
        verdicts[result.verdict.value] += 1
        if result.lockin_index is not None:
            lockins.append(result.lockin_index)
        if p >= 3:
            report = centroid_convergence_report(dual_trace(family, t0, 400))
            if report.first_below is not None:
                firsts.append(report.first_below)
            if report.decay_rate is not None:
                rates.append(report.decay_rate)

    print(f"p={p} count={count} seed={seed}")
    for name, n in sorted(verdicts.items()):
        print(f"  {name}: {n}")
    if lockins:
        print(f"  lock-in index: min={min(lockins)} max={max(lockins)} "
              f"mean={sum(lockins) / len(lockins):.2f}")
    if firsts:
        print(f"  steps to reach 1e-6 of the centroid: min={min(firsts)} "
              f"max={max(firsts)} mean={sum(firsts) / len(firsts):.2f}")
    if rates:
        print(f"  fitted per-step decay rate: mean={sum(rates) / len(rates):.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
