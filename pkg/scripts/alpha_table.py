#!/usr/bin/env python3
"""Print alpha_p, its defining residual, the repulsion factor of the
stationary parameter, and the slope peak of the double-step drift.

Usage: python scripts/alpha_table.py [P_MAX]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from barypoly.derived import drift_slope_peak, solve_alpha  # noqa: E402


def main() -> int:
    p_max = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    print(f"{'p':>3} {'alpha_p':>20} {'residual':>10} {'repulsion':>10} "
          f"{'drift peak':>11}")
    for p in range(2, p_max + 1):
        a = solve_alpha(p)
        residual = abs(a ** (p - 1) + a - 1.0)
        rate = (p - 1) * a ** (p - 2)
        mu = drift_slope_peak(p)[1] if p >= 3 else float("nan")
        print(f"{p:>3} {a:>20.16f} {residual:>10.1e} {rate:>10.4f} {mu:>11.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
