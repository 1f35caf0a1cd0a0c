#!/usr/bin/env python3
"""Render the derived-order gallery: the iterated polygon of a regular square
with t = 0.2, one SVG per derived parameter order 0..5.

Usage: python scripts/derived_order_gallery.py [OUT_DIR]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from barypoly.cli import cli_dispatch  # noqa: E402


def main() -> int:
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "figures"
    return cli_dispatch([
        "figure", "--ngon", "4", "--t", "0.2", "--n", "24",
        "--orders", "0-5", "--out-dir", out_dir,
    ])


if __name__ == "__main__":
    raise SystemExit(main())
