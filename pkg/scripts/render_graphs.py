#!/usr/bin/env python3
"""Render DOT files for a group: the level-bounded intersection graph and a
radius-bounded Bass-Serre tree ball.

Example:
    python scripts/render_graphs.py --group 2,3 --levels 4 --radius 2 --out-dir out/
"""

import argparse
from pathlib import Path

from bsscale import GroupParams, enumerate_ball, export_dot
from bsscale.graph import to_dot


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="2,3", metavar="M,N")
    ap.add_argument("--levels", type=int, default=4)
    ap.add_argument("--radius", type=int, default=2)
    ap.add_argument("--out-dir", default=".")
    args = ap.parse_args()

    m, n = (int(v) for v in args.group.split(","))
    p = GroupParams(m, n)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    ball_path = out / f"ball_{m}_{n}_r{args.radius}.dot"
    ball_path.write_text(export_dot(enumerate_ball(p, args.radius)))
    print(f"wrote {ball_path}")

    if not p.divisor_case:
        omega_path = out / f"omega_{m}_{n}_l{args.levels}.dot"
        omega_path.write_text(to_dot(p, args.levels))
        print(f"wrote {omega_path}")
    else:
        print("divisor case: no structured intersection graph to draw")


if __name__ == "__main__":
    main()
