#!/usr/bin/env python3
"""Survey scale and modular values across parameter pairs, and show the
asymptotic index sequences converging on the closed form.

Example:
    python scripts/scale_survey.py --kmax 8
"""

import argparse

from bsscale import GroupParams, modular, moller_sequence, scale, scale_value_set

PAIRS = [(2, 3), (3, 2), (2, 4), (4, 6), (3, 5), (2, -3), (3, 3)]
WORDS = ["t", "T", "tt", "taTat", "Tat"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=8)
    args = ap.parse_args()

    for m, n in PAIRS:
        p = GroupParams(m, n)
        values = sorted(scale_value_set(p, 3))
        print(f"BS({m},{n}): lcm {p.l}, gcd {p.g}, scale values (rho<=3) {values}")
        for w in WORDS:
            sv = scale(p, w)
            mv = modular(p, w)
            seq = moller_sequence(p, w, args.kmax)
            print(
                f"  {w:>6}: scale {sv.value:>4} "
                f"modular {mv.numerator}/{mv.denominator:<3} indices {seq}"
            )
        print()


if __name__ == "__main__":
    main()
