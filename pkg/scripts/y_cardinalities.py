"""Tabulate |Y(m, d)| over unit residues and check |Y(m, d)| = |Y(m, 1/d)|.

Also reports, per m, the fraction of units with a(X_m) = 2, which tends to 1
as m grows since only d in {1, 2, 1/2} escape.

    python scripts/y_cardinalities.py --m-max 60 --csv y.csv
"""
import argparse
import csv
import sys

from fermat_invariants.residue import inv_mod, units
from fermat_invariants.surface import y_count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-max", type=int, default=40)
    ap.add_argument("--csv", help="write m,d,d_inv,y_count,y_count_inv rows here")
    args = ap.parse_args()

    rows = []
    broken = 0
    for m in range(4, args.m_max + 1):
        us = units(m)
        counts = {d: y_count(m, d) for d in us}
        for d in us:
            di = inv_mod(d, m)
            rows.append((m, d, di, counts[d], counts[di]))
            broken += counts[d] != counts[di]
        frac = sum(c > 0 for c in counts.values()) / len(us)
        print(f"m={m:3d} units={len(us):3d} a=2 fraction={frac:.3f} max|Y|={max(counts.values())}")
    print(f"symmetry violations: {broken}")
    if args.csv:
        with open(args.csv, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["m", "d", "d_inv", "y_count", "y_count_inv"])
            w.writerows(rows)
    return 1 if broken else 0


if __name__ == "__main__":
    sys.exit(main())
