"""Print a(X_m) for every unit residue d mod m, with |Y(m, d)| alongside.

    python scripts/a_number_table.py --m-max 16
"""
import argparse

from fermat_invariants.residue import units
from fermat_invariants.surface import surface_a_bruteforce, surface_a_closedform, y_count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-min", type=int, default=4)
    ap.add_argument("--m-max", type=int, default=16)
    args = ap.parse_args()
    for m in range(args.m_min, args.m_max + 1):
        cells, ones = [], []
        for d in units(m):
            a = surface_a_closedform(m, d)
            assert a == surface_a_bruteforce(m, d), (m, d)
            cells.append(f"{d}:{a}[{y_count(m, d)}]")
            if a == 1:
                ones.append(d)
        print(f"m={m:3d}  " + " ".join(cells) + (f"   a=1 at d={ones}" if ones else ""))


if __name__ == "__main__":
    main()
