#!/usr/bin/env python3
"""Survey o_k and the dominant-dimension inequality over a cyclic corpus.

For every cyclic Kupisch series in the requested range, prints o_1, o_2,
the dominant dimension, and (for non-selfinjective instances) the slack
in (o_k + 2 - w)(k + 2) - 1 >= domdim.
"""

import argparse

from domdimlab import nakayama as nak
from domdimlab import rigidity as rg
from domdimlab.suites import cyclic_series


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=3)
    parser.add_argument("--c-max", type=int, default=6)
    parser.add_argument("--cutoff", type=int, default=64)
    args = parser.parse_args()

    header = f"{'kupisch':<18} {'o_1':>4} {'o_2':>4} {'domdim':>9} {'slack(k=1)':>11}"
    print(header)
    print("-" * len(header))
    for kup in cyclic_series(2, args.n_max, args.c_max):
        A = nak.validate(nak.CYCLE, kup)
        o1 = rg.o_k(A, 1).o_k
        o2 = rg.o_k(A, 2).o_k
        dd = nak.domdim(A, args.cutoff)
        slack = "-"
        if dd.is_finite:
            slack = str((o1 + 2 - A.n) * 3 - 1 - dd.value)
        print(f"{A.describe():<18} {o1:>4} {o2:>4} {str(dd):>9} {slack:>11}")


if __name__ == "__main__":
    main()
