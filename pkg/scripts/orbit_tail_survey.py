"""Survey where the finite truncations of G_A keep the orbit structure {A_i} ∪ singletons.

For every size sequence in the grid and every tail length, report whether the
orbit partition is the expected one, and print the offending extra orbits.
Output is CSV on stdout.
"""

import argparse
import csv
import itertools
import sys

from choicegraph.families import build_GA, build_HA, spec_from_sizes, verify_claim1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--max-size", type=int, default=4)
    parser.add_argument("--tails", default="0,2,3,4", help="comma-separated tail lengths")
    parser.add_argument("--distinct", action="store_true", help="only pairwise-distinct sizes")
    parser.add_argument("--failures-only", action="store_true")
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["sizes", "tail", "variant", "holds", "group_order", "extra_orbits"])
    for tail in (int(t) for t in args.tails.split(",")):
        for n in range(1, args.max_n + 1):
            for sizes in itertools.product(range(1, args.max_size + 1), repeat=n):
                if args.distinct and len(set(sizes)) != n:
                    continue
                spec = spec_from_sizes(sizes, tail)
                for build in (build_GA, build_HA):
                    rep = verify_claim1(build(spec))
                    if args.failures_only and rep.holds:
                        continue
                    extra = " ".join("{" + ",".join(o) + "}" for o in rep.spurious())
                    writer.writerow(["-".join(map(str, sizes)), tail, build.__name__[-2:], rep.holds, rep.group_order, extra])


if __name__ == "__main__":
    main()
