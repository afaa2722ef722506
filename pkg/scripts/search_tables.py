"""Search for the best weight-6 generalized toric code at each n.

    python3 scripts/search_tables.py --n-min 12 --n-max 72 --out results/search
"""

import argparse
import logging
import sys
import time
from pathlib import Path

from toricgb.distance import DistancePolicy
from toricgb.known_codes import two_d_rows
from toricgb.search import SearchSpace, format_table, run_search, write_csv


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-min", type=int, default=12)
    p.add_argument("--n-max", type=int, default=72)
    p.add_argument("--order", choices=["merit", "d"], default="merit")
    p.add_argument("--cap", type=int, default=14)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="results/search")
    p.add_argument("-v", "--verbose", action="store_true")
    args = p.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    lo = args.n_min + args.n_min % 2
    space = SearchSpace(tuple(range(lo, args.n_max + 1, 2)), policy=DistancePolicy(cap=args.cap), order=args.order)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    with open(out / "records.jsonl", "w") as fh:
        summary = run_search(space, args.workers, fh)
    optima = [summary.optima[n] for n in sorted(summary.optima)]
    with open(out / "optima.csv", "w") as fh:
        write_csv(optima, fh)
    print(format_table(optima))

    known = {r.n: (r.k, r.d) for r in two_d_rows(table=1)}
    diff = [(r.n, (r.k, r.d), known.get(r.n)) for r in optima if r.n in known and known[r.n] != (r.k, r.d)]
    missing = [n for n in space.n_values if n in known and n not in summary.optima]
    print(f"{len(optima)} optima in {time.perf_counter() - t0:.1f} s; {len(diff)} differ from the table, {len(missing)} missing")
    for d in diff:
        print("  differs:", d)
    return 1 if diff or missing else 0


if __name__ == "__main__":
    sys.exit(main())
