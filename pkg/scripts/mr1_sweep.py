"""Scale the mr1 check over growing length bounds and report timing.

    python3 scripts/mr1_sweep.py --max 5 --jobs 4
"""
import argparse
import time

from bicat.involution import load_involution
from bicat.oracle import verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--inv", default="a<->b antimorphic")
    ap.add_argument("--max", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    theta = load_involution(args.inv)
    for n in range(1, args.max + 1):
        start = time.perf_counter()
        report = verify("mr1", theta, max_len=n, jobs=args.jobs)
        hits = report.to_dict()["witnesses"]
        print(f"len<={n}: {report.status:15s} {report.cases_checked:>8d} cases "
              f"{time.perf_counter() - start:6.2f}s  equal={hits.get('equal', 0)} unequal={hits.get('unequal', 0)}")


if __name__ == "__main__":
    main()
