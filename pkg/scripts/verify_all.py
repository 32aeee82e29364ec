"""Run every catalog routine on the chosen profiles and print a status table.

    python3 scripts/verify_all.py --inv 'a<->b antimorphic' --inv 'a->a b->b antimorphic' --jobs 4 --out reports/
"""
import argparse
import time
from pathlib import Path

from bicat.involution import load_involution
from bicat.oracle import THEOREM_IDS, verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--inv", action="append", help="involution source, repeatable")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--only", nargs="*", default=list(THEOREM_IDS))
    ap.add_argument("--out", type=Path, help="directory for one JSON report per run")
    args = ap.parse_args()
    sources = args.inv or ["a<->b antimorphic", "a->a b->b antimorphic"]
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    red = 0
    for source in sources:
        theta = load_involution(source)
        for theorem in args.only:
            start = time.perf_counter()
            report = verify(theorem, theta, jobs=args.jobs)
            seconds = time.perf_counter() - start
            red += not report.passed
            print(f"{theorem:20s} {theta.spec():28s} {report.status:15s} "
                  f"{report.cases_checked:>9d} cases {report.counterexample_count:>4d} cex {seconds:6.2f}s")
            if args.out:
                slug = theta.spec().replace(" ", "_").replace("<->", "-").replace("->", "=")
                (args.out / f"{theorem}__{slug}.json").write_text(report.to_json())
    print(f"{red} run(s) with counterexamples")


if __name__ == "__main__":
    main()
