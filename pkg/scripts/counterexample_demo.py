"""Reproduce the {(00,0)} divergence: no PCP solution, yet the generators satisfy relations."""

import argparse
import json

from sympcp.demo import counterexample_report
from sympcp.search import SearchLimits


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-length", type=int, default=12)
    ap.add_argument("--max-states", type=int, default=200_000)
    args = ap.parse_args()
    report = counterexample_report(SearchLimits(30, 64, args.max_states), args.max_length)
    print(json.dumps(report, indent=2, ensure_ascii=False))


if __name__ == "__main__":
    main()
