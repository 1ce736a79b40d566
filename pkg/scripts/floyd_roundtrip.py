"""Word problem -> symmetric PCP -> solver -> derivation, on random length-preserving presentations."""

import argparse
import itertools
import random

from sympcp.floyd import Presentation, build_sympcp, check_derivation, search_derivation, solution_to_derivation
from sympcp.search import SearchLimits, solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=30)
    ap.add_argument("--word-len", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rules = ["".join(p) for p in itertools.product("ab", repeat=2)]
    agree = 0
    for _ in range(args.cases):
        l, r = rng.sample(rules, 2)
        pres = Presentation.parse(["a", "b"], [(l, r)])
        x = pres.word("".join(rng.choice("ab") for _ in range(args.word_len)))
        y = pres.word("".join(rng.choice("ab") for _ in range(args.word_len)))
        d = search_derivation(pres, x, y, max_length=args.word_len, max_depth=64)
        out = solve(build_sympcp(pres, x, y), SearchLimits(80, 64, 200_000))
        ok = out.found == (d is not None)
        if out.found:
            ok = ok and check_derivation(pres, solution_to_derivation(pres, x, y, out.witness))
        agree += ok
        tiles = len(out.witness) if out.found else "-"
        print(f"{l}={r}  {x} ~ {y}: derivable={d is not None} solver={out.status} tiles={tiles}")
    print(f"agreement {agree}/{args.cases}")


if __name__ == "__main__":
    main()
