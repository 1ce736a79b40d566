"""Check the matrix encoding on random binary instances and random generator products."""

import argparse
import random
import sys
from pathlib import Path

from sympcp.matrices import verify_embedding

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from conftest import random_instance  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=10)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    for n in range(args.instances):
        inst = random_instance(rng, k_max=5, max_len=4)
        rep = verify_embedding(inst, args.trials, args.max_len, seed=args.seed + n)
        bad += len(rep.failures)
        print(f"{str(inst):50s} trials={rep.trials} failures={len(rep.failures)}")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
