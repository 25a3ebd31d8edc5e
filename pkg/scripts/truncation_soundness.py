"""Pruned stack sums against unpruned and deeper searches on random small knots."""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from braidwalk.engine import stack_sum  # noqa: E402
from conftest import random_knot_word  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=60)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        b = random_knot_word(rng, max_width=3, max_len=7)
        for N in (2, 3):
            bound = (N - 1) * (b.width - 1)
            values = {
                str(stack_sum(b, N).value),
                str(stack_sum(b, N, prune=False).value),
                str(stack_sum(b, N, depth_limit=bound + 2).value),
            }
            if len(values) != 1:
                bad += 1
                print(f"{b} N={N}: {values}")
    print(f"{args.count} words, {bad} disagreements")


if __name__ == "__main__":
    main()
