"""Exhaustive check of |SW| under far commutation and Yang-Baxter moves."""

from __future__ import annotations

import argparse
import itertools

from braidwalk.braid import BraidWord, far_commute, far_commute_sites, yang_baxter, yang_baxter_sites
from braidwalk.walks import count_simple_walks


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--width", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=5)
    args = ap.parse_args()
    letters = [s * i for i in range(1, args.width) for s in (1, -1)]
    for name, sites, move in (("far", far_commute_sites, far_commute), ("yang-baxter", yang_baxter_sites, yang_baxter)):
        total = changed = 0
        example = None
        for L in range(2, args.max_len + 1):
            for entries in itertools.product(letters, repeat=L):
                b = BraidWord.from_ints(entries, args.width)
                s = sites(b)
                if not s:
                    continue
                c = count_simple_walks(b, jobs=1)
                for p in s:
                    total += 1
                    moved = move(b, p)
                    d = count_simple_walks(moved, jobs=1)
                    if d != c:
                        changed += 1
                        example = example or (b, c, moved, d)
        print(f"{name}: {total} moves, {changed} change the count")
        if example:
            print(f"  e.g. {example[0]} ({example[1]}) -> {example[2]} ({example[3]})")


if __name__ == "__main__":
    main()
