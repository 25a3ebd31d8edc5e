"""Search one- and two-letter edits of a suspect word for a knot matching a target.

Examples:
  python3 scripts/typo_search.py 9_4          # single edits of the printed 9_4 word
  python3 scripts/typo_search.py gamma_2      # edits of gamma_2 against gamma_1's Jones polynomial
"""

from __future__ import annotations

import argparse
import itertools

from braidwalk.braid import BraidWord, is_knot, parse_braid, reflect
from braidwalk.bracket import jones_via_bracket
from braidwalk.io import load_bundled
from braidwalk.minimize import minimize_walks
from braidwalk.walks import count_simple_walks


def edits(word: list[int], width: int):
    letters = [s * i for i in range(1, width) for s in (1, -1)]
    for p in range(len(word)):
        for x in letters:
            if x != word[p]:
                yield word[:p] + [x] + word[p + 1 :]
        yield word[:p] + word[p + 1 :]
    for p in range(len(word) + 1):
        for x in letters:
            yield word[:p] + [x] + word[p:]


def search(word: list[int], width: int, target, depth: int):
    seen = {tuple(word)}
    frontier = [word]
    for _ in range(depth):
        nxt = []
        for w in frontier:
            for e in edits(w, width):
                if tuple(e) in seen:
                    continue
                seen.add(tuple(e))
                nxt.append(e)
        frontier = nxt
        for e in frontier:
            b = BraidWord.from_ints(e, width)
            if is_knot(b) and jones_via_bracket(b, limit=22) in target:
                yield b
    print(f"{len(seen) - 1} candidates examined")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("case", choices=("9_4", "gamma_2"))
    ap.add_argument("--depth", type=int, default=1)
    args = ap.parse_args()
    if args.case == "9_4":
        rec = next(r for r in load_bundled("table4").records if r.name == "9_4")
        printed = parse_braid(rec.extra["printed_braid"])
        target = {jones_via_bracket(rec.word)}
        word, width = printed.to_ints(), printed.width
    else:
        recs = {r.name: r for r in load_bundled("section8").records}
        ref = jones_via_bracket(recs["11n_8:gamma_1"].word)
        target = {ref, ref.invert_q()}
        word, width = recs["11n_8:gamma_2"].word.to_ints(), recs["11n_8:gamma_2"].word.width
    for b in search(word, width, target, args.depth):
        print(f"match {b}: sw {count_simple_walks(b)}, orbit min {minimize_walks(b).sw_count}")


if __name__ == "__main__":
    main()
