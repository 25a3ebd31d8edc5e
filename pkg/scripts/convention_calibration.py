"""Calibrate the global q <-> 1/q switch and spot-check it on small knots."""

from __future__ import annotations

from braidwalk.braid import parse_braid
from braidwalk.bracket import jones_via_bracket
from braidwalk.engine import INVERT_Q, calibrate_convention, colored_jones_raw

WORDS = {"3_1": "[1,1,1]", "3_1*": "[-1,-1,-1]", "4_1": "[1,-2,1,-2]", "5_2": "[-2,1,2,2,2,1]"}


def main() -> None:
    needed = calibrate_convention()
    print(f"inversion needed: {needed}; INVERT_Q = {INVERT_Q}")
    for name, text in WORDS.items():
        b = parse_braid(text)
        raw, oracle = colored_jones_raw(b, 2), jones_via_bracket(b)
        print(f"{name:5} engine {raw}  bracket {oracle}  equal {raw == oracle}")


if __name__ == "__main__":
    main()
