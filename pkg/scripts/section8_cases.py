"""Raw and orbit-minimal walk counts for the 10_136 and 11n_8 words."""

from __future__ import annotations

from braidwalk.braid import closure_components
from braidwalk.bracket import jones_via_bracket
from braidwalk.io import load_bundled
from braidwalk.minimize import minimize_walks
from braidwalk.walks import count_simple_walks


def main() -> None:
    for r in load_bundled("section8").records:
        best = minimize_walks(r.word)
        comps = closure_components(r.word)
        print(f"{r.name}: {r.word}  components {comps}")
        print(f"  raw {count_simple_walks(r.word)}  min {best.sw_count} via {best.describe()}  listed {r.expected_sw}")
        print(f"  Jones {jones_via_bracket(r.word)}")


if __name__ == "__main__":
    main()
