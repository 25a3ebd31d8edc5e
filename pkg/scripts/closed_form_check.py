"""Compare the closed-form sums with the walk engine, both variants, N = 2..5."""

from __future__ import annotations

from braidwalk.closed_forms import CLOSED_FORMS, EXAMPLE_WORDS, VARIANTS, closed_form
from braidwalk.engine import colored_jones


def main(max_color: int = 5) -> None:
    for tag in sorted(CLOSED_FORMS):
        for N in range(2, max_color + 1):
            engine = colored_jones(EXAMPLE_WORDS[tag], N)
            marks = {v: closed_form(tag, N, v) == engine for v in VARIANTS}
            print(f"{tag} N={N}: " + "  ".join(f"{v} {'ok' if ok else 'differs'}" for v, ok in marks.items()))
            if not marks["verbatim"]:
                diff = closed_form(tag, N, "verbatim") - engine
                print(f"    verbatim - engine = {diff}")


if __name__ == "__main__":
    main()
