"""Simple-walk counts on the torus families against their recurrences and closed forms."""

from __future__ import annotations

import argparse

from braidwalk.torus import FLOAT_CHECK_MAX, count_series, f_closed_float, g_closed_complex, _f_exact, _g_exact


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max2", type=int, default=14)
    ap.add_argument("--max3", type=int, default=10)
    args = ap.parse_args()
    for family, n_max, mirror in ((2, args.max2, None), (3, args.max3, None), (3, min(args.max3, 8), False)):
        rep = count_series(family, n_max, mirror=mirror)
        label = "mirror" if rep.mirror else "literal"
        print(f"family {family} ({label}): {rep.counts}")
        print(f"  recurrence {rep.recurrence_ok}  closed form {rep.closedform_ok}")
    df = max(abs(f_closed_float(n) - _f_exact(n)) for n in range(1, FLOAT_CHECK_MAX + 1))
    dg = max(abs(g_closed_complex(n) - _g_exact(n)) for n in range(1, FLOAT_CHECK_MAX + 1))
    dv = max(abs(g_closed_complex(n, "verbatim") - _g_exact(n)) for n in range(1, 12))
    print(f"max |delta| for n <= {FLOAT_CHECK_MAX}: f {df:.2e}, g {dg:.2e}")
    print(f"printed g exponent (n instead of n-1): max |delta| {dv:.1f} on n <= 11")


if __name__ == "__main__":
    main()
