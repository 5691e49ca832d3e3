"""Demazure characters from right keys.

Run with ``python3 demos/demazure_characters.py``.

The Demazure character of a coset sums x^S over tableaux whose right key lies
below the coset.  At the longest coset this is the whole Schur polynomial;
along the way the characters grow monotonically.
"""

from keytab.demazure import (
    character_sanity,
    demazure_character,
    distinct_cosets,
    evaluate,
    format_character,
    full_character,
    opposite_demazure_character,
)
from keytab.tableau import coset_to_key_tableau, format_tableau


def main() -> None:
    mu, n = (2, 1), 3
    print(f"shape {mu}, n = {n}: one character per coset")
    for w in sorted(distinct_cosets(mu, n)):
        key = coset_to_key_tableau(w, mu)
        char = demazure_character(mu, w, n)
        print(f"\n  key {format_tableau(key).replace(chr(10), ' / ')}  "
              f"({sum(char.values())} tableaux)")
        print("    " + " + ".join(format_character(char)))

    full = full_character(mu, n)
    print(f"\nSchur polynomial: {' + '.join(format_character(full))}")
    print(f"value at (1,1,1): {evaluate(full, (1, 1, 1))}")
    print(f"opposite character at the identity is the whole sum: "
          f"{opposite_demazure_character(mu, (1, 2, 3), n) == full}")

    for shape, m in (((2, 1), 3), ((2, 2), 3), ((3, 1), 4)):
        rep = character_sanity(shape, m)
        print(f"sanity {shape}, n={m}: longest={rep.longest_is_full} "
              f"monotone={rep.monotone} symmetric={rep.symmetric}")


if __name__ == "__main__":
    main()
