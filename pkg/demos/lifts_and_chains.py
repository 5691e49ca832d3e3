"""Deodhar lifts and the minimal chain of a tableau.

Run with ``python3 demos/lifts_and_chains.py``.

A lift moves a permutation ``w`` into the coset of permutations whose first
``p`` letters form a given set ``Y``, choosing the Bruhat-largest element
below ``w`` (max lift) or the smallest above it (min lift).  Chaining min
lifts column by column yields the right key.
"""

import random

from keytab import Permutation, bruhat_leq, max_lift, min_lift, minimal_chain, right_key
from keytab.lifts import brute_force_lift
from keytab.order import coset_geq, coset_leq
from keytab.tableau import coset_to_key_tableau, format_tableau, parse_tableau

S = parse_tableau("1 1 2 2 3 7\n2 3 4 5\n4 5\n5 8\n6", 9)


def main() -> None:
    w = Permutation.from_string("4321")
    print(f"max lift of {w} into the coset of {{2}} (p=1): {max_lift(1, {2}, w)}")
    w = Permutation.from_string("123456789")
    print(f"min lift of {w} into the coset of {{1,2,4,5,6}} (p=5): {min_lift(5, {1, 2, 4, 5, 6}, w)}")

    print("\nThe minimal chain: one min lift per column of the tableau")
    print(format_tableau(S))
    chain = minimal_chain(S)
    for col, pi in zip(S.columns(), chain):
        print(f"  column {{{', '.join(map(str, col))}}}".ljust(30) + f"-> {pi}")
    print(f"  increasing in Bruhat order: {all(bruhat_leq(a, b) for a, b in zip(chain, chain[1:]))}")
    print(f"  last member gives the right key: {coset_to_key_tableau(chain[-1], S.shape) == right_key(S)}")

    print("\nAgainst brute force (enumerate the coset, keep the extremal element):")
    rng = random.Random(1)
    checked = {"max": 0, "min": 0}
    while min(checked.values()) < 500:
        n = rng.randint(1, 6)
        w = Permutation(rng.sample(range(1, n + 1), n))
        p = rng.randint(1, n)
        y = sorted(rng.sample(range(1, n + 1), p))
        for direction, lift, valid in (("max", max_lift, coset_leq), ("min", min_lift, coset_geq)):
            if valid(y, w) and checked[direction] < 500:
                assert lift(p, y, w) == brute_force_lift(p, y, w, direction)
                checked[direction] += 1
    print(f"  {checked['max']} max lifts and {checked['min']} min lifts agree")


if __name__ == "__main__":
    main()
