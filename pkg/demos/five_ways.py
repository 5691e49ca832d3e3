"""The same keys, computed five different ways.

Run with ``python3 demos/five_ways.py``.

Besides the line and push-down procedures there are four classical routes:
jeu de taquin, Aval's sign matrices, Mason's skyline fillings (right key
only) and Willis's scanning.  All of them must agree; the operation counters
give a rough sense of how much work each one does.
"""

import random
from collections import Counter

from keytab import left_key, right_key
from keytab.cli import BENCH_METHODS
from keytab.oracles.aval import aval_left_key, aval_right_key, aval_sign_matrix, eliminate_all
from keytab.oracles.jdt import ls_left_key, ls_right_key
from keytab.oracles.mason import mason_right_key, mason_ssaf
from keytab.oracles.willis import willis_left_key, willis_right_key
from keytab.tableau import all_ssyt, format_tableau, parse_tableau, random_ssyt

S = parse_tableau("1 2 3 6 6\n2 3 6 7\n3 5 7 8\n6 7\n7", 9)
T = parse_tableau("1 1 2 2 3 7\n2 3 4 5\n4 5\n5 8\n6", 9)


def matrix(rows) -> str:
    return "\n".join(" ".join(f"{x:>2}" for x in r) for r in rows)


def main() -> None:
    print("Sign matrix of the tableau and the matrix after removing every -1:")
    print(matrix(aval_sign_matrix(S).to_list()))
    print()
    print(matrix(eliminate_all(aval_sign_matrix(S)).to_list()))

    print("\nSkyline filling of the second tableau (basement at the bottom):")
    for row in mason_ssaf(T).rows():
        print(" ".join("." if x is None else str(x) for x in row))
    print(f"gamma = {mason_ssaf(T).gamma}")

    print("\nAgreement on every tableau with at most 6 cells and entries <= 4:")
    count = 0
    for s in all_ssyt(6, 4):
        lk, rk = left_key(s), right_key(s)
        assert ls_left_key(s) == aval_left_key(s) == willis_left_key(s) == lk
        assert ls_right_key(s) == aval_right_key(s) == mason_right_key(s) == willis_right_key(s) == rk
        count += 1
    print(f"  {count} tableaux, no disagreement")
    print("\nLeft and right key of the second tableau:")
    print(format_tableau(left_key(T)))
    print()
    print(format_tableau(right_key(T)))

    rng = random.Random(0)
    corpus = [random_ssyt(rng, rng.randint(1, 12), rng.randint(1, 6)) for _ in range(100)]
    print("\nOperation counts on 100 random tableaux:")
    for name, fn in BENCH_METHODS.items():
        ops: Counter = Counter()
        for s in corpus:
            fn(s, ops)
        print(f"  {name:<16} comparisons {ops['comparisons']:>8}  cell moves {ops['cell_moves']:>8}")


if __name__ == "__main__":
    main()
