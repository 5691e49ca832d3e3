"""Left and right keys of a tableau, step by step.

Run with ``python3 demos/left_and_right_keys.py``.

The left key is read off by repeatedly crossing out a line of entries that
runs from the last column back to the first.  The right key comes from
pushing rows down one stage at a time and recording the exposed entry.
"""

from keytab import left_key, left_key_permutation, right_key, right_key_permutation
from keytab.keys import configurations
from keytab.tableau import format_tableau, parse_tableau

S = parse_tableau(
    """
    1 2 3 6 6
    2 3 6 7
    3 5 7 8
    6 7
    7
    """,
    9,
)


def show(title: str, text: str) -> None:
    print(f"\n== {title}")
    for line in text.splitlines():
        print("   " + line)


def main() -> None:
    show("the tableau", format_tableau(S))

    tau, trace = left_key_permutation(S)
    print("\nEach line starts at the bottom of the last column and moves left,")
    print("taking the largest entry that does not exceed the one to its right.")
    for k, line in enumerate(trace.lines, 1):
        cells = " ".join(f"{c.value}@({c.row + 1},{c.col + 1})" for c in reversed(line))
        print(f"  line {k}: {cells}")
    print(f"\nThe first-column ends of the lines, followed by the unused letters")
    print(f"in decreasing order, give tau = {tau}.")
    show("left key", format_tableau(left_key(S)))

    phi, _ = right_key_permutation(S)
    print("\nPush-down stages (value:colour, * marks a filled hole):")
    for conf in configurations(S):
        print(f"  stage {conf.stage}: exposed {conf.exposed_value}")
        for row in conf.rows:
            print("     " + " ".join(f"{e.value}{'*' if e.filled else ''}:{e.color}" for e in row))
    print(f"\nThe exposed entries, completed by the unused letters, give phi = {phi}.")
    show("right key", format_tableau(right_key(S)))

    lk, rk = left_key(S), right_key(S)
    ok = all(a <= b <= c for x, y, z in zip(lk.rows, S.rows, rk.rows) for a, b, c in zip(x, y, z))
    print(f"\nEntrywise left key <= tableau <= right key: {ok}")


if __name__ == "__main__":
    main()
