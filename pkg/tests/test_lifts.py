import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from keytab.errors import EnumerationTooLarge, GammaInA, NoCandidate, OrderViolated, PreconditionViolated
from keytab.lifts import (
    SubsetPairState,
    brute_force_lift,
    coset_members,
    max_lift,
    min_lift,
    subproc_P,
    subproc_Q,
    subproc_Q_form,
)
from keytab.order import bruhat_leq, coset_geq, coset_leq, descent_set, level, subset_leq, truncation_count
from keytab.tableau import Permutation

P = Permutation.from_string


def random_valid(rng, direction, max_n=6):
    """A random (p, Y, w) satisfying the precondition of the lift."""
    while True:
        n = rng.randint(1, max_n)
        w = Permutation(rng.sample(range(1, n + 1), n))
        p = rng.randint(1, n)
        y = tuple(sorted(rng.sample(range(1, n + 1), p)))
        ok = coset_leq(y, w) if direction == "max" else coset_geq(y, w)
        if ok:
            return p, y, w


@st.composite
def lift_inputs(draw, direction, max_n=7):
    n = draw(st.integers(1, max_n))
    w = Permutation(draw(st.permutations(range(1, n + 1))))
    p = draw(st.integers(1, n))
    y = tuple(sorted(draw(st.permutations(range(1, n + 1)))[:p]))
    ok = coset_leq(y, w) if direction == "max" else coset_geq(y, w)
    if not ok:
        # move y onto the prefix set of w, which always qualifies
        y = tuple(sorted(w[:p]))
    return p, y, w


class TestSubprocedures:
    def test_P_examples(self):
        out, st_ = subproc_P(SubsetPairState((1, 2), (1, 2), "P"), 3)
        assert out == 3 and (st_.a, st_.b) == ((1, 2, 3), (1, 2, 3))
        out, st_ = subproc_P(SubsetPairState((4,), (2,), "P"), 3)
        assert out == 4 and (st_.a, st_.b) == ((3, 4), (2, 4))
        out, _ = subproc_P(SubsetPairState((8, 9), (6, 9), "P"), 7)
        assert out == 8

    def test_Q_example(self):
        out, st_ = subproc_Q(SubsetPairState((1, 2), (1, 2), "Q"), 3)
        assert out == 3 and st_.b == (1, 2, 3)

    def test_empty_state(self):
        assert subproc_P(SubsetPairState((), (), "P"), 5)[0] == 5
        assert subproc_Q(SubsetPairState((), (), "Q"), 5)[0] == 5

    def test_errors(self):
        with pytest.raises(GammaInA):
            subproc_P(SubsetPairState((1,), (1,), "P"), 1)
        with pytest.raises(GammaInA):
            subproc_Q(SubsetPairState((1,), (1,), "Q"), 1)
        with pytest.raises(OrderViolated):
            SubsetPairState((1,), (2,), "P")
        with pytest.raises(OrderViolated):
            SubsetPairState((2,), (1,), "Q")
        with pytest.raises(OrderViolated):
            SubsetPairState((1, 2), (1,), "Q")
        with pytest.raises(OrderViolated):
            subproc_Q(SubsetPairState((1,), (1,), "P"), 3)
        with pytest.raises(OrderViolated):
            subproc_P(SubsetPairState((1,), (1,), "Q"), 3)

    def _states(self, n, orientation):
        for t in range(0, n):
            for a in itertools.combinations(range(1, n + 1), t):
                for b in itertools.combinations(range(1, n + 1), t):
                    ok = subset_leq(b, a) if orientation == "P" else subset_leq(a, b)
                    if ok:
                        yield SubsetPairState(a, b, orientation)

    def test_P_guarantees(self):
        n = 6
        for state in self._states(n, "P"):
            for gamma in set(range(1, n + 1)) - set(state.a):
                out, new = subproc_P(state, gamma)
                assert gamma <= out
                assert out not in state.b
                assert subset_leq(new.b, new.a)
                assert level(new.a, out) == level(new.b, out)
                for alpha in set(state.a) & set(state.b):
                    if level(state.a, alpha) == level(state.b, alpha):
                        assert level(new.a, alpha) == level(new.b, alpha)
                        if gamma < alpha:
                            assert out < alpha

    def test_Q_guarantees(self):
        n = 6
        for state in self._states(n, "Q"):
            for gamma in set(range(1, n + 1)) - set(state.a):
                out, new = subproc_Q(state, gamma)
                assert out <= gamma
                assert out not in state.b
                assert subset_leq(new.a, new.b)
                assert level(new.a, out) == level(new.b, out)
                # removing the output again restores a <= b
                assert subset_leq(state.a, tuple(x for x in new.b if x != out))

    def test_Q_form_is_independent_of_gamma(self):
        n = 7
        checked = 0
        for t in range(0, n):
            for a2 in itertools.combinations(range(1, n + 1), t + 1):
                for b in itertools.combinations(range(1, n + 1), t):
                    outs = set()
                    for gamma in a2:
                        rest = tuple(x for x in a2 if x != gamma)
                        if subset_leq(rest, b):
                            outs.add(subproc_Q(SubsetPairState(rest, b, "Q"), gamma)[0])
                    if outs:
                        checked += 1
                        assert len(outs) == 1, (a2, b, outs)
                        assert subproc_Q_form(a2, b) == outs.pop()
        assert checked > 1000

    def test_Q_form_errors(self):
        with pytest.raises(OrderViolated):
            subproc_Q_form((1, 2), (1, 2))
        with pytest.raises(OrderViolated):
            subproc_Q_form((5, 6), (1,))

    @pytest.mark.parametrize("orientation", ["P", "Q"])
    def test_drop_common_changes_nothing(self, orientation):
        n = 6
        step = subproc_P if orientation == "P" else subproc_Q
        for state in self._states(n, orientation):
            for gamma in set(range(1, n + 1)) - set(state.a):
                assert step(state, gamma) == step(state, gamma, drop_common=True)


class TestGolden:
    def test_max(self):
        assert max_lift(1, {2}, P("4321")) == P("2431")
        assert max_lift(1, {6}, P("987654321")) == P("698754321")
        assert max_lift(4, {1, 2, 3, 4}, P("1234")) == P("1234")

    def test_min(self):
        assert min_lift(5, {1, 2, 4, 5, 6}, P("123456789")) == P("124563789")
        assert min_lift(4, {1, 3, 5, 8}, P("124563789")) == P("135842679")
        assert min_lift(3, {1, 2, 3}, P("123456")) == P("123456")

    def test_brute(self):
        assert brute_force_lift(1, {2}, P("4321"), "max") == P("2431")
        assert brute_force_lift(4, {1, 2, 3, 4}, P("1234"), "min") == P("1234")
        assert brute_force_lift(1, {6}, P("654321"), "max") == max_lift(1, {6}, P("654321"))

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            max_lift(1, {4}, P("1234"))
        with pytest.raises(PreconditionViolated):
            min_lift(1, {1}, P("4321"))
        with pytest.raises(PreconditionViolated):
            max_lift(2, {1}, P("4321"))
        with pytest.raises(PreconditionViolated):
            max_lift(1, {9}, P("4321"))
        with pytest.raises(EnumerationTooLarge):
            brute_force_lift(1, {1}, P("12345678"), "min")
        with pytest.raises(NoCandidate):
            brute_force_lift(1, {4}, P("1234"), "max")
        with pytest.raises(ValueError):
            brute_force_lift(1, {1}, P("1234"), "up")


def check_max_properties(p, y, w, sigma):
    n = len(w)
    assert set(sigma[:p]) == set(y) and bruhat_leq(sigma, w)
    for i in range(p):
        assert sigma[i] <= w[i]
        for yy in set(y) - set(sigma[:i]):
            assert (sigma[i] < yy) == (w[i] < yy)
            assert truncation_count(w[: i + 1], yy - 1) == truncation_count(sigma[: i + 1], yy - 1)
    for i in range(p, n):
        assert w[i] <= sigma[i]
        assert subset_leq(sigma[: i + 1], w[: i + 1])
        for j in range(i, n):
            assert sigma[i] in w[: j + 1]
            assert level(sigma[: j + 1], sigma[i]) == level(w[: j + 1], sigma[i])
        for j in range(i + 1, n):
            if w[j] < sigma[i]:
                assert sigma[j] < sigma[i]
    assert descent_set(w) - {p} <= descent_set(sigma)


def check_min_properties(p, y, w, xi):
    n = len(w)
    assert set(xi[:p]) == set(y) and bruhat_leq(w, xi)
    for i in range(p):
        assert xi[i] >= w[i]
        for yy in set(y) - set(xi[:i]):
            assert (xi[i] > yy) == (w[i] > yy)
            assert truncation_count(w[: i + 1], yy) == truncation_count(xi[: i + 1], yy)
    for i in range(p, n):
        assert w[i] >= xi[i]
        assert subset_leq(w[: i + 1], xi[: i + 1])
        for j in range(i, n):
            assert xi[i] in w[: j + 1]
            assert level(xi[: j + 1], xi[i]) == level(w[: j + 1], xi[i])
        for j in range(i + 1, n):
            if w[j] > xi[i]:
                assert xi[j] > xi[i]
    assert descent_set(xi) <= descent_set(w) | {p}


class TestProperties:
    @settings(max_examples=300)
    @given(lift_inputs("max"))
    def test_max_lift_properties(self, args):
        p, y, w = args
        check_max_properties(p, y, w, max_lift(p, y, w))

    @settings(max_examples=300)
    @given(lift_inputs("min"))
    def test_min_lift_properties(self, args):
        p, y, w = args
        check_min_properties(p, y, w, min_lift(p, y, w))

    @settings(max_examples=200)
    @given(lift_inputs("max", max_n=6))
    def test_max_lift_is_deodhar(self, args):
        p, y, w = args
        sigma = max_lift(p, y, w)
        assert sigma == brute_force_lift(p, y, w, "max")
        for v in coset_members(p, y, len(w)):
            if not bruhat_leq(v, sigma):
                assert not bruhat_leq(v, w)

    @settings(max_examples=200)
    @given(lift_inputs("min", max_n=6))
    def test_min_lift_is_deodhar(self, args):
        p, y, w = args
        assert min_lift(p, y, w) == brute_force_lift(p, y, w, "min")

    @pytest.mark.parametrize("direction", ["min", "max"])
    def test_drop_common_lifts(self, direction):
        rng = random.Random(7)
        lift = min_lift if direction == "min" else max_lift
        for _ in range(500):
            p, y, w = random_valid(rng, direction, max_n=9)
            assert lift(p, y, w) == lift(p, y, w, drop_common=True)

    def test_min_lift_prefix_stability(self):
        rng = random.Random(11)
        checked = 0
        while checked < 2000:
            p, y, w = random_valid(rng, "min", max_n=8)
            n = len(w)
            cut = rng.randint(0, n)
            tail = list(w[cut:])
            rng.shuffle(tail)
            w2 = Permutation(list(w[:cut]) + tail)
            if not coset_geq(y, w2):
                continue
            checked += 1
            assert min_lift(p, y, w)[:cut] == min_lift(p, y, w2)[:cut]
