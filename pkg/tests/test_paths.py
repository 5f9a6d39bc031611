from functools import lru_cache

import pytest
from hypothesis import assume, given, strategies as st

from riordanpaths import (NoPotential, Potential, RArray, Step, StepSpec, count_paths, find_potential, left_factors,
                          ra_matrix, step_to_riordan, verify_factorization)
from riordanpaths import catalog as cat
from riordanpaths.goldens import MATRICES
from riordanpaths.paths import laurent_walks, parse_steps, steps_from_polynomial

N = 7


def brute_force(steps, region, n, k):
    """Plain recursive enumeration; only valid when every step has dx >= 1."""
    def ok(a, b):
        return {"triangle": 0 <= b <= a, "quadrant": a >= 0 and b >= 0, "halfplane": b >= 0}[region]

    @lru_cache(maxsize=None)
    def walk(a, b):
        if (a, b) == (0, 0):
            return 1
        if a <= 0 or not ok(a, b):
            return 0
        return sum(w * walk(a - dx, b - dy) for dx, dy, w in steps if ok(a - dx, b - dy))

    return walk(n, k)


def test_parse_steps():
    assert parse_steps("{(1,0), 2*(1,1), (-1)*(2,1)}") == (Step(1, 0), Step(1, 1, 2), Step(2, 1, -1))
    with pytest.raises(ValueError):
        parse_steps("nothing here")
    with pytest.raises(ValueError):
        Step(0, 0)


def test_spec_validation():
    with pytest.raises(ValueError):
        StepSpec("(1,0)", "disc")
    with pytest.raises(ValueError):
        StepSpec("(1,0)", level_rule="middle")
    with pytest.raises(ValueError):
        StepSpec(())


def test_json_roundtrip():
    spec = StepSpec("(1,0),2*(1,1)", "quadrant", {0: "(1,0)"}, "start")
    assert StepSpec.from_json(spec.to_json()) == spec


def test_pascal_and_delannoy():
    assert count_paths(StepSpec("(1,0),(1,1)"), N) == MATRICES["pascal"]
    assert count_paths(StepSpec("(1,0),(1,1),(2,1)"), N) == MATRICES["delannoy_triangle"]
    assert count_paths(StepSpec("(1,0),(0,1),(1,1)", "quadrant"), N) == MATRICES["delannoy_square"]


def test_backward_steps_need_a_potential():
    assert find_potential(StepSpec("(1,1),(0,-1)")) == Potential(2, -1)
    assert count_paths(StepSpec("(1,1),(0,-1)"), N) == MATRICES["catalan"]
    with pytest.raises(NoPotential):
        find_potential(StepSpec("(1,0),(-1,0)"))
    with pytest.raises(NoPotential):
        count_paths(StepSpec("(1,0),(0,1)"), 3, Potential(1, 0))


def test_level_dependent_examples():
    spec = StepSpec("(1,1),(2,0),(2,1)", levels={0: "(1,0),(1,1)", 1: "(1,0),(1,1),(2,1)"})
    assert count_paths(spec, N) == MATRICES["almost_1"]
    assert left_factors(spec, N) == [1, 2, 5, 11, 23, 47, 95]


def test_laurent_walks_simple():
    # steps (1,1),(1,-1): walks to height k after n steps
    L = laurent_walks(StepSpec("(1,1),(1,-1)"), 5, -2, 2)
    assert L[0].to_ints() == [1, 0, 2, 0, 6]
    assert L[-2].to_ints() == [0, 0, 1, 0, 4]


def test_factorization_rejects_wrong_array():
    spec = StepSpec("(1,1),(1,-1)", "halfplane")
    assert verify_factorization(cat.dyck_matrix(12), spec, 10, 6)
    assert not verify_factorization(cat.motzkin_matrix(12), spec, 10, 6)
    with pytest.raises(ValueError):
        verify_factorization(cat.dyck_matrix(12), StepSpec("(1,1)", levels={0: "(1,0)"}), 10, 6)


def test_steps_from_polynomial():
    spec = steps_from_polynomial([1, 0, 2], [1, 1])
    assert spec.steps == (Step(1, 0), Step(3, 0, 2), Step(1, 1), Step(2, 1))


forward_steps = st.lists(st.tuples(st.integers(1, 2), st.integers(-1, 2), st.integers(-2, 3)),
                         min_size=1, max_size=4)


@given(forward_steps, st.sampled_from(["triangle", "quadrant", "halfplane"]))
def test_dp_matches_brute_force(steps, region):
    steps = [s for s in steps if s[2]]
    assume(steps)
    M = count_paths(StepSpec(tuple(steps), region), 6)
    for n in range(6):
        for k in range(6):
            if region != "triangle" or k <= n:
                assert M[n, k] == brute_force(tuple(steps), region, n, k)


@given(forward_steps, st.integers(2, 4), st.integers(-2, 2))
def test_potential_choice_does_not_matter(steps, a, b):
    steps = [s for s in steps if s[2]]
    assume(steps)
    spec = StepSpec(tuple(steps), "halfplane")
    pot = Potential(a, b)
    assume(all(a * dx + b * dy >= 1 for dx, dy, _ in steps))
    assert count_paths(spec, 6, pot) == count_paths(spec, 6)


@given(forward_steps, st.lists(st.integers(0, 4), max_size=3, unique=True), st.sampled_from(["end", "start"]))
def test_level_overrides_equal_to_default_change_nothing(steps, levels, rule):
    steps = tuple(s for s in steps if s[2])
    assume(steps)
    plain = StepSpec(steps, "quadrant", level_rule=rule)
    same = StepSpec(steps, "quadrant", {lv: steps for lv in levels}, rule)
    assert count_paths(plain, 6) == count_paths(same, 6)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_step_polynomial_agrees_with_riordan(alpha, beta):
    assume(beta[0] != 0)
    spec = steps_from_polynomial(alpha, beta)
    assume(spec.steps)
    assert count_paths(spec, 8) == ra_matrix(step_to_riordan(alpha, beta, 8), 8)
