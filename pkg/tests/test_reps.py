import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from formslopes.errors import HypothesisViolated, NotPositiveDefinite, PreconditionViolated
from formslopes.forms import BQF, enumerate_reduced
from formslopes.reps import (
    ONE_TWELVE,
    THREE_FOUR,
    admissible_representations,
    count_N_representations,
    count_by_3_4_form,
    enumerate_representations,
    gauss_count,
)

from oracles import box_representations


def test_enumerate_examples():
    assert enumerate_representations(THREE_FOUR, 7).reps == ((-1, -1), (-1, 1), (1, -1), (1, 1))
    assert enumerate_representations(ONE_TWELVE, 7).reps == ()
    assert enumerate_representations(ONE_TWELVE, 1).reps == ((-1, 0), (1, 0))


def test_enumerate_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        enumerate_representations(BQF(1, 0, -2), 7)


def test_enumerate_matches_box_oracle():
    for abc in [(1, 0, 1), (1, 1, 1), (3, 0, 4), (1, 0, 12), (2, 1, 3), (3, 2, 5), (5, -4, 7)]:
        f = BQF(*abc)
        for m in range(1, 120):
            for proper in (True, False):
                got = enumerate_representations(f, m, proper_only=proper)
                assert list(got.reps) == box_representations(*abc, m, proper=proper)


def test_enumerate_non_proper_includes_multiples():
    reps = enumerate_representations(BQF(1, 0, 1), 25, proper_only=False).reps
    assert (5, 0) in reps and (3, 4) in reps
    assert (5, 0) not in enumerate_representations(BQF(1, 0, 1), 25).reps


@given(st.integers(1, 40), st.integers(-40, 40), st.integers(1, 40), st.integers(1, 5000))
def test_representation_set_invariants(a, b, c, m):
    f = BQF(a, b, c)
    if f.discriminant >= 0:
        return
    rs = enumerate_representations(f, m)
    assert list(rs.reps) == sorted(set(rs.reps))
    for x, y in rs.reps:
        assert f(x, y) == m and math.gcd(x, y) == 1
        assert (-x, -y) in rs.reps
        if b == 0:
            assert (-x, y) in rs.reps and (x, -y) in rs.reps
    assert rs.count % 2 == 0
    if b == 0 and all(x and y for x, y in rs.reps):
        assert rs.count % 4 == 0


@pytest.mark.parametrize("m, k, expected", [(7, 12, 4), (1, 12, 2), (5, 12, 0)])
def test_gauss_count_examples(m, k, expected):
    assert gauss_count(m, k) == expected
    brute = sum(len(box_representations(f.a, f.b, f.c, m)) for f in enumerate_reduced(-4 * k))
    assert brute == expected


@pytest.mark.parametrize("m, k", [(8, 12), (3, 12), (7, 1), (7, 0), (0, 5)])
def test_gauss_count_preconditions(m, k):
    with pytest.raises(PreconditionViolated):
        gauss_count(m, k)


def test_gauss_count_small_range():
    for k in range(2, 12):
        forms = enumerate_reduced(-4 * k)
        for m in range(1, 400, 2):
            if math.gcd(m, k) != 1:
                continue
            brute = sum(enumerate_representations(f, m).count for f in forms)
            assert gauss_count(m, k) == brute, (m, k)


@pytest.mark.parametrize("m, expected", [(7, 4), (1983163, 64), (19, 4), (7 * 13, 8)])
def test_count_by_3_4_form(m, expected):
    assert count_by_3_4_form(m) == expected
    assert enumerate_representations(THREE_FOUR, m).count == expected


@pytest.mark.parametrize("m, fragment", [(35, "prime divisor 5"), (11, "prime divisor 11"),
                                         (13, "13 is 1 mod 12, not 7"), (49, "1 mod 12")])
def test_count_by_3_4_form_hypothesis(m, fragment):
    with pytest.raises(HypothesisViolated, match=fragment):
        count_by_3_4_form(m)


def test_count_by_3_4_form_oracle_values():
    assert len(box_representations(3, 0, 4, 7)) == 4


@pytest.mark.parametrize("N, expected", [(28, 4), (7932652, 64), (16492, 16)])
def test_count_N_representations(N, expected):
    assert count_N_representations(N) == expected
    assert len(admissible_representations(N)) == expected


def test_count_N_small_oracles():
    assert [(p, q) for p, q in box_representations(1, 0, 12, 28) if p % 4 == 0] == [
        (-4, -1), (-4, 1), (4, -1), (4, 1)]
    brute = [(p, q) for p, q in box_representations(1, 0, 12, 16492) if p % 4 == 0 and p % 3]
    assert len(brute) == 16


@pytest.mark.parametrize("N", [30, 20, 4 * 35, 0])
def test_count_N_hypothesis(N):
    with pytest.raises(HypothesisViolated):
        count_N_representations(N)


def test_corollary_bijection():
    for m in range(7, 100_001, 12):
        try:
            count_by_3_4_form(m)
        except HypothesisViolated:
            continue
        by_34 = {(q, r) for q, r in enumerate_representations(THREE_FOUR, m).reps}
        admissible = set(admissible_representations(4 * m))
        assert {(4 * r, q) for q, r in by_34} == admissible
        proper_with_4p = [(p, q) for p, q in enumerate_representations(ONE_TWELVE, 4 * m).reps
                          if p % 4 == 0]
        assert all(p % 3 for p, q in proper_with_4p)
        assert len(proper_with_4p) == len(admissible)
