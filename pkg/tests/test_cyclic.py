"""Ground-set core: stability predicate, enumeration, rotations, canonical forms."""

from itertools import combinations
from math import comb

import pytest

from schrijver import (
    CycleParams,
    ParameterError,
    canonical_form,
    enumerate_stable_sets,
    format_set_text,
    is_2_stable,
    parse_set_text,
    reflect,
    rotate,
    stable_count,
    stable_set,
)


def brute_force_stable(n: int, k: int) -> list[tuple[int, ...]]:
    """Independent oracle: filter every k-subset with a local adjacency test."""
    out = []
    for combo in combinations(range(1, n + 1), k):
        ok = all(combo[i + 1] - combo[i] >= 2 for i in range(k - 1))
        if ok and not (combo[0] == 1 and combo[-1] == n):
            out.append(combo)
    return out


def test_is_2_stable_examples():
    assert is_2_stable({1, 3, 5, 7}, CycleParams(10, 4))
    # n=8: the gap between 7 and 1 is still 2 on the cycle
    assert is_2_stable({1, 3, 5, 7}, CycleParams(8, 4))
    assert not is_2_stable({1, 2, 5, 7}, CycleParams(10, 4))
    assert not is_2_stable({1, 3, 5, 10}, CycleParams(10, 4))
    assert is_2_stable({2, 8, 10, 12, 15, 18, 20}, CycleParams(20, 7))


def test_is_2_stable_range_error():
    with pytest.raises(ParameterError):
        is_2_stable({0, 3}, CycleParams(10, 4))
    with pytest.raises(ParameterError):
        is_2_stable({1, 11}, CycleParams(10, 4))


def test_params_validation():
    with pytest.raises(ParameterError):
        CycleParams(65, 7)
    with pytest.raises(ParameterError):
        CycleParams(10, 0)
    with pytest.raises(ParameterError):
        CycleParams(1, 1)
    assert CycleParams(12, 5).r == 2


def test_stable_set_validation():
    p = CycleParams(10, 4)
    with pytest.raises(ParameterError):
        stable_set([1, 3, 5], p)  # wrong size
    with pytest.raises(ParameterError):
        stable_set([1, 2, 5, 7], p)  # consecutive
    with pytest.raises(ParameterError):
        stable_set([1, 3, 5, 12], p)  # out of range
    with pytest.raises(ParameterError):
        stable_set([1, 1, 3, 5], p)  # duplicate
    s = stable_set([7, 1, 5, 3], p)
    assert s.members == (1, 3, 5, 7)


@pytest.mark.parametrize(
    "n,k,expected",
    [(7, 3, 7), (9, 4, 9), (10, 4, 25), (5, 3, 0), (8, 4, 2)],
)
def test_enumeration_counts(n, k, expected):
    vs = enumerate_stable_sets(CycleParams(n, k))
    assert len(vs) == expected
    assert [v.members for v in vs] == brute_force_stable(n, k)


def test_enumeration_is_lexicographic():
    vs = enumerate_stable_sets(CycleParams(12, 4))
    mems = [v.members for v in vs]
    assert mems == sorted(mems)
    assert len(set(mems)) == len(mems)


def test_count_formula_against_brute_force():
    for k in range(1, 6):
        for n in range(2, 15):
            params = CycleParams(n, k)
            brute = len(brute_force_stable(n, k))
            assert stable_count(params) == brute
            assert len(enumerate_stable_sets(params)) == brute


def test_count_formula_closed_form():
    for k in range(2, 8):
        for n in range(2 * k, 27):
            assert stable_count(CycleParams(n, k)) == n * comb(n - k, k) // (n - k)


def test_rotate_examples():
    p = CycleParams(10, 4)
    s = stable_set([1, 3, 5, 7], p)
    assert rotate(s, 0).members == (1, 3, 5, 7)
    assert rotate(s, 1).members == (2, 4, 6, 8)
    assert rotate(s, 9).members == (2, 4, 6, 10)


def test_rotate_composition_and_invariance():
    p = CycleParams(11, 4)
    for s in enumerate_stable_sets(p):
        for a in (1, 3, 7):
            for b in (2, 5, 10):
                assert rotate(rotate(s, a), b) == rotate(s, (a + b) % p.n)
        # rotations and reflections preserve stability (constructor re-checks)
        reflect(rotate(s, 4))


def test_canonical_form_examples():
    p = CycleParams(10, 4)
    assert canonical_form(stable_set([2, 4, 6, 8], p)).members == (1, 3, 5, 7)
    assert canonical_form(stable_set([1, 3, 5, 7], p)).members == (1, 3, 5, 7)


def test_canonical_form_matches_brute_force_orbit_minimum():
    p = CycleParams(12, 5)
    for s in enumerate_stable_sets(p):
        images = [rotate(s, t).members for t in range(p.n)]
        images += [rotate(reflect(s), t).members for t in range(p.n)]
        assert canonical_form(s).members == min(images)


def test_canonical_form_idempotent_and_orbit_constant():
    p = CycleParams(11, 4)
    for s in enumerate_stable_sets(p):
        c = canonical_form(s)
        assert canonical_form(c) == c
        assert canonical_form(rotate(s, 3)) == c
        assert canonical_form(reflect(s)) == c


def test_set_text_parsing():
    assert parse_set_text("1,3,6,8") == (1, 3, 6, 8)
    assert format_set_text([8, 1, 6, 3]) == "1,3,6,8"
    with pytest.raises(ParameterError):
        parse_set_text("3,1,6")
    with pytest.raises(ParameterError):
        parse_set_text("1,3,3,8")
    with pytest.raises(ParameterError):
        parse_set_text("1,3,x")
    with pytest.raises(ParameterError):
        parse_set_text("")
    with pytest.raises(ParameterError):
        parse_set_text("1,3,12", CycleParams(10, 3))
