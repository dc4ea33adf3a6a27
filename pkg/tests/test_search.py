import random

import pytest

from powerfree.automata import build_Di, random_dfa, universal_dfa, word_dfa
from powerfree.constructions import build_w
from powerfree.io import parse_word as W
from powerfree.search import enumerate_free, iter_free, search_shortest_free, shortest_free_accepted
from powerfree.words import Constraint, cyc, find_kpower, find_overlap

from oracles import all_words, kpower_occurrences, naive_shortest_free_accepted, overlap_occurrences

CUBE = Constraint.kpower(3)
W1 = W("010101")


def test_enumerate_free_examples():
    assert enumerate_free(2, Constraint.overlap(), 3) == 6
    assert enumerate_free(2, Constraint.kpower(2), 2) == 2
    assert enumerate_free(3, Constraint.kpower(2), 3) == 12


@pytest.mark.parametrize("m,constraint,n", [
    (2, Constraint.overlap(), 10), (2, CUBE, 10), (3, Constraint.kpower(2), 7)], ids=str)
def test_enumerate_free_matches_filter(m, constraint, n):
    def free(w):
        if constraint.kind == "overlap":
            return not overlap_occurrences(w)
        return not kpower_occurrences(w, constraint.k)

    expected = [w for w in all_words(m, n, n) if free(w)]
    assert list(iter_free(m, constraint, n)) == expected
    assert enumerate_free(m, constraint, n) == len(expected)


def test_search_examples():
    d2 = build_Di(W1, 3, 2)
    got = shortest_free_accepted(d2, CUBE, 40)
    assert got == cyc(build_w(W1, 3, 2), 0) and len(got) == 35
    assert shortest_free_accepted(universal_dfa(2), CUBE, 5) == ()
    assert shortest_free_accepted(word_dfa([W("000")], 2), CUBE, 10) is None


def test_search_result_reports_levels():
    res = search_shortest_free(build_Di(W1, 3, 1), CUBE, 6)
    assert res.found and res.word == W("01010")
    assert res.levels == (1, 1, 1, 1, 1, 1)
    none = search_shortest_free(word_dfa([W("000")], 2), CUBE, 10)
    assert not none.found and none.max_len == 10


@pytest.mark.parametrize("constraint", [CUBE, Constraint.kpower(2), Constraint.overlap()], ids=str)
def test_search_matches_naive_oracle(constraint):
    rng = random.Random(17)

    def free(w):
        if constraint.kind == "overlap":
            return not overlap_occurrences(w)
        return not kpower_occurrences(w, constraint.k)

    for trial in range(100):
        m = rng.choice([2, 3])
        d = random_dfa(rng.randint(1, 6), m, rng, final_prob=0.25)
        max_len = 12 if m == 2 else 8
        got = shortest_free_accepted(d, constraint, max_len)
        assert got == naive_shortest_free_accepted(d, free, max_len), trial
        if got is not None:
            assert free(got) and d.run(got) in d.finals


def test_threads_give_identical_results():
    rng = random.Random(3)
    for _ in range(10):
        d = random_dfa(5, 3, rng, final_prob=0.1)
        a = search_shortest_free(d, Constraint.kpower(2), 14)
        b = search_shortest_free(d, Constraint.kpower(2), 14, threads=4)
        assert a == b
    d3 = build_Di(W1, 3, 2)
    assert shortest_free_accepted(d3, CUBE, 35, threads=3) == shortest_free_accepted(d3, CUBE, 35)


def test_returned_words_are_free():
    d = build_Di(W("012012"), 2, 2)
    w = shortest_free_accepted(d, Constraint.kpower(2), 36)
    assert w == cyc(build_w(W("012012"), 2, 2), 0)
    assert find_kpower(w, 2) is None
    assert find_overlap(W("0110")) is None


def test_max_len_validation():
    with pytest.raises(ValueError):
        shortest_free_accepted(universal_dfa(2), CUBE, -1)


def test_level3_has_shorter_cube_free_word():
    # found by the exact search on D_3; shorter than cyc_0(w_3), which has length 215
    w = W("010102101012010102101012010102101021010120101021010120101021010210101201010")
    d3 = build_Di(W1, 3, 3)
    assert len(w) == 75
    assert d3.run(w) in d3.finals
    assert not kpower_occurrences(w, 3)
    assert len(cyc(build_w(W1, 3, 3), 0)) == 215
