import pytest
from hypothesis import given, strategies as st

from powerfree.io import parse_word
from powerfree.words import (Constraint, Occurrence, cyc, distinct_conjugates, find_kpower,
                             find_overlap, is_circularly_squarefree, is_free_extension,
                             is_primitive, is_simple_kpower)

from oracles import all_words, is_kpower, kpower_occurrences, overlap_occurrences

W = parse_word


def letters(s):
    return tuple(ord(c) for c in s)


def test_cyc_examples():
    assert cyc(letters("recompute"), 2) == letters("computer")
    assert cyc(letters("richly"), 4) == letters("lyric")
    assert cyc(W("0110"), 0) == W("011")


def test_cyc_full_index_equals_cyc0():
    w = W("012345")
    assert cyc(w, len(w)) == cyc(w, 0)


@pytest.mark.parametrize("w,i", [((), 0), (W("01"), 3), (W("01"), -1)])
def test_cyc_errors(w, i):
    with pytest.raises(ValueError):
        cyc(w, i)


@pytest.mark.parametrize("w,expected", [("010101", False), ("0110", True), ("00", False), ("0", True)])
def test_is_primitive(w, expected):
    assert is_primitive(W(w)) is expected


def test_primitive_matches_bruteforce():
    for w in all_words(3, 7, 1):
        brute = not any(is_kpower(w, k) for k in range(2, len(w) + 1))
        assert is_primitive(w) == brute, w


def test_is_primitive_empty():
    with pytest.raises(ValueError):
        is_primitive(())


def test_distinct_conjugates():
    assert distinct_conjugates(W("0110")) == {W("0110"), W("1100"), W("1001"), W("0011")}
    assert distinct_conjugates(W("0101")) == {W("0101"), W("1010")}
    assert distinct_conjugates(W("000")) == {W("000")}
    with pytest.raises(ValueError):
        distinct_conjugates(())


def test_find_kpower_examples():
    assert find_kpower(W("010101"), 3) == Occurrence(0, 2, 3)
    assert find_kpower(W("0110"), 2) == Occurrence(1, 1, 2)
    assert find_kpower(W("0110100110010110"), 3) is None
    with pytest.raises(ValueError):
        find_kpower(W("0"), 1)


def test_find_overlap_examples():
    occ = find_overlap(W("010101"))
    assert occ == Occurrence(0, 2)
    assert occ.factor(W("010101")) == W("01010")
    assert find_overlap(W("0110")) is None
    assert find_overlap(W("000")) == Occurrence(0, 1)


@pytest.mark.parametrize("k", [2, 3])
def test_find_kpower_matches_bruteforce(k):
    for m, max_len in ((2, 16), (3, 9)):
        for w in all_words(m, max_len):
            occs = kpower_occurrences(w, k)
            got = find_kpower(w, k)
            if not occs:
                assert got is None, w
            else:
                assert (got.start, got.period) == min(occs), w


def test_find_overlap_matches_bruteforce():
    for w in all_words(2, 12):
        occs = overlap_occurrences(w)
        got = find_overlap(w)
        assert (got is None) == (not occs), w
        if occs:
            assert (got.start, got.period) == min(occs)


def test_overlap_free_implies_cube_free():
    for w in all_words(2, 14):
        if find_overlap(w) is None:
            assert find_kpower(w, 3) is None, w


def test_is_free_extension_examples():
    cube = Constraint.kpower(3)
    assert is_free_extension(W("01"), 0, cube)
    # 0101·0 = 01010 is cube-free; the cube (01)^3 needs one more symbol
    assert is_free_extension(W("0101"), 0, cube)
    assert not is_free_extension(W("01010"), 1, cube)
    assert not is_free_extension(W("0101"), 0, Constraint.overlap())
    with pytest.raises(ValueError):
        is_free_extension(W("01"), 2, cube, alphabet_size=2)


@pytest.mark.parametrize("constraint", [Constraint.kpower(2), Constraint.kpower(3), Constraint.overlap()],
                         ids=str)
def test_is_free_extension_matches_recheck(constraint):
    def free(w):
        if constraint.kind == "overlap":
            return not overlap_occurrences(w)
        return not kpower_occurrences(w, constraint.k)

    for w in all_words(2, 11):
        if not free(w):
            continue
        for a in (0, 1):
            assert is_free_extension(w, a, constraint) == free(w + (a,)), (w, a)


def test_is_simple_kpower_examples():
    assert is_simple_kpower(W("010101"), 3)
    assert is_simple_kpower(W("00"), 2)
    assert not is_simple_kpower(W("010010"), 2)
    assert not is_simple_kpower(W("0110"), 2)


def test_is_simple_kpower_matches_definition():
    for k in (2, 3):
        for w in all_words(2, 12, 1):
            brute = is_kpower(w, k) and all(
                not is_kpower(w[s:e], k)
                for s in range(len(w)) for e in range(s + 1, len(w) + 1) if (s, e) != (0, len(w)))
            assert is_simple_kpower(w, k) == brute, (k, w)


def test_circularly_squarefree_examples():
    assert is_circularly_squarefree(W("012"))
    assert not is_circularly_squarefree(W("0101"))
    assert not is_circularly_squarefree(W("010"))
    with pytest.raises(ValueError):
        is_circularly_squarefree(())


def test_constraint_validation():
    with pytest.raises(ValueError):
        Constraint.kpower(1)
    with pytest.raises(ValueError):
        Constraint("square")


@given(st.lists(st.integers(0, 2), min_size=1, max_size=12))
def test_primitive_words_have_full_conjugacy_class(w):
    if is_primitive(w):
        assert len(distinct_conjugates(w)) == len(w)
    else:
        assert len(distinct_conjugates(w)) < len(w)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=20), st.data())
def test_cyc_length(w, data):
    i = data.draw(st.integers(0, len(w)))
    assert len(cyc(w, i)) == len(w) - 1
