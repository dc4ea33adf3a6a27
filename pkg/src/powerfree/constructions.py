"""Builders for long simple k-powers.

``build_w`` produces the recursive family in which each level is made of the
n partial conjugates ``cyc(w_i, j * n**(i-1))`` of the previous level, each
followed by a fresh separator letter.  Every member is a simple k-power, so
``cyc(w_i, 0)`` is k-power-free.
"""
from __future__ import annotations

import itertools
from typing import List, Optional, Sequence

from .morphisms import thue_morse_prefix
from .words import Word, as_word, cyc, find_kpower, is_simple_kpower


def base_alphabet(k: int) -> int:
    """Alphabet size of the base word: ternary for squares, binary otherwise."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return 3 if k == 2 else 2


def find_circularly_squarefree(n: int) -> Optional[Word]:
    """Lexicographically least ternary word of length n whose rotations are all
    square-free, or None when none exists.

    Backtracks over square-free prefixes; a complete candidate is accepted only
    if it also has no square wrapping around the end.
    """
    if n < 1:
        raise ValueError("length must be positive")
    w: List[int] = []

    def suffix_square(buf: List[int]) -> bool:
        m = len(buf)
        for p in range(1, m // 2 + 1):
            if buf[m - 2 * p:m - p] == buf[m - p:]:
                return True
        return False

    def circular_ok() -> bool:
        # squares crossing the seam end inside the second copy's first n-1 symbols
        ww = w + w
        for end in range(n + 1, 2 * n):
            for p in range(1, n // 2 + 1):
                start = end - 2 * p
                if start < 0:
                    break
                if start >= n:
                    continue
                if ww[start:start + p] == ww[start + p:end]:
                    return False
        return True

    def extend() -> bool:
        if len(w) == n:
            return circular_ok()
        for a in range(3):
            w.append(a)
            if not suffix_square(w) and extend():
                return True
            w.pop()
        return False

    return tuple(w) if extend() else None


def base_simple_power(k: int, size_param: int) -> Word:
    """A base simple k-power.

    For k >= 3 this is ``p^k`` with ``p`` the Thue-Morse prefix of length
    ``2**size_param``.  For k == 2 it is ``p^2`` with ``p`` the least circularly
    square-free ternary word of length ``size_param``.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if size_param < 0:
        raise ValueError("size parameter must be non-negative")
    if k >= 3:
        return thue_morse_prefix(2 ** size_param) * k
    p = find_circularly_squarefree(size_param) if size_param >= 1 else None
    if p is None:
        raise ValueError(f"no circularly square-free ternary word of length {size_param}")
    return p * 2


def _require_simple(w1: Word, k: int) -> None:
    if not is_simple_kpower(w1, k):
        raise ValueError(f"base word is not a simple {k}-power")
    m = base_alphabet(k)
    if any(s >= m for s in w1):
        raise ValueError(f"base word for k={k} must be over an alphabet of size {m}")


def separator(k: int, i: int) -> int:
    """The fresh letter appended after each block when building level i + 1."""
    return base_alphabet(k) + i - 1


def _next_level(w: Word, n: int, block: int, sep: Sequence[int]) -> Word:
    sep = tuple(sep)
    out: List[int] = []
    for j in range(n):
        out.extend(cyc(w, j * block))
        out.extend(sep)
    return tuple(out)


def build_w(w1: Sequence[int], k: int, i: int) -> Word:
    """Level ``i`` of the recursive simple k-power family rooted at ``w1``."""
    w1 = as_word(w1)
    if i < 1:
        raise ValueError("level must be >= 1")
    _require_simple(w1, k)
    n = len(w1)
    w = w1
    for level in range(1, i):
        w = _next_level(w, n, n ** (level - 1), (separator(k, level),))
    return w


def build_w_levels(w1: Sequence[int], k: int, i: int) -> List[Word]:
    """``[w_1, ..., w_i]``."""
    return [build_w(w1, k, j) for j in range(1, i + 1)]


def kpower_free_words(alphabet_size: int, k: int):
    """Nonempty k-power-free words in shortlex order."""
    for length in itertools.count(1):
        for w in itertools.product(range(alphabet_size), repeat=length):
            if find_kpower(w, k) is None:
                yield w


def prime_separators(k: int, count: int) -> List[Word]:
    """Separators ``m c_i m`` for the fixed-alphabet family, i = 1..count.

    ``c_i`` runs through the nonempty k-power-free words over the base
    alphabet in shortlex order, so each is a shortest unused one.
    """
    m = base_alphabet(k)
    gen = kpower_free_words(m, k)
    return [(m,) + next(gen) + (m,) for _ in range(count)]


def build_w_prime(w1: Sequence[int], k: int, i: int) -> Word:
    """Level ``i`` of the variant family that stays on an alphabet of size m + 1.

    Blocks are rotations of the previous level by multiples of ``|w'_i| / n``
    (which is ``n**(i-1)`` for the unprimed family).
    """
    w1 = as_word(w1)
    if i < 1:
        raise ValueError("level must be >= 1")
    _require_simple(w1, k)
    n = len(w1)
    seps = prime_separators(k, i - 1)
    w = w1
    for level in range(1, i):
        w = _next_level(w, n, len(w) // n, seps[level - 1])
    return w


def simple_overlap_from_square(s: Sequence[int]) -> Word:
    """Extend a simple square ``axax`` to the simple overlap ``axaxa``."""
    s = as_word(s)
    if not is_simple_kpower(s, 2):
        raise ValueError("input is not a simple square")
    return s + s[:1]
