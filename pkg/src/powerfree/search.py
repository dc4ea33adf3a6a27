"""Exact searches for the shortest repetition-free word accepted by a DFA.

The repetition-free languages are not regular, so search nodes are full
(word, state) pairs and are never merged by state alone.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .automata import Dfa
from .words import Constraint, Word, has_suffix_repetition

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchResult:
    word: Optional[Word]
    max_len: int
    explored: int
    levels: Tuple[int, ...]

    @property
    def found(self) -> bool:
        return self.word is not None


def _children(frontier, d, constraint, live):
    nxt = []
    for w, q in frontier:
        row = d.transitions[q]
        for a in range(d.alphabet_size):
            r = row[a]
            if r not in live:
                continue
            v = w + (a,)
            if not has_suffix_repetition(v, constraint):
                nxt.append((v, r))
    return nxt


def search_shortest_free(d: Dfa, constraint: Constraint, max_len: int,
                         threads: int = 1) -> SearchResult:
    """Level-order search returning the shortlex-least constraint-free accepted
    word of length at most ``max_len``.

    Nodes whose state cannot reach a final state are pruned.  With
    ``threads > 1`` each level is expanded in chunks by a thread pool and
    concatenated in chunk order, which reproduces the sequential order.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    live = d.live_states()
    levels: List[int] = []
    explored = 0
    frontier = [((), d.initial)] if d.initial in live else []
    pool = None
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        pool = ThreadPoolExecutor(threads)
    try:
        for length in range(max_len + 1):
            levels.append(len(frontier))
            explored += len(frontier)
            log.debug("level %d frontier %d", length, len(frontier))
            for w, q in frontier:
                if q in d.finals:
                    return SearchResult(w, max_len, explored, tuple(levels))
            if not frontier or length == max_len:
                break
            if pool is not None and len(frontier) > 64:
                size = -(-len(frontier) // threads)
                chunks = [frontier[j:j + size] for j in range(0, len(frontier), size)]
                parts = pool.map(lambda ch: _children(ch, d, constraint, live), chunks)
                frontier = [node for part in parts for node in part]
            else:
                frontier = _children(frontier, d, constraint, live)
    finally:
        if pool is not None:
            pool.shutdown()
    return SearchResult(None, max_len, explored, tuple(levels))


def shortest_free_accepted(d: Dfa, constraint: Constraint, max_len: int,
                           threads: int = 1) -> Optional[Word]:
    return search_shortest_free(d, constraint, max_len, threads).word


def iter_free(alphabet_size: int, constraint: Constraint, length: int) -> Iterator[Word]:
    """All constraint-free words of exactly ``length``, in lexicographic order."""
    def extend(w):
        if len(w) == length:
            yield w
            return
        for a in range(alphabet_size):
            v = w + (a,)
            if not has_suffix_repetition(v, constraint):
                yield from extend(v)

    yield from extend(())


def enumerate_free(alphabet_size: int, constraint: Constraint, length: int) -> int:
    return sum(1 for _ in iter_free(alphabet_size, constraint, length))
