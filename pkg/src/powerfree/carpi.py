"""Carpi's map from 25-letter words to binary words, its preimages, and the
functional-power automaton that recognises preimages of a regular language.

Letter ``a`` of the 25-letter alphabet stands for the pair
``(H[a // 5], H[a % 5])`` with ``H = [ε, 0, 1, 00, 11]``; the map is
``phi(a w) = left(a) · mu(phi(w)) · right(a)``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .automata import Dfa
from .morphisms import mu, mu_power
from .words import Word, find_overlap

H: Tuple[Word, ...] = ((), (0,), (1,), (0, 0), (1, 1))
ALPHABET = 25


@dataclass(frozen=True)
class CarpiLetter:
    code: int

    def __post_init__(self):
        if not 0 <= self.code < ALPHABET:
            raise ValueError(f"letter code {self.code} outside 0..24")

    @property
    def left(self) -> int:
        return self.code // 5

    @property
    def right(self) -> int:
        return self.code % 5


def letter_of(left: int, right: int) -> CarpiLetter:
    if not (0 <= left < 5 and 0 <= right < 5):
        raise ValueError("H-indices must be in 0..4")
    return CarpiLetter(5 * left + right)


def decompose(a) -> Tuple[Word, Word]:
    """``(left(a), right(a))`` as binary words."""
    letter = a if isinstance(a, CarpiLetter) else CarpiLetter(a)
    return H[letter.left], H[letter.right]


def _check(w: Sequence[int]) -> Word:
    w = tuple(w)
    for a in w:
        if not 0 <= a < ALPHABET:
            raise ValueError(f"letter code {a} outside 0..24")
    return w


def phi(w: Sequence[int]) -> Word:
    w = _check(w)
    out: Word = ()
    for a in reversed(w):
        left, right = H[a // 5], H[a % 5]
        out = left + mu(out) + right
    return out


def phi_split(w: Sequence[int]) -> Tuple[Word, Word]:
    """Left and right halves of ``phi(w)``: images of the left and right parts
    of each letter, the i-th one pushed through ``mu`` i times."""
    w = _check(w)
    first: List[int] = []
    second: Word = ()
    for i, a in enumerate(w):
        first.extend(mu_power(H[a // 5], i))
        second = mu_power(H[a % 5], i) + second
    return tuple(first), second


def phi_length(w: Sequence[int]) -> int:
    return sum(2 ** i * (len(H[a // 5]) + len(H[a % 5])) for i, a in enumerate(_check(w)))


def _mu_preimage(x: Word) -> Optional[Word]:
    if len(x) % 2:
        return None
    out = []
    for j in range(0, len(x), 2):
        pair = x[j:j + 2]
        if pair == (0, 1):
            out.append(0)
        elif pair == (1, 0):
            out.append(1)
        else:
            return None
    return tuple(out)


def invert_phi(x: Sequence[int], max_len: int) -> FrozenSet[Word]:
    """All 25-letter words of length at most ``max_len`` mapping to ``x``."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    return _invert(tuple(x), max_len)


@lru_cache(maxsize=None)
def _invert(x: Word, max_len: int) -> FrozenSet[Word]:
    out = set()
    if not x:
        out.add(())
    if max_len == 0:
        return frozenset(out)
    n = len(x)
    for li, left in enumerate(H):
        if x[:len(left)] != left:
            continue
        for ri, right in enumerate(H):
            if len(left) + len(right) > n or x[n - len(right):] != right:
                continue
            middle = _mu_preimage(x[len(left):n - len(right)])
            if middle is None:
                continue
            a = 5 * li + ri
            for rest in _invert(middle, max_len - 1):
                out.add((a,) + rest)
    return frozenset(out)


def preimage_depth_bound(x: Sequence[int]) -> int:
    """Letters needed to cover ``x``: each letter halves the remaining middle."""
    return math.ceil(math.log2(len(x) + 1)) + 1


# -- functional power construction -------------------------------------------

Endo = Tuple[int, ...]
FuncTuple = Tuple[Endo, Endo, Endo, Endo]


def identity(n: int) -> Endo:
    return tuple(range(n))


def compose(f: Endo, g: Endo) -> Endo:
    """``f ∘ g``: apply ``g`` first."""
    return tuple(f[x] for x in g)


def letter_maps(d: Dfa) -> Tuple[Endo, Endo]:
    if d.alphabet_size != 2:
        raise ValueError("construction requires a binary automaton")
    return (tuple(row[0] for row in d.transitions), tuple(row[1] for row in d.transitions))


def compose_word(zeta: Tuple[Endo, Endo], x: Sequence[int], n: int) -> Endo:
    """``zeta_x``: the maps for the letters of ``x`` with the leftmost applied first."""
    f = identity(n)
    for b in x:
        if b not in (0, 1):
            raise ValueError(f"symbol {b} outside binary alphabet")
        f = compose(zeta[b], f)
    return f


def eta_compose(d: Dfa, x: Sequence[int]) -> Endo:
    """The state map of ``d`` induced by reading ``x``."""
    return compose_word(letter_maps(d), x, d.state_count)


def initial_tuple(d: Dfa) -> FuncTuple:
    eta0, eta1 = letter_maps(d)
    ident = identity(d.state_count)
    return (ident, ident, eta0, eta1)


def psi_step(t: FuncTuple, a: int, n: int) -> FuncTuple:
    kappa, lam, z0, z1 = t
    left, right = H[a // 5], H[a % 5]
    return (compose(compose_word((z0, z1), left, n), kappa),
            compose(lam, compose_word((z0, z1), right, n)),
            compose(z1, z0),
            compose(z0, z1))


def tuple_is_final(d: Dfa, t: FuncTuple) -> bool:
    kappa, lam = t[0], t[1]
    return lam[kappa[d.initial]] in d.finals


class StateBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PsiAutomaton:
    dfa: Dfa
    tuples: Tuple[FuncTuple, ...]


def state_bound(n: int) -> int:
    """Number of 4-tuples of maps on an n-element set."""
    return n ** (4 * n)


def build_psi(d: Dfa, max_states: Optional[int] = 1_000_000) -> PsiAutomaton:
    """Reachable part of the automaton accepting ``{w : phi(w) in L(d)}``.

    States are hash-consed tuples ``[kappa, lambda, zeta0, zeta1]`` of state
    maps of ``d``, discovered from ``[id, id, eta0, eta1]``.
    """
    n = d.state_count
    start = initial_tuple(d)
    index: Dict[FuncTuple, int] = {start: 0}
    order: List[FuncTuple] = [start]
    rows: List[List[int]] = []
    queue = deque([start])
    while queue:
        t = queue.popleft()
        row = []
        for a in range(ALPHABET):
            nxt = psi_step(t, a, n)
            q = index.get(nxt)
            if q is None:
                q = len(order)
                if max_states is not None and q >= max_states:
                    raise StateBudgetExceeded(f"more than {max_states} states")
                index[nxt] = q
                order.append(nxt)
                queue.append(nxt)
            row.append(q)
        rows.append(row)
    finals = {q for q, t in enumerate(order) if tuple_is_final(d, t)}
    return PsiAutomaton(Dfa(len(order), ALPHABET, rows, 0, finals), tuple(order))


def build_psi_dfa(d: Dfa, max_states: Optional[int] = 1_000_000) -> Dfa:
    return build_psi(d, max_states).dfa


def expected_tuple(d: Dfa, w: Sequence[int]) -> FuncTuple:
    """The tuple the construction should reach after reading ``w``."""
    first, second = phi_split(w)
    n = len(w)
    return (eta_compose(d, first), eta_compose(d, second),
            eta_compose(d, mu_power((0,), n)), eta_compose(d, mu_power((1,), n)))


def shortest_overlap_free_via_psi(d: Dfa, max_len: int,
                                  psi: Optional[PsiAutomaton] = None) -> Optional[Tuple[Word, Word]]:
    """Search 25-letter words by length for one accepted by the preimage
    automaton whose image is overlap-free.

    Returns ``(w, phi(w))`` for the shortlex-least such ``w`` of length at most
    ``max_len``, or None.  Both halves of ``phi`` of a prefix are factors of
    ``phi`` of every extension, so prefixes whose halves contain an overlap are
    pruned, as are prefixes in states that cannot reach acceptance.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    psi = psi or build_psi(d)
    pd = psi.dfa
    live = pd.live_states()
    if pd.initial not in live:
        return None
    frontier = [((), pd.initial, (), ())]
    for length in range(max_len + 1):
        for w, q, first, second in frontier:
            if q in pd.finals:
                image = first + second
                if find_overlap(image) is None:
                    return w, image
        if length == max_len:
            break
        nxt = []
        for w, q, first, second in frontier:
            for a in range(ALPHABET):
                r = pd.transitions[q][a]
                if r not in live:
                    continue
                f2 = first + mu_power(H[a // 5], length)
                s2 = mu_power(H[a % 5], length) + second
                if f2 != first and find_overlap(f2) is not None:
                    continue
                if s2 != second and find_overlap(s2) is not None:
                    continue
                nxt.append((w + (a,), r, f2, s2))
        frontier = nxt
    return None
