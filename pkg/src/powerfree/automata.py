"""Deterministic finite automata with total transition tables.

Besides the generic operations (acceptance, shortest accepted word, product,
JSON and Graphviz output) this module generates the lower-bound family
``D_i``: automata with ``2**(i-1) * (n-1) + 2`` states that accept the
k-power-free word ``cyc(w_i, 0)`` of length ``n**i - 1``.  Whether that word is
also the shortest k-power-free one accepted is left to the exact search in
:mod:`powerfree.search`; for ``w_1 = (01)^3`` it holds for i <= 2 and fails at
i = 3, where a cube-free word of length 75 is accepted.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .constructions import _require_simple, base_alphabet, separator
from .words import Word, as_word

StateLabel = Tuple[int, ...]


class ConstructionError(RuntimeError):
    """The recursive automaton definition produced an inconsistent table."""


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet_size: int
    transitions: Tuple[Tuple[int, ...], ...]
    initial: int = 0
    finals: FrozenSet[int] = frozenset()
    dead: Optional[int] = None
    labels: Optional[Tuple[Optional[StateLabel], ...]] = field(
        default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(tuple(row) for row in self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.state_count < 1:
            raise ValueError("a DFA needs at least one state")
        if self.alphabet_size < 1:
            raise ValueError("alphabet must be nonempty")
        if len(self.transitions) != self.state_count:
            raise ValueError(f"expected {self.state_count} transition rows, got {len(self.transitions)}")
        for q, row in enumerate(self.transitions):
            if len(row) != self.alphabet_size:
                raise ValueError(f"row {q} has {len(row)} entries, expected {self.alphabet_size}")
            for r in row:
                if not 0 <= r < self.state_count:
                    raise ValueError(f"transition target {r} out of range in row {q}")
        if not 0 <= self.initial < self.state_count:
            raise ValueError(f"initial state {self.initial} out of range")
        for f in self.finals:
            if not 0 <= f < self.state_count:
                raise ValueError(f"final state {f} out of range")
        if self.dead is not None:
            if not 0 <= self.dead < self.state_count:
                raise ValueError(f"dead state {self.dead} out of range")
            if self.dead in self.finals:
                raise ValueError("dead state cannot be final")
            if any(r != self.dead for r in self.transitions[self.dead]):
                raise ValueError("dead state must loop to itself on every symbol")
        if self.labels is not None and len(self.labels) != self.state_count:
            raise ValueError("one label per state required")

    def step(self, q: int, a: int) -> int:
        if not 0 <= a < self.alphabet_size:
            raise ValueError(f"symbol {a} outside alphabet of size {self.alphabet_size}")
        return self.transitions[q][a]

    def run(self, w: Sequence[int], start: Optional[int] = None) -> int:
        q = self.initial if start is None else start
        for a in w:
            q = self.step(q, a)
        return q

    def state_of(self, label: StateLabel) -> int:
        if self.labels is None:
            raise ValueError("automaton carries no state labels")
        return self.labels.index(tuple(label))

    def live_states(self) -> FrozenSet[int]:
        """States from which some final state is reachable."""
        preds: List[List[int]] = [[] for _ in range(self.state_count)]
        for q, row in enumerate(self.transitions):
            for r in row:
                preds[r].append(q)
        live = set(self.finals)
        todo = list(self.finals)
        while todo:
            r = todo.pop()
            for q in preds[r]:
                if q not in live:
                    live.add(q)
                    todo.append(q)
        return frozenset(live)


def accepts(d: Dfa, w: Sequence[int]) -> bool:
    return d.run(w) in d.finals


def shortest_accepted(d: Dfa) -> Optional[Word]:
    """Shortlex-least accepted word, or None if the language is empty.

    Breadth-first over states with symbols tried in increasing order, so the
    first visit of each state is along its shortlex-least word.
    """
    parent: Dict[int, Tuple[int, int]] = {d.initial: (-1, -1)}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        if q in d.finals:
            out = []
            while parent[q][0] != -1:
                q, a = parent[q]
                out.append(a)
            return tuple(reversed(out))
        for a in range(d.alphabet_size):
            r = d.transitions[q][a]
            if r not in parent:
                parent[r] = (q, a)
                queue.append(r)
    return None


def product_intersection(d1: Dfa, d2: Dfa) -> Dfa:
    """Reachable part of the product automaton accepting ``L(d1) & L(d2)``."""
    if d1.alphabet_size != d2.alphabet_size:
        raise ValueError("alphabet sizes differ")
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    rows: List[List[int]] = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for a in range(d1.alphabet_size):
            nxt = (d1.transitions[p][a], d2.transitions[q][a])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        rows.append(row)
        i += 1
    finals = {index[pq] for pq in order if pq[0] in d1.finals and pq[1] in d2.finals}
    dead = None
    if d1.dead is not None and d2.dead is not None:
        dead = index.get((d1.dead, d2.dead))
    return Dfa(len(order), d1.alphabet_size, rows, 0, finals, dead)


def universal_dfa(alphabet_size: int) -> Dfa:
    return Dfa(1, alphabet_size, [[0] * alphabet_size], 0, {0})


def empty_dfa(alphabet_size: int) -> Dfa:
    return Dfa(1, alphabet_size, [[0] * alphabet_size], 0, set(), 0)


def word_dfa(words: Sequence[Sequence[int]], alphabet_size: int) -> Dfa:
    """Trie automaton accepting exactly the given finite set of words."""
    trie: Dict[Word, int] = {(): 0}
    for w in words:
        w = as_word(w)
        for j in range(1, len(w) + 1):
            trie.setdefault(w[:j], len(trie))
    dead = len(trie)
    rows = [[dead] * alphabet_size for _ in range(dead + 1)]
    for prefix, q in trie.items():
        if prefix:
            rows[trie[prefix[:-1]]][prefix[-1]] = q
    finals = {trie[as_word(w)] for w in words}
    return Dfa(dead + 1, alphabet_size, rows, 0, finals, dead)


# -- serialization -----------------------------------------------------------

def to_dict(d: Dfa) -> dict:
    return {
        "alphabet": d.alphabet_size,
        "states": d.state_count,
        "initial": d.initial,
        "finals": sorted(d.finals),
        "dead": d.dead,
        "transitions": [list(row) for row in d.transitions],
    }


def to_json(d: Dfa) -> str:
    return json.dumps(to_dict(d))


def from_dict(doc: dict) -> Dfa:
    if not isinstance(doc, dict):
        raise ValueError("DFA document must be a JSON object")
    for key in ("alphabet", "states", "initial", "finals", "dead", "transitions"):
        if key not in doc:
            raise ValueError(f"missing field {key!r}")
    for key in ("alphabet", "states", "initial"):
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise ValueError(f"field {key!r} must be an integer")
    if doc["dead"] is not None and not isinstance(doc["dead"], int):
        raise ValueError("field 'dead' must be an integer or null")
    if not isinstance(doc["finals"], list) or not all(isinstance(f, int) for f in doc["finals"]):
        raise ValueError("field 'finals' must be an integer array")
    rows = doc["transitions"]
    if not isinstance(rows, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows):
        raise ValueError("field 'transitions' must be an array of integer arrays")
    return Dfa(doc["states"], doc["alphabet"], rows, doc["initial"], doc["finals"], doc["dead"])


def from_json(text: str) -> Dfa:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed DFA document: {exc}") from None
    return from_dict(doc)


def format_label(label: Optional[StateLabel]) -> str:
    if label is None:
        return "q_d"
    return "q_{" + ",".join(str(x) for x in label) + "}"


def to_dot(d: Dfa, labels: Optional[Sequence[Optional[StateLabel]]] = None,
           hide_dead: bool = True) -> str:
    """Graphviz rendering; edges sharing endpoints are merged into one label."""
    if labels is None:
        labels = d.labels

    def name(q):
        return format_label(labels[q]) if labels is not None else f"s{q}"

    def sym(a):
        return str(a)

    skip = d.dead if hide_dead else None
    lines = ["digraph {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(d.state_count):
        if q == skip:
            continue
        shape = "doublecircle" if q in d.finals else "circle"
        lines.append(f'  "{name(q)}" [shape={shape}];')
    lines.append(f'  __start -> "{name(d.initial)}";')
    for q in range(d.state_count):
        if q == skip:
            continue
        edges: Dict[int, List[int]] = {}
        for a, r in enumerate(d.transitions[q]):
            if r != skip:
                edges.setdefault(r, []).append(a)
        for r, syms in edges.items():
            lines.append(f'  "{name(q)}" -> "{name(r)}" [label="{",".join(map(sym, syms))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- the lower-bound family --------------------------------------------------

def _letter(k: int, w1: Word, j: int) -> int:
    # a_0 is the last letter of w1; a_j for j >= 1 is the j-th fresh letter
    return w1[-1] if j == 0 else separator(k, j)


def build_Di(w1: Sequence[int], k: int, i: int) -> Dfa:
    """The automaton ``D_i`` for base simple k-power ``w1``.

    States are labelled by integer sequences; ids follow (length, lexicographic)
    label order, with the dead state last (its label is ``None``).
    """
    w1 = as_word(w1)
    if i < 1:
        raise ValueError("level must be >= 1")
    _require_simple(w1, k)
    n = len(w1)
    m = base_alphabet(k)

    states: List[StateLabel] = [(1, j) for j in range(n)]
    delta: Dict[Tuple[StateLabel, int], StateLabel] = {
        ((1, j), w1[j]): (1, j + 1) for j in range(n - 1)}
    final: StateLabel = (1, n - 1)

    for level in range(1, i):
        a_new = _letter(k, w1, level)
        a_prev = _letter(k, w1, level - 1)
        alphabet = m + level - 1  # alphabet of the automaton being extended
        alive = [t for t in states if t != final]
        alive_set = set(alive)
        copy = {t: (level + 1,) + t for t in alive}

        finals = [(level + 1,) + t for t in alive
                  if t[0] == level and any(delta.get((t, c)) == (1, n - 1) for c in range(alphabet))]
        if len(finals) != 1:
            raise ConstructionError(f"level {level + 1}: expected one final state, got {finals}")
        new_final = finals[0]

        new_delta = dict(delta)
        for (t, c), s in delta.items():
            if t in alive_set and s in alive_set:
                new_delta[(copy[t], c)] = copy[s]
        if (final, a_prev) in delta:
            raise ConstructionError(f"level {level + 1}: final state already moves on {a_prev}")
        new_delta[(final, a_new)] = (1, 1)
        new_delta[(final, a_prev)] = copy[(1, 0)]
        if level == 1:
            for j in range(n - 2):
                new_delta[((2, 1, j), a_new)] = (1, j + 2)
        else:
            for t in alive:
                if copy[t] == new_final:
                    continue
                target = delta.get((t, a_prev))
                if target is not None and target[0] == 1 and len(target) == 2:
                    j = target[1]
                    if j + 1 >= n:
                        raise ConstructionError(
                            f"level {level + 1}: transition from {copy[t]} would target q_(1,{j + 1})")
                    new_delta[(copy[t], a_new)] = (1, j + 1)

        states = states + [copy[t] for t in alive]
        delta = new_delta
        final = new_final

    alphabet = m + i - 1
    order = sorted(states, key=lambda t: (len(t), t))
    ids = {t: q for q, t in enumerate(order)}
    dead = len(order)
    rows = [[dead] * alphabet for _ in range(dead + 1)]
    for (t, c), s in delta.items():
        rows[ids[t]][c] = ids[s]
    labels = tuple(order) + (None,)
    return Dfa(dead + 1, alphabet, rows, ids[(1, 0)], {ids[final]}, dead, labels)


def expected_Di_states(n: int, i: int) -> int:
    return 2 ** (i - 1) * (n - 1) + 2


def random_dfa(state_count: int, alphabet_size: int, rng, final_prob: float = 0.4) -> Dfa:
    """Uniformly random transition table; ``rng`` is a :class:`random.Random`."""
    rows = [[rng.randrange(state_count) for _ in range(alphabet_size)]
            for _ in range(state_count)]
    finals = {q for q in range(state_count) if rng.random() < final_prob}
    return Dfa(state_count, alphabet_size, rows, rng.randrange(state_count), finals)
