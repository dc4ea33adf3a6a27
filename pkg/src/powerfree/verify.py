"""Property suites: each check enumerates instances and counts counterexamples.

The suites back ``powerfree verify`` and the acceptance tests.  A check
returns a :class:`PropertyResult`; the first few counterexamples are kept
for the report.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import automata, carpi, constructions, morphisms, search, words
from .words import Constraint, Word, cyc, find_kpower, find_overlap, is_simple_kpower

BASE_W1: Word = (0, 1) * 3


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    counterexamples: int = 0
    examples: List[str] = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.counterexamples == 0

    def fail(self, detail) -> None:
        self.counterexamples += 1
        if len(self.examples) < 5:
            self.examples.append(str(detail))

    def check(self, cond: bool, detail) -> None:
        self.instances += 1
        if not cond:
            self.fail(detail)

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        out = (f"{self.name}\tinstances={self.instances}\t"
               f"counterexamples={self.counterexamples}\t{status}\t{self.seconds:.2f}s")
        if self.note:
            out += f"\t{self.note}"
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def all_words(alphabet_size: int, max_len: int, min_len: int = 0) -> Iterable[Word]:
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(alphabet_size), repeat=n)


# -- corpora -------------------------------------------------------------------

def all_circularly_squarefree(n: int) -> List[Word]:
    """Every ternary word of length n whose rotations are square-free."""
    out = []
    for w in search.iter_free(3, Constraint.kpower(2), n):
        if words.is_circularly_squarefree(w):
            out.append(w)
    return out


def simple_power_corpus(k: int, max_len: int = 36) -> List[Word]:
    """Simple k-powers of length <= max_len: an exhaustive set for short roots
    plus the constructed families."""
    corpus = set()
    if k == 2:
        for n in range(1, min(max_len // 2, 9) + 1):
            for p in all_circularly_squarefree(n):
                corpus.add(p * 2)
        for n in range(1, max_len // 2 + 1):
            p = constructions.find_circularly_squarefree(n)
            if p is not None:
                corpus.add(p * 2)
    else:
        for n in range(1, min(max_len // k, 6) + 1):
            for p in itertools.product(range(2), repeat=n):
                if is_simple_kpower(p * k, k):
                    corpus.add(p * k)
        n = 0
        while k * 2 ** n <= max_len:
            corpus.add(morphisms.thue_morse_prefix(2 ** n) * k)
            n += 1
    for w1 in list(corpus):
        if len(w1) ** 2 <= max_len:
            corpus.add(constructions.build_w(w1, k, 2))
    return sorted(corpus, key=lambda w: (len(w), w))


# -- word-level lemmas -------------------------------------------------------

@_timed
def check_primitive_conjugates(max_len: int = 12) -> PropertyResult:
    """A primitive word of length n has exactly n distinct conjugates."""
    res = PropertyResult("primitive_conjugates")
    for m in (2, 3):
        for w in all_words(m, max_len, 1):
            if words.is_primitive(w):
                res.check(len(words.distinct_conjugates(w)) == len(w), w)
    return res


@_timed
def check_partial_conjugates(max_len: int = 36) -> PropertyResult:
    """Partial conjugates of a simple k-power p^k coincide exactly when their
    indices agree modulo |p|."""
    res = PropertyResult("partial_conjugates")
    for k in (2, 3):
        for w in simple_power_corpus(k, max_len):
            n = len(w)
            period = n // k
            cycs = [cyc(w, i) for i in range(n + 1)]
            first_index: Dict[Word, int] = {}
            for i, c in enumerate(cycs):
                first_index.setdefault(c, i)
            ok = all(first_index[c] == i % period for i, c in enumerate(cycs))
            res.check(ok, (k, w))
    return res


@_timed
def check_conjugates_simple(max_len: int = 36) -> PropertyResult:
    """Every conjugate of a simple k-power is a simple k-power."""
    res = PropertyResult("conjugates_simple")
    for k in (2, 3):
        for w in simple_power_corpus(k, max_len):
            for r in set(words.rotations(w)):
                res.check(is_simple_kpower(r, k), (k, w, r))
    return res


@_timed
def check_partial_conjugates_free(max_len: int = 36) -> PropertyResult:
    """Every partial conjugate of a simple k-power is k-power-free."""
    res = PropertyResult("partial_conjugates_free")
    for k in (2, 3):
        for w in simple_power_corpus(k, max_len):
            for i in range(len(w) + 1):
                res.check(find_kpower(cyc(w, i), k) is None, (k, w, i))
    return res


@_timed
def check_thue_morse_powers(max_n: int = 5) -> PropertyResult:
    """(t[0..2^n-1])^k is a simple k-power for k in {3, 4}."""
    res = PropertyResult("thue_morse_simple_powers")
    for n in range(max_n + 1):
        p = morphisms.thue_morse_prefix(2 ** n)
        for k in (3, 4):
            res.check(is_simple_kpower(p * k, k), (n, k))
    return res


def brute_circularly_squarefree(n: int) -> Optional[Word]:
    """Least ternary word of length n with all rotations square-free, by
    enumerating every candidate in lexicographic order."""
    for w in itertools.product(range(3), repeat=n):
        if words.is_circularly_squarefree(w):
            return w
    return None


@_timed
def check_circularly_squarefree(lo: int = 18, hi: int = 24, exhaustive_max: int = 12) -> PropertyResult:
    """Witnesses exist for lo..hi and their squares are simple; the search
    agrees with brute force on 1..exhaustive_max."""
    res = PropertyResult("circularly_squarefree")
    for n in range(lo, hi + 1):
        p = constructions.find_circularly_squarefree(n)
        res.check(p is not None and len(p) == n and words.is_circularly_squarefree(p)
                  and is_simple_kpower(p * 2, 2), n)
    for n in range(1, exhaustive_max + 1):
        res.check(constructions.find_circularly_squarefree(n) == brute_circularly_squarefree(n), n)
    return res


@_timed
def check_family_simple(max_i: int = 3, w1: Word = BASE_W1, k: int = 3) -> PropertyResult:
    """Each level w_i is a simple k-power of length n^i over m + i - 1 letters,
    and cyc(w_i, 0) is k-power-free."""
    res = PropertyResult("family_simple")
    n = len(w1)
    m = constructions.base_alphabet(k)
    for i in range(1, max_i + 1):
        w = constructions.build_w(w1, k, i)
        res.check(len(w) == n ** i, ("length", i))
        res.check(set(w) == set(range(m + i - 1)), ("alphabet", i))
        res.check(is_simple_kpower(w, k), ("simple", i))
        res.check(find_kpower(cyc(w, 0), k) is None, ("cyc0 free", i))
    return res


@_timed
def check_mu_preservation(overlap_len: int = 12, power_len: int = 10, prefix_len: int = 1024) -> PropertyResult:
    """mu keeps overlap-free words overlap-free, k-power-free words k-power-free
    for k in {3, 4}, and doubles Thue-Morse prefixes."""
    res = PropertyResult("mu_preservation")
    for w in all_words(2, overlap_len):
        if find_overlap(w) is None:
            res.check(find_overlap(morphisms.mu(w)) is None, ("overlap", w))
    for k in (3, 4):
        for w in all_words(2, power_len):
            if find_kpower(w, k) is None:
                res.check(find_kpower(morphisms.mu(w), k) is None, (k, w))
    t = morphisms.thue_morse_prefix(2 * prefix_len)
    for n in range(1, prefix_len + 1):
        res.check(morphisms.mu(t[:n]) == t[:2 * n], ("prefix", n))
    return res


# -- the automaton family ----------------------------------------------------

@_timed
def check_state_counts(max_i: int = 5, w1: Word = BASE_W1, k: int = 3) -> PropertyResult:
    """D_i has 2^(i-1)(n-1)+2 states and exactly one final state."""
    res = PropertyResult("state_counts")
    n = len(w1)
    for i in range(1, max_i + 1):
        d = automata.build_Di(w1, k, i)
        res.check(d.state_count == automata.expected_Di_states(n, i), ("states", i, d.state_count))
        res.check(len(d.finals) == 1, ("finals", i))
    return res


@_timed
def check_unique_predecessors(max_i: int = 4, w1: Word = BASE_W1, k: int = 3) -> PropertyResult:
    """For i >= 2 and 1 <= j < n, exactly one state of D_i moves to q_(1,j) on a_(i-1)."""
    res = PropertyResult("unique_predecessors")
    n = len(w1)
    for i in range(2, max_i + 1):
        d = automata.build_Di(w1, k, i)
        letter = automata._letter(k, w1, i - 1)
        for j in range(1, n):
            target = d.state_of((1, j))
            preds = [q for q in range(d.state_count) if d.transitions[q][letter] == target]
            res.check(len(preds) == 1, (i, j, len(preds)))
    return res


@_timed
def check_witness_accepted(max_i: int = 4, w1: Word = BASE_W1, k: int = 3) -> PropertyResult:
    """D_i accepts cyc(w_i, 0)."""
    res = PropertyResult("witness_accepted")
    for i in range(1, max_i + 1):
        d = automata.build_Di(w1, k, i)
        res.check(automata.accepts(d, cyc(constructions.build_w(w1, k, i), 0)), i)
    return res


@_timed
def check_shortest_witness(levels=(1, 2), w1: Word = BASE_W1, k: int = 3) -> PropertyResult:
    """The exact search returns cyc(w_i, 0) as the shortest k-power-free word
    accepted by D_i."""
    res = PropertyResult("shortest_witness")
    n = len(w1)
    found = []
    for i in levels:
        d = automata.build_Di(w1, k, i)
        expected = cyc(constructions.build_w(w1, k, i), 0)
        got = search.shortest_free_accepted(d, Constraint.kpower(k), n ** i)
        found.append(f"i={i}:{len(got) if got is not None else None}")
        res.check(got == expected, (i, None if got is None else len(got)))
    res.note = " ".join(found)
    return res


def growth_table(max_i: int = 4, w1: Word = BASE_W1, k: int = 3) -> List[Tuple[int, int, int, float]]:
    """Rows ``(i, N_i, |cyc(w_i, 0)|, log|w| / (log N_i)^2)``."""
    rows = []
    for i in range(1, max_i + 1):
        d = automata.build_Di(w1, k, i)
        length = len(cyc(constructions.build_w(w1, k, i), 0))
        ratio = math.log2(length) / math.log2(d.state_count) ** 2
        rows.append((i, d.state_count, length, ratio))
    return rows


@_timed
def check_growth_identities(max_i: int = 4, w1: Word = BASE_W1, k: int = 3) -> PropertyResult:
    res = PropertyResult("growth_identities")
    n = len(w1)
    for i, states, length, _ in growth_table(max_i, w1, k):
        res.check(states == automata.expected_Di_states(n, i), ("states", i))
        res.check(length == n ** i - 1, ("length", i))
    return res


# -- Carpi's construction ----------------------------------------------------

def carpi_words(max_len: int = 3) -> Iterable[Word]:
    return all_words(carpi.ALPHABET, max_len)


@_timed
def check_psi_simulation(dfa_count: int = 25, max_len: int = 3, seed: int = 7) -> PropertyResult:
    """For random binary DFAs with 1-3 states the preimage automaton accepts w
    iff the DFA accepts phi(w), its reached tuple has the predicted form, and
    its size stays within N^(4N)."""
    res = PropertyResult("psi_simulation")
    rng = random.Random(seed)
    images = {w: carpi.phi_split(w) for w in carpi_words(max_len)}
    for idx in range(dfa_count):
        n = 1 + idx % 3
        d = automata.random_dfa(n, 2, rng)
        psi = carpi.build_psi(d)
        pd = psi.dfa
        res.check(pd.state_count <= carpi.state_bound(n), ("bound", idx, pd.state_count))
        eta = carpi.letter_maps(d)
        mu_maps = [(carpi.compose_word(eta, morphisms.mu_power((0,), j), n),
                    carpi.compose_word(eta, morphisms.mu_power((1,), j), n))
                   for j in range(max_len + 1)]
        for w, (first, second) in images.items():
            q = pd.run(w)
            image = first + second
            res.check((q in pd.finals) == automata.accepts(d, image), ("accept", idx, w))
            predicted = (carpi.compose_word(eta, first, n), carpi.compose_word(eta, second, n),
                         *mu_maps[len(w)])
            res.check(psi.tuples[q] == predicted, ("tuple", idx, w))
    return res


@_timed
def check_phi_laws(samples: int = 10_000, max_len: int = 5, seed: int = 11) -> PropertyResult:
    """phi(w) = first·second, the length formula, and |phi(w)| <= 4(2^|w| - 1)."""
    res = PropertyResult("phi_laws")
    rng = random.Random(seed)
    for _ in range(samples):
        w = tuple(rng.randrange(carpi.ALPHABET) for _ in range(rng.randint(0, max_len)))
        image = carpi.phi(w)
        first, second = carpi.phi_split(w)
        res.check(image == first + second, ("split", w))
        res.check(len(image) == carpi.phi_length(w), ("length", w))
        res.check(len(image) <= 4 * (2 ** len(w) - 1), ("growth", w))
    return res


@_timed
def check_psi_nonempty(max_len: int = 16) -> PropertyResult:
    """Every overlap-free binary word has a preimage within the depth bound."""
    res = PropertyResult("psi_nonempty")
    for n in range(max_len + 1):
        for x in search.iter_free(2, Constraint.overlap(), n):
            pre = carpi.invert_phi(x, carpi.preimage_depth_bound(x))
            res.check(bool(pre) and all(carpi.phi(w) == x for w in pre), x)
    return res


@_timed
def check_eta_composition(max_len: int = 4, seed: int = 3) -> PropertyResult:
    """eta(x·y) = eta(y) ∘ eta(x)."""
    res = PropertyResult("eta_composition")
    rng = random.Random(seed)
    for n in (1, 2, 3):
        d = automata.random_dfa(n, 2, rng)
        for x in all_words(2, max_len):
            for y in all_words(2, max_len):
                lhs = carpi.eta_compose(d, x + y)
                rhs = carpi.compose(carpi.eta_compose(d, y), carpi.eta_compose(d, x))
                res.check(lhs == rhs, (n, x, y))
    return res


# -- suites ------------------------------------------------------------------

def lemma_checks(max_len: int = 12) -> List[Callable[[], PropertyResult]]:
    return [
        lambda: check_primitive_conjugates(max_len),
        lambda: check_partial_conjugates(36),
        lambda: check_conjugates_simple(36),
        lambda: check_partial_conjugates_free(36),
        lambda: check_thue_morse_powers(5),
        lambda: check_circularly_squarefree(18, 24, max_len),
        lambda: check_family_simple(3),
        lambda: check_mu_preservation(max_len, min(max_len, 10), 1024),
    ]


def theorem7_checks(long: bool = False) -> List[Callable[[], PropertyResult]]:
    return [
        lambda: check_state_counts(5),
        lambda: check_unique_predecessors(4),
        lambda: check_witness_accepted(4),
        lambda: check_shortest_witness((1, 2, 3) if long else (1, 2)),
        lambda: check_growth_identities(4),
    ]


def carpi_checks() -> List[Callable[[], PropertyResult]]:
    return [
        lambda: check_psi_simulation(),
        lambda: check_phi_laws(),
        lambda: check_psi_nonempty(),
        lambda: check_eta_composition(),
    ]


SUITES = ("lemmas", "theorem7", "carpi", "all")


def run_suite(name: str, max_len: int = 12, long: bool = False) -> List[PropertyResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    checks: List[Callable[[], PropertyResult]] = []
    if name in ("lemmas", "all"):
        checks += lemma_checks(max_len)
    if name in ("theorem7", "all"):
        checks += theorem7_checks(long)
    if name in ("carpi", "all"):
        checks += carpi_checks()
    return [c() for c in checks]
