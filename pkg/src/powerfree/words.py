"""Word algebra: partial conjugates, primitivity, and repetition detectors.

Words are plain tuples of non-negative integer symbols.  Any sequence of ints
is accepted as input; results are always returned as tuples so they can be
hashed, compared and sliced cheaply.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

Word = Tuple[int, ...]

KPOWER = "kpower"
OVERLAP = "overlap"


@dataclass(frozen=True)
class Constraint:
    """Repetition-avoidance constraint: no k-powers, or no overlaps."""

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind == KPOWER:
            if self.k < 2:
                raise ValueError(f"k must be >= 2, got {self.k}")
        elif self.kind == OVERLAP:
            object.__setattr__(self, "k", 0)
        else:
            raise ValueError(f"unknown constraint kind {self.kind!r}")

    @classmethod
    def kpower(cls, k: int) -> "Constraint":
        return cls(KPOWER, k)

    @classmethod
    def overlap(cls) -> "Constraint":
        return cls(OVERLAP)

    def __str__(self):
        return f"kpower({self.k})" if self.kind == KPOWER else "overlap"


@dataclass(frozen=True)
class Occurrence:
    """A located repetition.

    For a k-power the factor is ``w[start:start + period * exponent]``; for an
    overlap (``exponent is None``) it is ``w[start:start + 2 * period + 1]``.
    """

    start: int
    period: int
    exponent: Optional[int] = None

    @property
    def kind(self) -> str:
        return OVERLAP if self.exponent is None else KPOWER

    @property
    def length(self) -> int:
        if self.exponent is None:
            return 2 * self.period + 1
        return self.period * self.exponent

    def factor(self, w: Sequence[int]) -> Word:
        return tuple(w[self.start:self.start + self.length])


def as_word(w: Union[Sequence[int], str]) -> Word:
    """Coerce a sequence of ints (or a string of digits) to a word tuple."""
    if isinstance(w, str):
        return tuple(int(c) for c in w)
    return tuple(int(s) for s in w)


def check_alphabet(w: Sequence[int], alphabet_size: int) -> None:
    for pos, s in enumerate(w):
        if not 0 <= s < alphabet_size:
            raise ValueError(
                f"symbol {s} at position {pos} outside alphabet of size {alphabet_size}")


def alphabet_of(w: Sequence[int]) -> int:
    """Smallest alphabet size containing every symbol of ``w``."""
    return max(w) + 1 if len(w) else 1


def cyc(w: Sequence[int], i: int) -> Word:
    """The i-th partial conjugate: rotate left by ``i``, then drop the last symbol.

    ``cyc(w, 0)`` is ``w`` without its last symbol.  ``i == len(w)`` is allowed
    and evaluated literally, which gives the same word as ``i == 0``.
    """
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("cyc is undefined on the empty word")
    if not 0 <= i <= n:
        raise ValueError(f"index {i} out of range 0..{n}")
    if i == 0:
        return w[:n - 1]
    return w[i:] + w[:i - 1]


def rotations(w: Sequence[int]):
    w = tuple(w)
    for i in range(len(w)):
        yield w[i:] + w[:i]


def is_primitive(w: Sequence[int]) -> bool:
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("primitivity is undefined on the empty word")
    for d in range(1, n):
        if n % d == 0 and w[:n - d] == w[d:]:
            return False
    return True


def distinct_conjugates(w: Sequence[int]) -> set:
    if len(w) == 0:
        raise ValueError("conjugates of the empty word are undefined")
    return set(rotations(w))


def _is_kpower_at(w: Word, start: int, period: int, k: int) -> bool:
    # w[start : start + k*period] has period `period`
    return w[start:start + (k - 1) * period] == w[start + period:start + k * period]


def find_kpower(w: Sequence[int], k: int) -> Optional[Occurrence]:
    """First k-power factor of ``w`` by (start, period), or None if k-power-free."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    w = tuple(w)
    n = len(w)
    for start in range(n):
        for period in range(1, (n - start) // k + 1):
            if _is_kpower_at(w, start, period, k):
                return Occurrence(start, period, k)
    return None


def find_overlap(w: Sequence[int]) -> Optional[Occurrence]:
    """First overlap ``axaxa`` in ``w`` by (start, period), or None if overlap-free."""
    w = tuple(w)
    n = len(w)
    for start in range(n):
        for period in range(1, (n - start - 1) // 2 + 1):
            if w[start:start + period + 1] == w[start + period:start + 2 * period + 1]:
                return Occurrence(start, period)
    return None


def find_repetition(w: Sequence[int], constraint: Constraint) -> Optional[Occurrence]:
    if constraint.kind == KPOWER:
        return find_kpower(w, constraint.k)
    return find_overlap(w)


def is_free(w: Sequence[int], constraint: Constraint) -> bool:
    return find_repetition(w, constraint) is None


def has_suffix_repetition(w: Word, constraint: Constraint) -> bool:
    """True iff some forbidden repetition ends at the last position of ``w``."""
    n = len(w)
    if constraint.kind == KPOWER:
        k = constraint.k
        for period in range(1, n // k + 1):
            if w[n - k * period:n - period] == w[n - (k - 1) * period:]:
                return True
        return False
    for period in range(1, (n - 1) // 2 + 1):
        if w[n - 2 * period - 1:n - period] == w[n - period - 1:]:
            return True
    return False


def is_free_extension(w: Sequence[int], a: int, constraint: Constraint,
                      alphabet_size: Optional[int] = None) -> bool:
    """Whether ``w + a`` still satisfies ``constraint``, given that ``w`` does.

    Only repetitions ending at the appended symbol are examined.
    """
    if a < 0 or (alphabet_size is not None and a >= alphabet_size):
        raise ValueError(f"symbol {a} outside alphabet")
    return not has_suffix_repetition(tuple(w) + (a,), constraint)


def is_simple_kpower(w: Sequence[int], k: int) -> bool:
    """True iff ``w = p^k`` and no proper factor of ``w`` is a k-power."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    w = tuple(w)
    n = len(w)
    if n == 0 or n % k or not _is_kpower_at(w, 0, n // k, k):
        return False
    # every proper factor lies inside w[:-1] or w[1:]
    return find_kpower(w[:-1], k) is None and find_kpower(w[1:], k) is None


def is_squarefree(w: Sequence[int]) -> bool:
    return find_kpower(w, 2) is None


def is_circularly_squarefree(w: Sequence[int]) -> bool:
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("circular square-freeness is undefined on the empty word")
    # A square in some rotation has length <= n, so it is a factor of w·w
    # starting in the first n positions.
    ww = w + w
    for start in range(n):
        for period in range(1, n // 2 + 1):
            if ww[start:start + period] == ww[start + period:start + 2 * period]:
                return False
    return True
