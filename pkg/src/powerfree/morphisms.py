"""Morphisms on integer alphabets, the Thue-Morse morphism and its fixed point."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence

from .words import Word, as_word


@dataclass(frozen=True)
class Morphism:
    images: Dict[int, Word]
    source_alphabet: int
    target_alphabet: int

    def __post_init__(self):
        for a in range(self.source_alphabet):
            if a not in self.images:
                raise ValueError(f"no image for symbol {a}")
        for a, img in self.images.items():
            for s in img:
                if not 0 <= s < self.target_alphabet:
                    raise ValueError(f"image of {a} uses symbol {s} outside target alphabet")

    @classmethod
    def from_images(cls, images: Sequence[Sequence[int]]) -> "Morphism":
        imgs = {a: as_word(img) for a, img in enumerate(images)}
        target = max((max(i) + 1 for i in imgs.values() if i), default=1)
        return cls(imgs, len(imgs), target)

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse ``"0->01,1->10"``; images use the word syntax of :mod:`powerfree.io`."""
        from .io import parse_word

        images = {}
        for part in text.split(","):
            part = part.strip()
            if "->" not in part:
                raise ValueError(f"bad morphism rule {part!r}")
            src, dst = part.split("->", 1)
            (a,) = parse_word(src.strip()) or (None,)
            if a is None:
                raise ValueError(f"bad morphism rule {part!r}")
            images[a] = parse_word(dst.strip())
        source = max(images) + 1
        target = max((max(i) + 1 for i in images.values() if i), default=1)
        return cls(images, source, max(target, source))

    def __call__(self, w: Sequence[int]) -> Word:
        return apply(self, w)


def apply(h: Morphism, w: Sequence[int]) -> Word:
    out = []
    for s in w:
        try:
            out.extend(h.images[s])
        except KeyError:
            raise ValueError(f"symbol {s} has no image") from None
    return tuple(out)


def fixed_point_prefix(h: Morphism, a: int, length: int) -> Word:
    """First ``length`` symbols of the fixed point of ``h`` starting with ``a``."""
    img = h.images.get(a)
    if img is None or len(img) < 2 or img[0] != a:
        raise ValueError(f"morphism is not prolongable on {a}")
    if length < 0:
        raise ValueError("length must be non-negative")
    w: Word = (a,)
    while len(w) < length:
        nxt = apply(h, w)
        if len(nxt) <= len(w):
            raise ValueError("fixed point stops growing before the requested length")
        w = nxt
    return w[:length]


MU = Morphism({0: (0, 1), 1: (1, 0)}, 2, 2)


def mu(w: Sequence[int]) -> Word:
    return apply(MU, w)


def mu_power(w: Sequence[int], n: int) -> Word:
    w = tuple(w)
    for _ in range(n):
        w = mu(w)
    return w


def thue_morse_prefix(length: int) -> Word:
    if length == 0:
        return ()
    return fixed_point_prefix(MU, 0, length)
