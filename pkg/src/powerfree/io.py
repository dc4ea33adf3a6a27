"""Text syntax for words.

Symbols 0-9 are written as digits and larger symbols as ``[n]``.  A trailing
``xN`` repeats the whole word N times, so ``01x3`` is ``010101``.  Words over
the 25-letter Carpi alphabet may also be written as comma-separated codes.
"""
from __future__ import annotations

import re
from typing import Sequence

from .words import Word

_REPEAT = re.compile(r"^(.*)x(\d+)$")


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "e", "eps"):
        return ()
    m = _REPEAT.match(text)
    if m:
        return parse_word(m.group(1)) * int(m.group(2))
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isdigit():
            out.append(int(c))
            i += 1
        elif c == "[":
            j = text.find("]", i)
            if j < 0 or not text[i + 1:j].isdigit():
                raise ValueError(f"malformed symbol in {text!r}")
            out.append(int(text[i + 1:j]))
            i = j + 1
        elif c in " _":
            i += 1
        else:
            raise ValueError(f"unexpected character {c!r} in word {text!r}")
    return tuple(out)


def format_word(w: Sequence[int]) -> str:
    if len(w) == 0:
        return "ε"
    return "".join(str(s) if s < 10 else f"[{s}]" for s in w)


def parse_codes(text: str) -> Word:
    """Comma-separated decimal codes, e.g. ``7,7,0``; empty text is the empty word."""
    text = text.strip()
    if text in ("", "e", "eps", "ε"):
        return ()
    return tuple(int(part) for part in text.split(","))


def format_codes(w: Sequence[int]) -> str:
    return ",".join(str(s) for s in w) if len(w) else "ε"
