"""Words over the alphabet 1..r, contents, and rearrangement classes.

A word is a plain tuple of ints, a content is the tuple of letter
multiplicities (c(1), ..., c(r)).  Text forms: words are whitespace-separated
integers ("3 1 3 2"), contents are comma-separated integers ("1,1,2").
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import ClassTooLargeError, GmajError, ParseError

Word = tuple[int, ...]
Content = tuple[int, ...]

DEFAULT_CLASS_LIMIT = 12


def check_word(word: Sequence[int], r: int) -> Word:
    """Validate letters against 1..r and return the word as a tuple."""
    w = tuple(word)
    for x in w:
        if not 1 <= x <= r:
            raise GmajError(f"letter {x} out of range 1..{r}")
    return w


def content_of(word: Sequence[int], r: int) -> Content:
    """Multiplicity vector of a word over 1..r."""
    w = check_word(word, r)
    counts = [0] * r
    for x in w:
        counts[x - 1] += 1
    return tuple(counts)


def class_size(content: Sequence[int]) -> int:
    """Number of rearrangements: the multinomial coefficient, exact."""
    c = _check_content(content)
    n = math.factorial(sum(c))
    for k in c:
        n //= math.factorial(k)
    return n


def enumerate_class(content: Sequence[int], limit: int = DEFAULT_CLASS_LIMIT) -> list[Word]:
    """All words with the given content, in ascending lexicographic order."""
    c = _check_content(content)
    total = sum(c)
    if total > limit:
        raise ClassTooLargeError(f"class of size |c|={total} exceeds limit {limit}")
    counts = list(c)
    r = len(counts)
    out: list[Word] = []
    word: list[int] = []

    def rec() -> None:
        if len(word) == total:
            out.append(tuple(word))
            return
        for i in range(r):
            if counts[i]:
                counts[i] -= 1
                word.append(i + 1)
                rec()
                word.pop()
                counts[i] += 1

    rec()
    return out


def _check_content(content: Sequence[int]) -> Content:
    c = tuple(content)
    if any(k < 0 for k in c):
        raise GmajError("content entries must be non-negative")
    return c


def parse_word(text: str) -> Word:
    """Parse "3 1 3 2"; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ParseError(f"bad word {text!r}: {exc}") from None


def format_word(word: Iterable[int]) -> str:
    return " ".join(str(x) for x in word)


def parse_content(text: str) -> Content:
    """Parse "1,1,2"."""
    text = text.strip()
    if not text:
        raise ParseError("empty content")
    try:
        c = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad content {text!r}: {exc}") from None
    return _check_content(c)


def format_content(content: Iterable[int]) -> str:
    return ",".join(str(k) for k in content)
