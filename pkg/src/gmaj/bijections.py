"""Bijections carrying the major index onto the inversion count.

Three layers:

* maj_to_inv / inv_to_maj: the classical rotate-and-append transform on
  words over any totally ordered alphabet (the order is passed as a sort
  key), sending the major index to the inversion count class by class and
  preserving the last letter.

* label_word / unlabel_word and the conjugated transforms: to handle a
  relation built from an ordered bipartition, each letter occurrence is
  replaced by a labeled pair (block minimum, occurrence number), numbering
  plain blocks left to right and underlined blocks right to left.  Under
  the order "earlier block wins, then larger label wins", the major index
  of the labeled word equals the pair-variant major index of the original,
  so conjugating the classical transform by the labeling yields a bijection
  of each class sending maj' to inv'.  The full variant is handled by
  appending a sentinel letter in its own singleton block placed right after
  the underlined prefix (hence the compatibility requirement), transforming,
  and stripping the sentinel.

* macmahon_encode / macmahon_decode: the classical biword encoding behind
  the bivariate closed forms.  A bounded non-increasing integer sequence
  plus a word over the block minima is folded into per-block rows whose
  entries sum to the sequence total plus the major index; plain blocks give
  non-increasing rows, underlined blocks strictly decreasing ones (bounded
  away from zero in the full variant).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import CompatibilityError, GmajError, ShapeError
from .relations import OrderedBipartition, is_compatible
from .stats import stats_full, stats_prime
from .words import Word, check_word


class PairLetter(NamedTuple):
    """A block minimum together with an occurrence label."""

    base: int
    label: int


@dataclass(frozen=True)
class LabeledWord:
    """Distinct-letter image of a word: labeled pairs plus per-block subwords."""

    labeled: tuple[PairLetter, ...]
    subwords: tuple[Word, ...]


@dataclass(frozen=True)
class VerfahrenImage:
    """Row system produced by the biword encoding: bound s and one integer
    row per block."""

    s: int
    rows: tuple[tuple[int, ...], ...]


KeyFn = Callable[[object], object]


def _identity(x):
    return x


def _rotate_pieces(seq: list, is_break: Callable[[object], bool]) -> list:
    """Cut after every break letter and move each break letter to the front
    of its piece."""
    out: list = []
    start = 0
    for idx, y in enumerate(seq):
        if is_break(y):
            out.append(y)
            out.extend(seq[start:idx])
            start = idx + 1
    if start != len(seq):
        raise ShapeError("factorization incomplete: last letter is not a break letter")
    return out


def _gamma(seq: list, kx, key: KeyFn) -> list:
    if not seq:
        return seq
    if key(seq[-1]) > kx:
        return _rotate_pieces(seq, lambda y: key(y) > kx)
    return _rotate_pieces(seq, lambda y: key(y) <= kx)


def _gamma_inverse(seq: list, kx, key: KeyFn) -> list:
    """Undo _gamma: pieces now start with their break letter; move it back
    to the end of its piece."""
    if not seq:
        return seq
    if key(seq[0]) > kx:
        brk = lambda y: key(y) > kx
    else:
        brk = lambda y: key(y) <= kx
    out: list = []
    i = 0
    n = len(seq)
    while i < n:
        if not brk(seq[i]):
            raise ShapeError("word is not in the image of the rotation step")
        j = i + 1
        while j < n and not brk(seq[j]):
            j += 1
        out.extend(seq[i + 1 : j])
        out.append(seq[i])
        i = j
    return out


def maj_to_inv(word: Sequence, key: KeyFn | None = None) -> tuple:
    """Rearrange a word so its inversion count equals the major index of the
    input (both w.r.t. the order induced by the key).  Bijective on every
    rearrangement class and keeps the last letter fixed."""
    key = key or _identity
    acc: list = []
    for x in word:
        acc = _gamma(acc, key(x), key)
        acc.append(x)
    return tuple(acc)


def inv_to_maj(word: Sequence, key: KeyFn | None = None) -> tuple:
    """Inverse of maj_to_inv on every rearrangement class."""
    key = key or _identity
    seq = list(word)
    tail: list = []
    while len(seq) > 1:
        x = seq.pop()
        tail.append(x)
        seq = _gamma_inverse(seq, key(x), key)
    tail.reverse()
    return tuple(seq + tail)


def pair_key(b: OrderedBipartition) -> KeyFn:
    """Sort key realizing the labeled-alphabet order: a pair beats another
    iff its block comes earlier, or blocks agree and its label is larger."""
    index = {base: l for l, base in enumerate(b.minima())}

    def key(p: PairLetter):
        return (-index[p.base], p.label)

    return key


def label_word(b: OrderedBipartition, word: Sequence[int]) -> LabeledWord:
    """Replace each letter by its block minimum and an occurrence label.

    Plain blocks are numbered 1..m_l left to right, underlined blocks
    1..m_l right to left, which makes all letters distinct and turns the
    pair-variant major index into the plain major index of the result.
    """
    w = check_word(word, b.r)
    positions: dict[int, list[int]] = {l: [] for l in range(b.k)}
    for pos, x in enumerate(w):
        positions[b.block_of(x)].append(pos)
    labeled: list[PairLetter | None] = [None] * len(w)
    subwords = []
    for l in range(b.k):
        base = b.blocks[l][0]
        occ = positions[l]
        subwords.append(tuple(w[p] for p in occ))
        numbered = reversed(occ) if b.underlined[l] else occ
        for j, p in enumerate(numbered, start=1):
            labeled[p] = PairLetter(base, j)
    return LabeledWord(tuple(labeled), tuple(subwords))


def unlabel_word(image: LabeledWord, b: OrderedBipartition) -> Word:
    """Substitute the block subwords back into a labeled word.

    Validates the shape first: for each block the labels must appear in
    increasing order 1..m_l (plain) or decreasing order m_l..1 (underlined),
    and the subword lengths must match.
    """
    if len(image.subwords) != b.k:
        raise ShapeError("one subword per block required")
    minima = b.minima()
    index = {base: l for l, base in enumerate(minima)}
    seen: dict[int, list[int]] = {l: [] for l in range(b.k)}
    out: list[int] = []
    for p in image.labeled:
        if not isinstance(p, PairLetter) or p.base not in index:
            raise ShapeError(f"letter {p!r} is not a labeled pair on a block minimum")
        l = index[p.base]
        seen[l].append(p.label)
        sub = image.subwords[l]
        k = len(seen[l])
        if k > len(sub):
            raise ShapeError(f"too many occurrences for block {l + 1}")
        out.append(sub[k - 1])
    for l in range(b.k):
        m_l = len(image.subwords[l])
        labels = seen[l]
        if len(labels) != m_l:
            raise ShapeError(f"block {l + 1} occurrence count does not match its subword")
        expected = list(range(m_l, 0, -1)) if b.underlined[l] else list(range(1, m_l + 1))
        if labels != expected:
            raise ShapeError(f"block {l + 1} labels {labels} violate the required order")
    return tuple(out)


def maj_to_inv_prime(b: OrderedBipartition, word: Sequence[int]) -> Word:
    """Class bijection sending the pair-variant major index to the
    pair-variant inversion count: label, transform, unlabel."""
    img = label_word(b, word)
    key = pair_key(b)
    transformed = maj_to_inv(img.labeled, key)
    return unlabel_word(LabeledWord(transformed, img.subwords), b)


def inv_to_maj_prime(b: OrderedBipartition, word: Sequence[int]) -> Word:
    """Inverse of maj_to_inv_prime."""
    img = label_word(b, word)
    key = pair_key(b)
    transformed = inv_to_maj(img.labeled, key)
    return unlabel_word(LabeledWord(transformed, img.subwords), b)


def star_bipartition(b: OrderedBipartition) -> OrderedBipartition:
    """Adjoin a sentinel letter r+1 as a plain singleton block placed
    immediately after the underlined prefix."""
    if not is_compatible(b):
        raise CompatibilityError(
            "full-variant transform needs a compatible bipartition "
            f"(flags {''.join('1' if u else '0' for u in b.underlined)})"
        )
    star = b.r + 1
    n = sum(b.underlined)
    blocks = b.blocks[:n] + ((star,),) + b.blocks[n:]
    flags = (True,) * n + (False,) + (False,) * (b.k - n)
    return OrderedBipartition(blocks, flags)


def maj_to_inv_full(b: OrderedBipartition, word: Sequence[int]) -> Word:
    """Class bijection sending the full major index to the full inversion
    count, for compatible bipartitions: append the sentinel, run the
    pair-variant transform, strip the sentinel."""
    bstar = star_bipartition(b)
    w = check_word(word, b.r)
    image = maj_to_inv_prime(bstar, w + (bstar.r,))
    if image[-1] != bstar.r:
        raise ArithmeticError("sentinel letter moved: last-letter preservation failed")
    return image[:-1]


def inv_to_maj_full(b: OrderedBipartition, word: Sequence[int]) -> Word:
    """Inverse of maj_to_inv_full."""
    bstar = star_bipartition(b)
    w = check_word(word, b.r)
    image = inv_to_maj_prime(bstar, w + (bstar.r,))
    if image[-1] != bstar.r:
        raise ArithmeticError("sentinel letter moved: last-letter preservation failed")
    return image[:-1]


def _suffix_descents(b: OrderedBipartition, wbar: Word, second_kind: bool) -> list[int]:
    """z_i = number of descents in the suffix starting at position i
    (1-indexed); second kind also counts an underlined last letter."""
    rel = b.relation()
    m = len(wbar)
    z = [0] * (m + 1)
    if second_kind and m and b.is_underlined_letter(wbar[-1]):
        z[m - 1] = 1
    for i in range(m - 2, -1, -1):
        z[i] = z[i + 1] + (1 if rel.contains(wbar[i], wbar[i + 1]) else 0)
    return z[:m]


def macmahon_encode(
    kind: str,
    b: OrderedBipartition,
    s_prime: int,
    p: Sequence[int],
    wbar: Sequence[int],
) -> VerfahrenImage:
    """Fold (bound, non-increasing sequence, word over block minima) into the
    per-block row system.

    kind "first" uses pair-variant descents, kind "second" the full-variant
    descents and requires a compatible bipartition.  The row entries are the
    sequence values plus suffix descent counts, stably regrouped by block;
    their total is sum(p) + maj(wbar) and the bound rises to
    s = s_prime + des(wbar).
    """
    second = _check_kind(kind)
    if second and not is_compatible(b):
        raise CompatibilityError("kind 'second' requires a compatible bipartition")
    if s_prime < 0:
        raise GmajError("s_prime must be non-negative")
    minima = b.minima()
    allowed = set(minima)
    w = tuple(wbar)
    for x in w:
        if x not in allowed:
            raise GmajError(f"letter {x} is not a block minimum (expected one of {sorted(allowed)})")
    ps = tuple(p)
    if len(ps) != len(w):
        raise GmajError("p and wbar must have the same length")
    for a, c in zip(ps, ps[1:]):
        if a < c:
            raise GmajError("p must be non-increasing")
    if ps and (ps[0] > s_prime or ps[-1] < 0):
        raise GmajError(f"p entries must lie in 0..{s_prime}")

    z = _suffix_descents(b, w, second)
    y = [pi + zi for pi, zi in zip(ps, z)]
    index = {base: l for l, base in enumerate(minima)}
    rows: list[list[int]] = [[] for _ in range(b.k)]
    for yi, xi in zip(y, w):       # stable: original order kept within blocks
        rows[index[xi]].append(yi)
    des = z[0] if w else 0
    s = s_prime + des
    image = VerfahrenImage(s, tuple(tuple(row) for row in rows))
    try:
        _check_shape(image, b, second)
    except ShapeError as exc:
        raise ArithmeticError(f"encode produced an invalid row system: {exc}") from exc
    maj = (stats_full(b, w) if second else stats_prime(b.relation(), w)).maj
    if sum(y) != sum(ps) + maj:
        raise ArithmeticError("row total drifted from sum(p) + maj")
    return image


def macmahon_decode(
    kind: str,
    b: OrderedBipartition,
    image: VerfahrenImage,
    multiplicities: Sequence[int],
) -> tuple[int, tuple[int, ...], Word]:
    """Exact inverse of macmahon_encode.

    Columns are replayed in decreasing value order, ties broken by later
    block first and then by row position; that is the unique interleaving a
    valid encoding can produce (inside a run of equal values no descent may
    occur, which forces block indices to decrease along the run).
    """
    second = _check_kind(kind)
    if second and not is_compatible(b):
        raise CompatibilityError("kind 'second' requires a compatible bipartition")
    mult = tuple(multiplicities)
    if len(mult) != b.k or len(image.rows) != b.k:
        raise ShapeError("need one row and one multiplicity per block")
    if tuple(len(row) for row in image.rows) != mult:
        raise ShapeError("row lengths do not match the multiplicities")
    _check_shape(image, b, second)

    minima = b.minima()
    columns = []
    for l, row in enumerate(image.rows):
        for pos, val in enumerate(row):
            columns.append((-val, -l, pos, minima[l]))
    columns.sort()
    wbar = tuple(col[3] for col in columns)
    y = [-col[0] for col in columns]

    z = _suffix_descents(b, wbar, second)
    p = tuple(yi - zi for yi, zi in zip(y, z))
    des = z[0] if wbar else 0
    s_prime = image.s - des
    for a, c in zip(p, p[1:]):
        if a < c:
            raise ShapeError("decoded sequence is not non-increasing: invalid row system")
    if p and (p[-1] < 0 or p[0] > s_prime):
        raise ShapeError("decoded sequence escapes its bound: invalid row system")
    if s_prime < 0:
        raise ShapeError("decoded bound is negative: invalid row system")
    return s_prime, p, wbar


def _check_kind(kind: str) -> bool:
    if kind not in ("first", "second"):
        raise GmajError(f"unknown kind {kind!r}; choose 'first' or 'second'")
    return kind == "second"


def _check_shape(image: VerfahrenImage, b: OrderedBipartition, second: bool) -> None:
    if image.s < 0:
        raise ShapeError("bound s must be non-negative")
    for l, row in enumerate(image.rows):
        underl = b.underlined[l]
        lo = 1 if (underl and second) else 0
        for val in row:
            if not lo <= val <= image.s:
                raise ShapeError(
                    f"row {l + 1} entry {val} outside {lo}..{image.s}"
                )
        for a, c in zip(row, row[1:]):
            if underl and a <= c:
                raise ShapeError(f"row {l + 1} must be strictly decreasing")
            if not underl and a < c:
                raise ShapeError(f"row {l + 1} must be non-increasing")
