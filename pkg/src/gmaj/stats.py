"""The six word statistics and their distribution polynomials.

For a relation U on 1..r and a word w = x_1...x_m, the pair variant counts

  inv'  pairs i < j with (x_i, x_j) in U,
  des'  positions i <= m-1 with (x_i, x_{i+1}) in U,
  maj'  the sum of those descent positions,

and the full variant (defined against an ordered bipartition) adds the
underline corrections

  inv = inv' + number of underlined letters in w,
  maj = maj' + m if the last letter is underlined,
  des = des' + 1 if the last letter is underlined.

Distribution polynomials sum q^stat (or t^des q^maj) over a whole
rearrangement class, with exact integer coefficients throughout.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence, Union

from .errors import GmajError
from .qseries import PolyQ, PolyTQ
from .relations import OrderedBipartition, Relation
from .words import DEFAULT_CLASS_LIMIT, check_word, enumerate_class


class StatTriple(NamedTuple):
    inv: int
    maj: int
    des: int


Source = Union[Relation, OrderedBipartition]

PRIME_SELECTORS = ("inv_prime", "maj_prime")
FULL_SELECTORS = ("inv_full", "maj_full")
SELECTORS = PRIME_SELECTORS + FULL_SELECTORS


def stats_prime(rel: Relation, word: Sequence[int]) -> StatTriple:
    """Pair-variant (inv', maj', des') of a word under a relation."""
    w = check_word(word, rel.r)
    rows = rel.row_masks()
    m = len(w)
    inv = maj = des = 0
    for i in range(m):
        row = rows[w[i]]
        for j in range(i + 1, m):
            if row >> (w[j] - 1) & 1:
                inv += 1
        if i < m - 1 and row >> (w[i + 1] - 1) & 1:
            maj += i + 1
            des += 1
    return StatTriple(inv, maj, des)


def underlined_count(b: OrderedBipartition, word: Sequence[int]) -> int:
    """Number of letters of the word lying in underlined blocks."""
    underl = b.underlined_letters()
    return sum(1 for x in word if x in underl)


def stats_full(b: OrderedBipartition, word: Sequence[int]) -> StatTriple:
    """Full-variant (inv, maj, des) of a word under an ordered bipartition."""
    w = check_word(word, b.r)
    inv, maj, des = stats_prime(b.relation(), w)
    inv += underlined_count(b, w)
    if w and b.is_underlined_letter(w[-1]):
        maj += len(w)
        des += 1
    return StatTriple(inv, maj, des)


def _as_relation(source: Source) -> Relation:
    if isinstance(source, OrderedBipartition):
        return source.relation()
    return source


def _as_bipartition(source: Source, what: str) -> OrderedBipartition:
    if not isinstance(source, OrderedBipartition):
        raise GmajError(f"{what} requires an ordered bipartition, not a bare relation")
    return source


def distribution(
    selector: str,
    source: Source,
    content: Sequence[int],
    limit: int = DEFAULT_CLASS_LIMIT,
) -> PolyQ:
    """Sum of q^stat over the rearrangement class of the content.

    selector is one of "inv_prime", "maj_prime", "inv_full", "maj_full";
    the full selectors need an OrderedBipartition source.  Evaluating the
    result at q = 1 always gives the class size.
    """
    if selector not in SELECTORS:
        raise GmajError(f"unknown selector {selector!r}; choose from {SELECTORS}")
    c = tuple(content)
    full = selector in FULL_SELECTORS
    if full:
        b = _as_bipartition(source, f"selector {selector!r}")
        rel = b.relation()
    else:
        b = None
        rel = _as_relation(source)
    if len(c) != rel.r:
        raise GmajError(f"content has {len(c)} entries but the relation is on 1..{rel.r}")
    counts: dict[int, int] = {}
    pick_inv = selector.startswith("inv")
    for w in enumerate_class(c, limit):
        if full:
            t = stats_full(b, w)
        else:
            t = stats_prime(rel, w)
        v = t.inv if pick_inv else t.maj
        counts[v] = counts.get(v, 0) + 1
    out = [0] * (max(counts) + 1 if counts else 0)
    for v, n in counts.items():
        out[v] = n
    return PolyQ(out)


def joint_distribution(
    kind: str,
    b: OrderedBipartition,
    content: Sequence[int],
    limit: int = DEFAULT_CLASS_LIMIT,
) -> PolyTQ:
    """Sum of t^des q^maj over the class, with the pair ("prime") or
    underline-corrected ("full") reading of des and maj."""
    if kind not in ("prime", "full"):
        raise GmajError(f"unknown kind {kind!r}; choose 'prime' or 'full'")
    b = _as_bipartition(b, f"joint_distribution kind {kind!r}")
    c = tuple(content)
    if len(c) != b.r:
        raise GmajError(f"content has {len(c)} entries but the bipartition is on 1..{b.r}")
    rel = b.relation()
    cells: dict[tuple[int, int], int] = {}
    for w in enumerate_class(c, limit):
        t = stats_full(b, w) if kind == "full" else stats_prime(rel, w)
        cells[(t.des, t.maj)] = cells.get((t.des, t.maj), 0) + 1
    if not cells:
        return PolyTQ.zero()
    max_t = max(d for d, _ in cells)
    rows = []
    for d in range(max_t + 1):
        row_cells = {m: n for (dd, m), n in cells.items() if dd == d}
        row = [0] * (max(row_cells) + 1 if row_cells else 0)
        for m, n in row_cells.items():
            row[m] = n
        rows.append(PolyQ(row))
    return PolyTQ(rows)
