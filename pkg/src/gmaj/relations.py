"""Directed-graph relations on 1..r and ordered bipartitions.

A relation is stored as an r*r bitmask (row-major: the bit for the pair
(x, y) is at position (x-1)*r + (y-1)), which doubles as the iteration key
for exhaustive scans.  An ordered bipartition is a sequence of disjoint
non-empty blocks covering 1..r, each block flagged underlined or not; it
induces the relation containing every left-to-right cross-block pair plus
the full square of every underlined block.

Text grammar for bipartitions: blocks separated by "|", letters separated
by whitespace, a trailing "!" marks the block underlined, e.g. "3! | 1 2".
Relation JSON: {"r": 3, "edges": [[3, 1], [3, 2]]} with 1-indexed pairs.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import GuardError, GmajError, ParseError

ALL_RELATIONS_GUARD = 4


@dataclass(frozen=True)
class Relation:
    """Subset of (1..r) x (1..r) as a dense bitmask."""

    r: int
    mask: int = 0

    def __post_init__(self):
        if self.r < 0:
            raise GmajError("alphabet size must be non-negative")
        if not 0 <= self.mask < 1 << (self.r * self.r):
            raise GmajError("relation bitmask out of range for r")

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[Sequence[int]]) -> "Relation":
        mask = 0
        for x, y in edges:
            if not (1 <= x <= r and 1 <= y <= r):
                raise GmajError(f"edge ({x},{y}) out of range 1..{r}")
            mask |= 1 << ((x - 1) * r + (y - 1))
        return cls(r, mask)

    def contains(self, x: int, y: int) -> bool:
        return bool(self.mask >> ((x - 1) * self.r + (y - 1)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        r = self.r
        return [
            (x, y)
            for x in range(1, r + 1)
            for y in range(1, r + 1)
            if self.mask >> ((x - 1) * r + (y - 1)) & 1
        ]

    def complement(self) -> "Relation":
        """The relation on all pairs not in this one."""
        full = (1 << (self.r * self.r)) - 1
        return Relation(self.r, self.mask ^ full)

    def row_masks(self) -> list[int]:
        """Per-letter adjacency bitmasks; entry x has bit y-1 set iff (x,y) is in U."""
        r = self.r
        full = (1 << r) - 1
        return [0] + [(self.mask >> ((x - 1) * r)) & full for x in range(1, r + 1)]

    def out_degree(self, x: int) -> int:
        r = self.r
        return ((self.mask >> ((x - 1) * r)) & ((1 << r) - 1)).bit_count()

    def to_json(self) -> str:
        return json.dumps({"r": self.r, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str) -> "Relation":
        try:
            obj = json.loads(text)
            r = obj["r"]
            edges = obj["edges"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad relation JSON: {exc}") from None
        if not isinstance(r, int):
            raise ParseError("relation JSON field 'r' must be an integer")
        return cls.from_edges(r, edges)


@dataclass(frozen=True)
class OrderedBipartition:
    """Ordered blocks covering 1..r with per-block underline flags."""

    blocks: tuple[tuple[int, ...], ...]
    underlined: tuple[bool, ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)
    _underl: frozenset[int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "underlined", tuple(bool(u) for u in self.underlined))
        if len(self.blocks) != len(self.underlined):
            raise GmajError("one underline flag per block required")
        if not self.blocks:
            raise GmajError("a bipartition needs at least one block")
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise GmajError("blocks must be non-empty")
            if seen & set(b):
                raise GmajError("blocks must be disjoint")
            seen |= set(b)
        r = len(seen)
        if seen != set(range(1, r + 1)):
            raise GmajError("blocks must cover 1..r exactly")
        index = {x: l for l, b in enumerate(self.blocks) for x in b}
        object.__setattr__(self, "_index", index)
        object.__setattr__(
            self,
            "_underl",
            frozenset(x for b, u in zip(self.blocks, self.underlined) if u for x in b),
        )

    @property
    def r(self) -> int:
        return len(self._index)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_of(self, letter: int) -> int:
        """0-based index of the block containing the letter."""
        try:
            return self._index[letter]
        except KeyError:
            raise GmajError(f"letter {letter} out of range 1..{self.r}") from None

    def is_underlined_letter(self, letter: int) -> bool:
        return self.underlined[self.block_of(letter)]

    def underlined_letters(self) -> frozenset[int]:
        return self._underl

    def minima(self) -> tuple[int, ...]:
        """Smallest letter of each block, in block order."""
        return tuple(b[0] for b in self.blocks)

    def relation(self) -> Relation:
        return relation_from_bipartition(self)

    def text(self) -> str:
        return format_bipartition(self)


@lru_cache(maxsize=None)
def relation_from_bipartition(b: OrderedBipartition) -> Relation:
    """(x,y) is related iff x's block is strictly left of y's, or they share
    an underlined block."""
    r = b.r
    mask = 0
    for x in range(1, r + 1):
        lx = b.block_of(x)
        for y in range(1, r + 1):
            ly = b.block_of(y)
            if lx < ly or (lx == ly and b.underlined[lx]):
                mask |= 1 << ((x - 1) * r + (y - 1))
    return Relation(r, mask)


def is_bipartitional(rel: Relation) -> bool:
    """Two-axiom test over all triples:

    (x,y) and (y,z) related  =>  (x,z) related;
    (x,y) unrelated, (z,y) related  =>  (z,x) related.
    """
    r = rel.r
    rows = rel.row_masks()
    letters = range(1, r + 1)
    for x in letters:
        rx = rows[x]
        for y in letters:
            xy = rx >> (y - 1) & 1
            if xy:
                # transitivity: row of y must be contained in row of x
                if rows[y] & ~rx:
                    return False
            else:
                for z in letters:
                    if rows[z] >> (y - 1) & 1 and not (rows[z] >> (x - 1) & 1):
                        return False
    return True


def decompose(rel: Relation) -> OrderedBipartition | None:
    """Recover the unique ordered bipartition inducing the relation, or None.

    Letters x, y are grouped when their rows agree off {x,y}, their columns
    agree off {x,y}, and the four entries (x,y),(y,x),(x,x),(y,y) are equal.
    Blocks are ordered by decreasing out-degree, ties broken by putting the
    non-underlined block first (the only ties a bipartitional relation can
    produce).  The result is validated by reconstruction, so a wrong grouping
    on a non-bipartitional input is caught and reported as None.
    """
    r = rel.r
    if r == 0:
        return None
    parent = list(range(r + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(1, r + 1):
        for y in range(x + 1, r + 1):
            if _same_block_signature(rel, x, y):
                parent[find(x)] = find(y)

    groups: dict[int, list[int]] = {}
    for x in range(1, r + 1):
        groups.setdefault(find(x), []).append(x)

    blocks = []
    for members in groups.values():
        rep = members[0]
        blocks.append(
            (
                -rel.out_degree(rep),          # decreasing out-degree first
                rel.contains(rep, rep),        # plain before underlined on ties
                tuple(sorted(members)),
            )
        )
    blocks.sort()
    candidate = OrderedBipartition(
        tuple(b[2] for b in blocks), tuple(b[1] for b in blocks)
    )
    if relation_from_bipartition(candidate) == rel:
        return candidate
    return None


def _same_block_signature(rel: Relation, x: int, y: int) -> bool:
    r = rel.r
    if rel.contains(x, y) != rel.contains(y, x):
        return False
    if rel.contains(x, x) != rel.contains(x, y) or rel.contains(y, y) != rel.contains(x, y):
        return False
    for z in range(1, r + 1):
        if z == x or z == y:
            continue
        if rel.contains(x, z) != rel.contains(y, z):
            return False
        if rel.contains(z, x) != rel.contains(z, y):
            return False
    return True


def is_compatible(b: OrderedBipartition) -> bool:
    """True iff the underline flags read 1...10...0 left to right."""
    seen_plain = False
    for u in b.underlined:
        if u and seen_plain:
            return False
        if not u:
            seen_plain = True
    return True


def all_relations(r: int, allow_large: bool = False) -> Iterator[Relation]:
    """All 2^(r*r) relations, in increasing bitmask order."""
    if r > ALL_RELATIONS_GUARD and not allow_large:
        raise GuardError(
            f"r={r} would scan 2^{r * r} relations; pass allow_large=True to override"
        )
    for mask in range(1 << (r * r)):
        yield Relation(r, mask)


def all_bipartitions(r: int, compatible_only: bool = False) -> Iterator[OrderedBipartition]:
    """Every ordered bipartition of 1..r (optionally only compatible ones).

    Used as the independent oracle for the counting formulas and the
    recognizer: set partitions are built recursively, then every block
    ordering and every admissible flag vector is emitted.
    """
    if r < 1:
        raise GmajError("bipartitions need r >= 1")
    for partition in _set_partitions(r):
        k = len(partition)
        for order in itertools.permutations(partition):
            if compatible_only:
                for j in range(k + 1):
                    flags = (True,) * j + (False,) * (k - j)
                    yield OrderedBipartition(order, flags)
            else:
                for flags in itertools.product((False, True), repeat=k):
                    yield OrderedBipartition(order, flags)


def _set_partitions(r: int) -> list[tuple[tuple[int, ...], ...]]:
    parts: list[list[list[int]]] = [[]]
    for x in range(1, r + 1):
        nxt: list[list[list[int]]] = []
        for p in parts:
            for i in range(len(p)):
                nxt.append([b + [x] if j == i else b for j, b in enumerate(p)])
            nxt.append(p + [[x]])
        parts = nxt
    return [tuple(tuple(b) for b in p) for p in parts]


def parse_bipartition(text: str) -> OrderedBipartition:
    """Parse the "3! | 1 2" grammar."""
    chunks = text.split("|")
    blocks: list[tuple[int, ...]] = []
    flags: list[bool] = []
    for chunk in chunks:
        body = chunk.strip()
        underl = body.endswith("!")
        if underl:
            body = body[:-1].strip()
        if not body:
            raise ParseError(f"empty block in bipartition {text!r}")
        try:
            letters = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise ParseError(f"bad block {chunk.strip()!r} in bipartition {text!r}") from None
        blocks.append(letters)
        flags.append(underl)
    try:
        return OrderedBipartition(tuple(blocks), tuple(flags))
    except GmajError as exc:
        raise ParseError(f"bad bipartition {text!r}: {exc}") from None


def format_bipartition(b: OrderedBipartition) -> str:
    pieces = []
    for block, underl in zip(b.blocks, b.underlined):
        body = " ".join(str(x) for x in block)
        pieces.append(body + "!" if underl else body)
    return " | ".join(pieces)
