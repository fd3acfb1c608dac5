"""Closed-form generating polynomials for the graph-parameterized statistics.

For an ordered bipartition with blocks B_1..B_k and a content c, write m_l
for the number of letters of the class falling in B_l.  The single-variable
distributions have product form

  pair variant:  qmultinomial(m_1..m_k) * prod_l binom(m_l; c(B_l)) * q^E,
                 E = sum over underlined l of C(m_l, 2),
  full variant:  same with E = sum over underlined l of C(m_l + 1, 2),

and the bivariate (descent, major) distributions arise by multiplying a
truncated s-sum of Gaussian-binomial products by the t-ascending factorial
(t;q)_{|c|+1}.  The s-sum is cut at S = 2|c| + 2; the multiplication is done
mod t^(S+1) and every surviving coefficient of t-degree above |c| is
asserted to vanish, so an insufficient cut or an arithmetic slip cannot go
unnoticed.  The subset of a class ending with a fixed letter has its own
closed form and an independent descent-side recurrence; all three routes
(closed, recurrence, brute enumeration) agree and are cross-checked in the
test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import CompatibilityError, GmajError
from .qseries import PolyQ, PolyTQ, q_binomial, q_multinomial, t_pochhammer
from .relations import OrderedBipartition, is_compatible
from .stats import stats_prime
from .words import enumerate_class


@dataclass(frozen=True)
class BlockProfile:
    """Per-block view of a content against an ordered bipartition."""

    letters: tuple[tuple[int, ...], ...]   # block letters, ascending
    slices: tuple[tuple[int, ...], ...]    # content restricted to each block
    sums: tuple[int, ...]                  # per-block letter totals m_l
    underlined: tuple[bool, ...]

    @classmethod
    def of(cls, b: OrderedBipartition, content: Sequence[int]) -> "BlockProfile":
        c = tuple(content)
        if len(c) != b.r:
            raise GmajError(
                f"content has {len(c)} entries but the bipartition is on 1..{b.r}"
            )
        slices = tuple(tuple(c[x - 1] for x in block) for block in b.blocks)
        return cls(
            letters=b.blocks,
            slices=slices,
            sums=tuple(sum(s) for s in slices),
            underlined=b.underlined,
        )

    @property
    def total(self) -> int:
        return sum(self.sums)

    def spread_factor(self) -> int:
        """Product over blocks of the ordinary multinomial binom(m_l; c(B_l));
        the number of ways to re-diversify block minima into actual letters."""
        out = 1
        for m_l, sl in zip(self.sums, self.slices):
            n = math.factorial(m_l)
            for ci in sl:
                n //= math.factorial(ci)
            out *= n
        return out


def formula_inv_prime(b: OrderedBipartition, content: Sequence[int]) -> PolyQ:
    """Product form of the pair-inversion distribution over the class."""
    prof = BlockProfile.of(b, content)
    shift = sum(
        math.comb(m_l, 2) for m_l, u in zip(prof.sums, prof.underlined) if u
    )
    return (q_multinomial(prof.sums) * prof.spread_factor()).shift(shift)


def formula_inv_full(b: OrderedBipartition, content: Sequence[int]) -> PolyQ:
    """Product form of the full inversion distribution; valid for any
    bipartition since the underlined-letter count is constant on a class."""
    prof = BlockProfile.of(b, content)
    shift = sum(
        math.comb(m_l + 1, 2) for m_l, u in zip(prof.sums, prof.underlined) if u
    )
    return (q_multinomial(prof.sums) * prof.spread_factor()).shift(shift)


def ending_distribution(
    b: OrderedBipartition,
    content: Sequence[int],
    letter: int,
    mode: str = "closed",
) -> PolyQ:
    """Distribution over the words of the class that end with the letter.

    closed      pair-inversion form: the whole-class product formula at the
                decremented content, shifted by q^(m_1+...+m_{l-1}) when the
                letter's block is plain and by q^(m_1+...+m_l - 1) when it is
                underlined (block sums taken at the undecremented content);
    recurrence  descent-side recurrence on the second-to-last letter, memoized;
    brute       direct enumeration of the ending words, summing q^maj'.

    All three agree on every bipartition; the closed/recurrence agreement is
    exactly the induction that proves the pair variant equidistributed.
    """
    c = tuple(content)
    if not 1 <= letter <= b.r:
        raise GmajError(f"letter {letter} out of range 1..{b.r}")
    if c[letter - 1] < 1:
        raise GmajError(f"letter {letter} has zero multiplicity in the content")
    if mode == "closed":
        prof = BlockProfile.of(b, c)
        l = b.block_of(letter)
        before = sum(prof.sums[:l])
        shift = before + prof.sums[l] - 1 if b.underlined[l] else before
        decremented = tuple(
            ci - 1 if i == letter - 1 else ci for i, ci in enumerate(c)
        )
        return formula_inv_prime(b, decremented).shift(shift)
    if mode == "recurrence":
        return _ending_recurrence(b, c, letter)
    if mode == "brute":
        rel = b.relation()
        counts: dict[int, int] = {}
        for w in enumerate_class(c):
            if w and w[-1] == letter:
                v = stats_prime(rel, w).maj
                counts[v] = counts.get(v, 0) + 1
        out = [0] * (max(counts) + 1 if counts else 0)
        for v, n in counts.items():
            out[v] = n
        return PolyQ(out)
    raise GmajError(f"unknown mode {mode!r}; choose closed, recurrence or brute")


def _ending_recurrence(b: OrderedBipartition, c: tuple[int, ...], letter: int) -> PolyQ:
    @lru_cache(maxsize=None)
    def rec(content: tuple[int, ...], i: int) -> PolyQ:
        total = sum(content)
        if total == 1:
            return PolyQ.one()
        li = b.block_of(i)
        # a descent before the last letter contributes q^(|c|-1); it happens
        # iff the second-to-last letter's block is left of i's block, or
        # equal to it and underlined
        boundary = li + 1 if b.underlined[li] else li
        shorter = tuple(
            ci - 1 if idx == i - 1 else ci for idx, ci in enumerate(content)
        )
        acc = PolyQ.zero()
        for j in range(1, b.r + 1):
            if shorter[j - 1] == 0:
                continue
            part = rec(shorter, j)
            if b.block_of(j) < boundary:
                part = part.shift(total - 1)
            acc = acc + part
        return acc

    return rec(c, letter)


def _tq_product(
    b: OrderedBipartition,
    content: Sequence[int],
    underlined_shift: int,
    underlined_upper_offset: int,
) -> PolyTQ:
    """Shared engine for the two bivariate closed forms.

    Computes (t;q)_{m+1} times the truncated s-sum whose underlined factors
    are q^C(m_l + underlined_shift, 2) * qbinomial(s + underlined_upper_offset, m_l),
    then checks that nothing survives above t-degree m before truncating.
    """
    prof = BlockProfile.of(b, content)
    m = prof.total
    s_cut = 2 * m + 2
    rows = []
    for s in range(s_cut + 1):
        term = PolyQ.one()
        for m_l, u in zip(prof.sums, prof.underlined):
            if u:
                factor = q_binomial(s + underlined_upper_offset, m_l).shift(
                    math.comb(m_l + underlined_shift, 2)
                )
            else:
                factor = q_binomial(m_l + s, m_l)
            term = term * factor
            if not term:
                break
        rows.append(term)
    series = PolyTQ(rows)
    product = t_pochhammer(m + 1).mul_truncated(series, s_cut)
    for d in range(m + 1, min(product.t_degree, s_cut) + 1):
        if product.rows[d]:
            raise ArithmeticError(
                f"nonzero coefficient at t-degree {d} > {m}: truncation cut too low"
            )
    return product.truncate_t(m) * prof.spread_factor()


def formula_tq_prime(b: OrderedBipartition, content: Sequence[int]) -> PolyTQ:
    """Bivariate closed form for the pair (descent count, major index)."""
    return _tq_product(b, content, underlined_shift=0, underlined_upper_offset=1)


def formula_tq_full(b: OrderedBipartition, content: Sequence[int]) -> PolyTQ:
    """Bivariate closed form for the full (descent count, major index);
    only valid when the underlined blocks form a prefix."""
    if not is_compatible(b):
        pair = _offending_pair(b)
        raise CompatibilityError(
            "bipartition is not compatible: underlined block "
            f"{{{' '.join(map(str, pair[0]))}}} appears right of plain block "
            f"{{{' '.join(map(str, pair[1]))}}}"
        )
    return _tq_product(b, content, underlined_shift=1, underlined_upper_offset=0)


def _offending_pair(b: OrderedBipartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    plain = None
    for block, u in zip(b.blocks, b.underlined):
        if not u:
            plain = block
        elif plain is not None:
            return block, plain
    raise GmajError("bipartition is compatible")
