"""Exhaustive desk-scale verification of the two characterization results.

For every relation on a small alphabet, decide whether the inversion- and
major-index-style statistics are equidistributed on every rearrangement
class up to a length cutoff, and compare the resulting set against the
structurally characterized one:

  pair variant  equidistributed at the cutoff  <->  bipartitional,
  full variant  equidistributed at the cutoff  <->  compatible.

The one-sided guarantee is unconditional (bipartitional/compatible inputs
pass at every cutoff); the converse holds at the default cutoffs because
every failing relation already fails on a short class, and the report
records that minimal witness per relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import GmajError, GuardError
from .relations import Relation, decompose, is_bipartitional, is_compatible
from .stats import Source, distribution
from .words import Content, Word, enumerate_class

SURVEY_GUARD_R = 3
DEFAULT_MAX_LEN = {1: 2, 2: 4, 3: 6}


@dataclass
class SurveyReport:
    """Outcome of one exhaustive scan."""

    theorem: int
    r: int
    max_len: int
    total_relations: int
    mahonian_count: int          # relations equidistributed at the cutoff
    bipartitional_count: int
    compatible_count: int | None
    mismatches: list[int]        # bitmasks where the two sets disagree
    witnesses: dict[int, Content] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.mismatches


def equidistributed(kind: str, source: Source, content: Sequence[int]) -> bool:
    """True iff the inversion and major-index distributions coincide as
    polynomials on the given class."""
    if kind == "prime":
        return distribution("inv_prime", source, content) == distribution(
            "maj_prime", source, content
        )
    if kind == "full":
        return distribution("inv_full", source, content) == distribution(
            "maj_full", source, content
        )
    raise GmajError(f"unknown kind {kind!r}; choose 'prime' or 'full'")


def contents_up_to(r: int, max_len: int) -> list[Content]:
    """All contents over 1..r with total at most max_len, ordered by total
    then lexicographically (so recorded witnesses are minimal)."""
    if r == 0:
        return [()]
    out: list[Content] = []

    def rec(prefix: list[int], left: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix) + (left,))
            return
        for v in range(left + 1):
            prefix.append(v)
            rec(prefix, left - v, slots - 1)
            prefix.pop()

    for total in range(max_len + 1):
        rec([], total, r)
    return out


def _word_cache(r: int, max_len: int) -> list[tuple[Content, list[Word]]]:
    return [(c, enumerate_class(c, max_len)) for c in contents_up_to(r, max_len)]


def _prime_pass(rows: list[int], words: list[Word]) -> bool:
    """Equidistribution of the pair statistics on one class, from per-letter
    adjacency bitmasks (hot path of the surveys)."""
    inv_counts: dict[int, int] = {}
    maj_counts: dict[int, int] = {}
    for w in words:
        m = len(w)
        inv = 0
        maj = 0
        for i in range(m - 1):
            row = rows[w[i]]
            for j in range(i + 1, m):
                if row >> (w[j] - 1) & 1:
                    inv += 1
            if row >> (w[i + 1] - 1) & 1:
                maj += i + 1
        inv_counts[inv] = inv_counts.get(inv, 0) + 1
        maj_counts[maj] = maj_counts.get(maj, 0) + 1
    return inv_counts == maj_counts


def _full_pass(rows: list[int], underl: frozenset[int], words: list[Word]) -> bool:
    inv_counts: dict[int, int] = {}
    maj_counts: dict[int, int] = {}
    for w in words:
        m = len(w)
        inv = 0
        maj = 0
        for i in range(m - 1):
            row = rows[w[i]]
            for j in range(i + 1, m):
                if row >> (w[j] - 1) & 1:
                    inv += 1
            if row >> (w[i + 1] - 1) & 1:
                maj += i + 1
        for x in w:
            if x in underl:
                inv += 1
        if m and w[-1] in underl:
            maj += m
        inv_counts[inv] = inv_counts.get(inv, 0) + 1
        maj_counts[maj] = maj_counts.get(maj, 0) + 1
    return inv_counts == maj_counts


def _first_failure(
    rows: list[int],
    cache: list[tuple[Content, list[Word]]],
    underl: frozenset[int] | None = None,
) -> Content | None:
    for content, words in cache:
        if underl is None:
            ok = _prime_pass(rows, words)
        else:
            ok = _full_pass(rows, underl, words)
        if not ok:
            return content
    return None


def _check_guard(r: int, allow_large: bool) -> None:
    if r < 1:
        raise GmajError("surveys need r >= 1")
    if r > SURVEY_GUARD_R and not allow_large:
        raise GuardError(
            f"survey at r={r} exceeds the r<={SURVEY_GUARD_R} guard; "
            "pass allow_large=True to override"
        )


def theorem1_survey(r: int, max_len: int, allow_large: bool = False) -> SurveyReport:
    """Scan all 2^(r*r) relations: pair-variant equidistribution up to the
    cutoff versus the two-axiom recognizer."""
    _check_guard(r, allow_large)
    cache = _word_cache(r, max_len)
    mahonian = set()
    bipartitional = set()
    witnesses: dict[int, Content] = {}
    for mask in range(1 << (r * r)):
        rel = Relation(r, mask)
        rows = rel.row_masks()
        failure = _first_failure(rows, cache)
        if failure is None:
            mahonian.add(mask)
        else:
            witnesses[mask] = failure
        if is_bipartitional(rel):
            bipartitional.add(mask)
    mismatches = sorted(mahonian ^ bipartitional)
    return SurveyReport(
        theorem=1,
        r=r,
        max_len=max_len,
        total_relations=1 << (r * r),
        mahonian_count=len(mahonian),
        bipartitional_count=len(bipartitional),
        compatible_count=None,
        mismatches=mismatches,
        witnesses=witnesses,
    )


def theorem2_survey(r: int, max_len: int, allow_large: bool = False) -> SurveyReport:
    """Scan the bipartitional relations: full-variant equidistribution up to
    the cutoff versus compatibility of the decomposed bipartition."""
    _check_guard(r, allow_large)
    cache = _word_cache(r, max_len)
    passing = set()
    compatible = set()
    bipartitional = 0
    witnesses: dict[int, Content] = {}
    for mask in range(1 << (r * r)):
        rel = Relation(r, mask)
        b = decompose(rel)
        if b is None:
            continue
        bipartitional += 1
        if is_compatible(b):
            compatible.add(mask)
        rows = rel.row_masks()
        failure = _first_failure(rows, cache, underl=b.underlined_letters())
        if failure is None:
            passing.add(mask)
        else:
            witnesses[mask] = failure
    mismatches = sorted(passing ^ compatible)
    return SurveyReport(
        theorem=2,
        r=r,
        max_len=max_len,
        total_relations=1 << (r * r),
        mahonian_count=len(passing),
        bipartitional_count=bipartitional,
        compatible_count=len(compatible),
        mismatches=mismatches,
        witnesses=witnesses,
    )
