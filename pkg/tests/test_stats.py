import pytest

from gmaj import (
    GmajError,
    PolyQ,
    PolyTQ,
    Relation,
    class_size,
    distribution,
    enumerate_class,
    joint_distribution,
    parse_bipartition,
    stats_full,
    stats_prime,
    underlined_count,
)
from gmaj.survey import contents_up_to


def strict_order_relation(r):
    return Relation.from_edges(r, [(x, y) for x in range(1, r + 1) for y in range(1, x)])


def q_factorial(n):
    p = PolyQ.one()
    for i in range(1, n + 1):
        p = p * PolyQ([1] * i)
    return p


def test_stats_prime_empty_relation():
    empty = Relation(3, 0)
    for w in ((), (1,), (3, 1, 3, 2), (2, 2, 2)):
        assert stats_prime(empty, w) == (0, 0, 0)


def test_stats_prime_complete_relation():
    full = Relation.from_edges(3, [(x, y) for x in (1, 2, 3) for y in (1, 2, 3)])
    for w in ((1, 2, 3, 1), (2, 2, 2, 2), (3, 1, 3, 2)):
        triple = stats_prime(full, w)
        assert triple.inv == 6 == len(w) * (len(w) - 1) // 2
        assert triple.maj == 6
        assert triple.des == 3


def test_stats_prime_worked_example():
    b = parse_bipartition("3! | 1 2")
    assert stats_prime(b.relation(), (3, 1, 3, 2)) == (4, 4, 2)


def test_stats_full_counterexample_values():
    b = parse_bipartition("1 | 2!")
    assert stats_full(b, (1, 2))[:2] == (2, 3)
    assert stats_full(b, (2, 1))[:2] == (1, 0)


def test_stats_full_worked_example():
    b = parse_bipartition("3! | 1 2")
    assert stats_full(b, (3, 1, 3, 2)) == (6, 4, 2)
    assert underlined_count(b, (3, 1, 3, 2)) == 2


def test_stats_full_on_empty_word():
    b = parse_bipartition("1 2!")
    assert stats_full(b, ()) == (0, 0, 0)


def test_letter_out_of_range():
    with pytest.raises(GmajError):
        stats_prime(Relation(2, 0), (1, 3))
    with pytest.raises(GmajError):
        stats_full(parse_bipartition("1 | 2"), (3,))


def test_distribution_examples():
    b = parse_bipartition("3! | 1 2")
    expected = PolyQ([2, 2, 2])
    assert distribution("maj_prime", b, (1, 1, 1)) == expected
    assert distribution("inv_prime", b, (1, 1, 1)) == expected


def test_distribution_table_case():
    # the asymmetric triple-letter case: inversions and major index are
    # not equidistributed
    rel = Relation.from_edges(
        3, [(1, 2), (2, 1), (1, 3), (3, 1), (1, 1), (2, 2), (3, 3), (3, 2)]
    )
    assert distribution("inv_prime", rel, (1, 1, 1)) == PolyQ([0, 0, 3, 3])
    assert distribution("maj_prime", rel, (1, 1, 1)) == PolyQ([0, 1, 1, 4])


def test_distribution_classical_is_q_factorial():
    for n in range(1, 6):
        rel = strict_order_relation(n)
        dist = distribution("inv_prime", rel, (1,) * n)
        assert dist == q_factorial(n)
        assert distribution("maj_prime", rel, (1,) * n) == q_factorial(n)


def test_distribution_value_at_one_is_class_size(bipartitions_by_r):
    for r in (2, 3):
        for b in bipartitions_by_r[r][::7]:
            for c in ((1,) * r, (2,) + (1,) * (r - 1)):
                for selector in ("inv_prime", "maj_prime", "inv_full", "maj_full"):
                    assert distribution(selector, b, c)(1) == class_size(c)


def test_full_dominates_prime(bipartitions_by_r):
    for b in bipartitions_by_r[2]:
        rel = b.relation()
        for c in contents_up_to(2, 4):
            for w in enumerate_class(c):
                p = stats_prime(rel, w)
                f = stats_full(b, w)
                assert f.inv >= p.inv
                assert (f.inv == p.inv) == (underlined_count(b, w) == 0)


def test_full_selector_requires_bipartition():
    with pytest.raises(GmajError):
        distribution("inv_full", Relation(2, 0), (1, 1))
    with pytest.raises(GmajError):
        joint_distribution("full", Relation(2, 0), (1, 1))


def test_unknown_selector():
    with pytest.raises(GmajError):
        distribution("des", Relation(2, 0), (1, 1))


def test_joint_distribution_examples():
    assert joint_distribution("prime", parse_bipartition("2 | 1"), (1, 1)) == PolyTQ(
        [PolyQ([1]), PolyQ([0, 1])]
    )
    assert joint_distribution("prime", parse_bipartition("3! | 1 2"), (1, 1, 1)) == PolyTQ(
        [PolyQ([2]), PolyQ([0, 2, 2])]
    )
    assert joint_distribution("full", parse_bipartition("2! | 1"), (1, 1)) == PolyTQ(
        [PolyQ.zero(), PolyQ([0, 1, 1])]
    )


def test_joint_marginal_is_distribution(bipartitions_by_r):
    # summing out t recovers the maj distribution
    for b in bipartitions_by_r[2]:
        for c in contents_up_to(2, 3):
            assert joint_distribution("prime", b, c).at_t_one() == distribution(
                "maj_prime", b, c
            )
            assert joint_distribution("full", b, c).at_t_one() == distribution(
                "maj_full", b, c
            )


def test_theorem_equidistribution_small_slice(bipartitions_by_r):
    # pair variant: always equidistributed for induced relations
    for b in bipartitions_by_r[2]:
        for c in contents_up_to(2, 4):
            assert distribution("inv_prime", b, c) == distribution("maj_prime", b, c)
    # full variant: equidistributed exactly for compatible bipartitions
    from gmaj import is_compatible

    for b in bipartitions_by_r[2]:
        same = all(
            distribution("inv_full", b, c) == distribution("maj_full", b, c)
            for c in contents_up_to(2, 4)
        )
        assert same == is_compatible(b)


def test_content_length_must_match_r():
    with pytest.raises(GmajError):
        distribution("inv_prime", Relation(3, 0), (1, 1))
