import pytest

from gmaj import (
    GuardError,
    OrderedBipartition,
    ParseError,
    Relation,
    all_relations,
    decompose,
    format_bipartition,
    is_bipartitional,
    is_compatible,
    parse_bipartition,
    relation_from_bipartition,
)


def edges_of(text):
    return set(parse_bipartition(text).relation().edges())


def test_relation_from_bipartition_examples():
    # strictly decreasing singletons give the classical strict order
    assert edges_of("3 | 2 | 1") == {(3, 2), (3, 1), (2, 1)}
    # one underlined block relates every pair
    assert edges_of("1 2 3!") == {(x, y) for x in (1, 2, 3) for y in (1, 2, 3)}
    # one plain block relates nothing
    assert edges_of("1 2 3") == set()


def test_relation_from_singleton_underlined_chain():
    # all-singleton underlined chain r | ... | 1 gives x >= y
    assert edges_of("3! | 2! | 1!") == {(x, y) for x in (1, 2, 3) for y in (1, 2, 3) if x >= y}


def test_is_bipartitional_examples():
    assert is_bipartitional(Relation(3, 0))
    assert not is_bipartitional(Relation.from_edges(3, [(1, 2)]))
    geq = Relation.from_edges(3, [(x, y) for x in (1, 2, 3) for y in (1, 2, 3) if x >= y])
    assert is_bipartitional(geq)


def test_is_bipartitional_against_generation_oracle(bipartitions_by_r):
    # independent oracle: a relation is bipartitional iff some ordered
    # bipartition induces it
    for r in (1, 2, 3):
        induced = {relation_from_bipartition(b).mask for b in bipartitions_by_r[r]}
        recognized = {rel.mask for rel in all_relations(r) if is_bipartitional(rel)}
        assert recognized == induced
    # hence the counts 2, 10, 74
    assert [
        sum(1 for rel in all_relations(r) if is_bipartitional(rel)) for r in (1, 2, 3)
    ] == [2, 10, 74]


def test_decompose_examples():
    b = decompose(Relation.from_edges(3, [(1, 2), (1, 3), (2, 3)]))
    assert format_bipartition(b) == "1 | 2 | 3"
    b = decompose(Relation.from_edges(3, [(3, 1), (3, 2), (3, 3)]))
    assert format_bipartition(b) == "3! | 1 2"
    assert decompose(Relation.from_edges(3, [(1, 2)])) is None


def test_decompose_round_trip_all_bipartitions():
    from gmaj import all_bipartitions

    for r in (1, 2, 3, 4):
        for b in all_bipartitions(r):
            rel = relation_from_bipartition(b)
            back = decompose(rel)
            assert back is not None
            assert relation_from_bipartition(back) == rel
            # decomposition is unique, so the bipartition itself comes back
            assert back == b


def test_decompose_agrees_with_recognizer():
    for r in (1, 2, 3):
        for rel in all_relations(r):
            assert (decompose(rel) is not None) == is_bipartitional(rel)


@pytest.mark.parametrize(
    "text,expected",
    [("2! | 1", True), ("1 | 2!", False), ("1 2 3", True)],
)
def test_is_compatible_examples(text, expected):
    assert is_compatible(parse_bipartition(text)) is expected


def test_all_relations_counts_and_order():
    assert sum(1 for _ in all_relations(1)) == 2
    assert sum(1 for _ in all_relations(2)) == 16
    rels = list(all_relations(3))
    assert len(rels) == 512
    assert [rel.mask for rel in rels] == list(range(512))


def test_all_relations_guard():
    with pytest.raises(GuardError):
        list(all_relations(5))
    # the override exists but we only peek at the first element
    it = all_relations(5, allow_large=True)
    assert next(it).mask == 0


def test_complement():
    rel = Relation.from_edges(2, [(1, 2)])
    assert set(rel.complement().edges()) == {(1, 1), (2, 1), (2, 2)}
    assert rel.complement().complement() == rel


def test_relation_json_round_trip():
    rel = Relation.from_edges(3, [(3, 1), (3, 2), (3, 3)])
    again = Relation.from_json(rel.to_json())
    assert again == rel
    with pytest.raises(ParseError):
        Relation.from_json("{not json")
    with pytest.raises(ParseError):
        Relation.from_json('{"edges": [[1,2]]}')


def test_bipartition_text_round_trip():
    for text in ("3! | 1 2", "1 2 3!", "1 2 3", "2! | 1", "1 | 2 | 3"):
        b = parse_bipartition(text)
        assert format_bipartition(b) == text
        assert parse_bipartition(format_bipartition(b)) == b


def test_bipartition_parse_errors():
    with pytest.raises(ParseError):
        parse_bipartition("1 2 | ")
    with pytest.raises(ParseError):
        parse_bipartition("1 2 | 2 3")  # overlapping blocks
    with pytest.raises(ParseError):
        parse_bipartition("1 | 3")  # letter 2 missing
    with pytest.raises(ParseError):
        parse_bipartition("1 a | 2")


def test_bipartition_validation():
    with pytest.raises(Exception):
        OrderedBipartition(((1,), (1, 2)), (False, False))
