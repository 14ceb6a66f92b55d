import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zvkpair.braids import BraidWord
from zvkpair.errors import IndexRangeError, SchemaError, ZvkError
from zvkpair.invariants import abelianization, catalog, hom_count
from zvkpair.monodromy import MonodromyPresentation
from zvkpair.words import Word
from zvkpair.zvk import (GroupPresentation, load_presentation, two_generator_presentation, projectivize,
                         store_presentation, tietze_simplify, zvk_presentation)

from conftest import words


def single(strands, letters):
    comps = {i: "c" for i in range(1, strands + 1)}
    return MonodromyPresentation(strands, (BraidWord(strands, letters),), comps)


def test_node_gives_commuting_meridians():
    p = tietze_simplify(zvk_presentation(single(2, (1, 1))))
    assert p.rank == 2
    assert str(abelianization(p)) == "Z + Z"
    assert hom_count(p, catalog(6)[-1]) == 18  # commuting pairs in S3


def test_cusp_gives_braid_relation():
    p = tietze_simplify(zvk_presentation(single(2, (1, 1, 1))))
    assert p.rank == 2 and len(p.relators) == 1
    assert sorted(map(abs, p.relators[0].letters)) == [1, 1, 1, 2, 2, 2]


def test_transversal_point_identifies_meridians():
    p = tietze_simplify(zvk_presentation(single(2, (1,))))
    assert p.rank == 1 and p.relators == ()


def test_empty_monodromy_is_free():
    p = zvk_presentation(MonodromyPresentation(3, (), {1: "c", 2: "c", 3: "c"}))
    assert p.rank == 3 and p.relators == ()


def test_projectivize():
    p = zvk_presentation(single(2, (1, 1)))
    q = projectivize(p, Word((1, 2)))
    assert q.relators[-1] == Word((1, 2))
    assert projectivize(p, Word()) == p
    with pytest.raises(IndexRangeError):
        projectivize(p, Word((3,)))


def test_presentation_json(tmp_path):
    p = two_generator_presentation(1)
    store_presentation(p, tmp_path / "p.json")
    assert load_presentation(tmp_path / "p.json") == p
    with pytest.raises(SchemaError):
        GroupPresentation.from_json({"rank": 1, "relators": [[2]]})
    with pytest.raises(SchemaError):
        GroupPresentation.from_json({"rank": 1, "relators": [[0]]})


def test_tietze_keeps_names_of_survivors(curve_groups):
    full, simple = curve_groups["c2_special"]
    assert full.names == ("a1", "a2", "a3", "a4")
    assert set(simple.names) <= set(full.names)


def test_tietze_deterministic(curve_groups):
    full, simple = curve_groups["c1_special"]
    assert tietze_simplify(full) == simple
    assert tietze_simplify(simple) == simple


def test_tietze_budget():
    p = two_generator_presentation(2)
    assert abelianization(tietze_simplify(p, budget=1)) == abelianization(p)
    with pytest.raises(ZvkError):
        tietze_simplify(p, budget=0)


def test_both_sextic_groups_reduce_to_two_generators(curve_groups):
    for full, simple in curve_groups.values():
        assert simple.rank == 2
        assert simple.total_length <= full.total_length


def test_c2_group_is_the_two_generator_group(curve_groups):
    # < a2, a4 | [a4, a2^2], a2^2 = (a2 a4)^4 > up to conjugating the relators
    _, g = curve_groups["c2_special"]
    small = catalog(16)
    assert [hom_count(g, q) for q in small] == [hom_count(two_generator_presentation(2), q) for q in small]


presentations = st.builds(
    lambda rank, rels: GroupPresentation(rank, tuple(Word(tuple(x for x in r if abs(x) <= rank)) for r in rels)),
    st.integers(1, 3), st.lists(words(3, 8), max_size=3))

_QUOTIENTS = [g for g in catalog(8) if g.label in ("C4", "S3", "D8", "Q8", "C2xC2")]


@settings(max_examples=1000, deadline=None)
@given(presentations)
def test_tietze_preserves_invariants(p):
    q = tietze_simplify(p)
    assert abelianization(q) == abelianization(p)
    for g in _QUOTIENTS:
        assert hom_count(q, g) == hom_count(p, g)
