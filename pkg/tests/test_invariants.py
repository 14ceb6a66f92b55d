import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from zvkpair.errors import ZvkError
from zvkpair.invariants import (AbelianInvariants, FiniteGroup, abelianization, catalog, cyclic, dihedral,
                                direct_product, fingerprint, hom_count, quaternion, smith_diagonal, symmetric)
from zvkpair.words import Word
from zvkpair.zvk import GroupPresentation, two_generator_presentation

from conftest import words


def pres(rank, *rels):
    return GroupPresentation(rank, tuple(Word(tuple(r)) for r in rels))


def test_abelianization_examples():
    assert abelianization(pres(2, [1, 2, -1, -2])) == AbelianInvariants(2, ())
    assert abelianization(pres(1, [1] * 6)) == AbelianInvariants(0, (6,))
    assert abelianization(pres(2, [1, 1], [2, 2, 2])) == AbelianInvariants(0, (6,))
    assert abelianization(pres(3)) == AbelianInvariants(3, ())


def test_abelian_invariants_validated():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))


@settings(max_examples=1000)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_matches_sympy(m, n, data):
    rows = [[data.draw(st.integers(-12, 12)) for _ in range(n)] for _ in range(m)]
    ours = smith_diagonal(rows)
    oracle = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ) if d != 0]
    assert ours == oracle


def test_finite_group_validation():
    with pytest.raises(ZvkError):
        FiniteGroup(np.array([[0, 1], [0, 1]]))
    with pytest.raises(ZvkError):
        # Latin square with identity 0 that is not associative
        FiniteGroup(np.array([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3],
                              [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]))


def test_group_constructors():
    assert [g.order for g in (cyclic(5), dihedral(4), symmetric(3), quaternion())] == [5, 8, 6, 8]
    assert dihedral(4).label == "D8"
    g = direct_product(cyclic(2), cyclic(3))
    assert g.order == 6 and g.label == "C2xC3"


def test_catalog():
    groups = catalog(16)
    labels = [g.label for g in groups]
    assert len(labels) == len(set(labels))
    assert all(g.order <= 16 for g in groups)
    assert {"C1", "C16", "D16", "Q8", "S3", "C2xC2xC2xC2", "C2xQ8"} <= set(labels)
    with pytest.raises(ZvkError):
        catalog(65)


def test_hom_count_examples():
    assert hom_count(pres(2), cyclic(3)) == 9
    assert hom_count(pres(1, [1, 1]), cyclic(4)) == 2
    assert hom_count(pres(2, [1, 2, -1, -2]), symmetric(3)) == 18
    assert hom_count(pres(0), quaternion()) == 1


def test_hom_count_jobs_agree():
    p = two_generator_presentation(1)
    for q in (dihedral(4), symmetric(3), quaternion()):
        assert hom_count(p, q, jobs=3) == hom_count(p, q)


_SMALL = [cyclic(2), cyclic(3), symmetric(3), cyclic(4), quaternion(), dihedral(4)]


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 3), st.lists(words(3, 8), max_size=3), st.integers(0, 5), st.integers(0, 5))
def test_hom_count_multiplicative(rank, rels, i, j):
    p = GroupPresentation(rank, tuple(Word(tuple(x for x in r if abs(x) <= rank)) for r in rels))
    a, b = _SMALL[i], _SMALL[j]
    if a.order * b.order > 24:
        b = cyclic(2)
    assert hom_count(p, direct_product(a, b)) == hom_count(p, a) * hom_count(p, b)


def test_fingerprints_separate_the_two_generator_groups():
    f1 = fingerprint(two_generator_presentation(1), 8)
    f2 = fingerprint(two_generator_presentation(2), 8)
    assert f1.keys() == f2.keys()
    assert f1 != f2


def test_fingerprints_invariant_under_simplification(curve_groups):
    for full, simple in curve_groups.values():
        assert fingerprint(full, 8) == fingerprint(simple, 8)
        assert abelianization(full) == abelianization(simple)
