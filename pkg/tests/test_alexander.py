from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zvkpair.alexander import (AbelianLabel, CharacterPoint, abelianize_word, alexander_matrix,
                               alexander_polynomial, augmentation_ideal, calibrate_fitting_offset, char_variety,
                               charvar_points, elementary_ideal, evaluate, fitting_ideal,
                               fox_derivative_abelianized)
from zvkpair.errors import IndexRangeError, SchemaError, ZvkError
from zvkpair.laurent import LaurentPoly
from zvkpair.monodromy import load_fixture
from zvkpair.pipeline import label_by_names, quartic_conic_labels
from zvkpair.words import Word
from zvkpair.zvk import GroupPresentation, two_generator_presentation, zvk_presentation

from conftest import words

T1, T2 = LaurentPoly.var(2, 1), LaurentPoly.var(2, 2)
IDENT = AbelianLabel({1: (1, 0), 2: (0, 1)}, 2)


def P(*q):
    return CharacterPoint(tuple(Fraction(x) for x in q))


def test_fox_axioms():
    assert fox_derivative_abelianized(Word((1, 2)), 1, IDENT) == 1
    assert fox_derivative_abelianized(Word((1, 2)), 2, IDENT) == T1
    assert fox_derivative_abelianized(Word((-1,)), 1, IDENT) == -(T1 ** -1)
    with pytest.raises(IndexRangeError):
        fox_derivative_abelianized(Word((3,)), 3, IDENT)


def test_alexander_matrix_of_commutator():
    m = alexander_matrix(GroupPresentation(2, (Word((1, 2, -1, -2)),)), IDENT)
    assert m == [[1 - T2, T1 - 1]]
    assert alexander_matrix(GroupPresentation(2), IDENT) == []


def test_label_by_component():
    lab = AbelianLabel.by_component(["q", "c", "c", "q"], ["q", "c"])
    assert lab.of(3) == (0, 1) and lab.nvars == 2
    assert AbelianLabel.from_json(lab.to_json()) == lab
    with pytest.raises(ZvkError):
        AbelianLabel.by_component(["q", "x"], ["q"])
    with pytest.raises(SchemaError):
        AbelianLabel.from_json({"vars": 2})


# the Fox identity sum_j d r/d x_j (t_j - 1) = phi(r) - 1

def _fox_sum(w, lab):
    out = LaurentPoly.zero(lab.nvars)
    for j in lab.images:
        out = out + fox_derivative_abelianized(w, j, lab) * (LaurentPoly.monomial(lab.of(j)) - 1)
    return out


@settings(max_examples=1000)
@given(words(4, 14), st.lists(st.sampled_from([(1, 0), (0, 1), (1, 1), (2, -1)]), min_size=4, max_size=4))
def test_fox_identity_random(w, images):
    lab = AbelianLabel(dict(enumerate(images, start=1)), 2)
    w = Word(tuple(w))
    assert _fox_sum(w, lab) == LaurentPoly.monomial(abelianize_word(w, lab)) - 1


@pytest.mark.parametrize("name", ["c1_special", "c2_special", "c2_a15_refinement"])
def test_fox_identity_vanishes_on_affine_relators(name):
    mp = load_fixture(name)
    lab = AbelianLabel.by_component([mp.component_of[i] for i in range(1, mp.strands + 1)], ["quartic", "conic"])
    for r in zvk_presentation(mp).relators:
        assert _fox_sum(r, lab).is_zero()


def test_fox_identity_on_projective_relators(curve_groups):
    rels = [(r, quartic_conic_labels()) for n in (1, 2) for r in two_generator_presentation(n).relators]
    for name, (full, simple) in curve_groups.items():
        lab = label_by_names(simple, load_fixture(name).component_of)
        rels += [(r, lab) for r in simple.relators]
    for r, lab in rels:
        assert _fox_sum(r, lab) == LaurentPoly.monomial(abelianize_word(r, lab)) - 1


# Fitting ideals

def test_elementary_and_fitting_ideal_shapes():
    m = [[T1 - 1, T2 - 1]]
    assert elementary_ideal(m, 0, 2, 2) == [1]
    assert elementary_ideal(m, 2, 2, 2) == [LaurentPoly.zero(2)]
    assert fitting_ideal(m, 2, 2, 2) == augmentation_ideal(2)
    assert fitting_ideal(m, 0, 2, 2) == [LaurentPoly.zero(2)]
    with pytest.raises(ZvkError):
        fitting_ideal(m, 3, 2, 2)


def test_top_fitting_ideal_is_the_trivial_character():
    for n in (1, 2):
        p = two_generator_presentation(n)
        assert char_variety(p, quartic_conic_labels(), p.rank, 12) == [P(0, 0)]


def test_g1_two_generator_locus():
    assert char_variety(two_generator_presentation(1), quartic_conic_labels(), 1) == [P(0, 0)]


def test_g2_two_generator_locus():
    # quartic coordinate first: the jump at t2 = -1 includes t1 = 1 but not t1 = -1
    got = char_variety(two_generator_presentation(2), quartic_conic_labels(), 1)
    assert got == [P(0, 0), P(0, "1/2"), P("1/4", "1/2"), P("3/4", "1/2")]


def test_g2_jump_at_1_minus_1_has_a_dihedral_witness():
    # a -> rotation of order 3, b -> reflection satisfies b^2 = (ab)^4 in D6;
    # the swapped assignment would force the rotation to have order 2
    from zvkpair.invariants import dihedral
    g = dihedral(3)
    r, s = 1, 3
    ab = g.table[r, s]
    fourth = g.table[g.table[ab, ab], g.table[ab, ab]]
    assert g.table[s, s] == fourth
    ba = g.table[s, r]
    assert g.table[r, r] != g.table[g.table[ba, ba], g.table[ba, ba]]


def test_product_form_ideal_is_ours_with_coordinates_swapped():
    # the same F_1 written in conic-first coordinates
    printed = [(T2 * T1 + 1) * (T2 * T2 * T1 * T1 + 1), T2 + T2 * T2 * T1 + T2 ** 3 * T1 * T1 - 1]
    swapped = sorted(CharacterPoint((pt.q[1], pt.q[0])) for pt in charvar_points(printed, 24))
    ours = char_variety(two_generator_presentation(2), quartic_conic_labels(), 1)
    assert sorted(swapped + [P(0, 0)]) == ours


def test_calibration_picks_offset_zero():
    assert calibrate_fitting_offset(two_generator_presentation(1), quartic_conic_labels(), 1, [P(0, 0)]) == 0
    with pytest.raises(ZvkError):
        calibrate_fitting_offset(two_generator_presentation(1), quartic_conic_labels(), 1, [P(0, "1/2")], n=4)


def _fixture_matrices(curve_groups):
    out = [(two_generator_presentation(n), quartic_conic_labels()) for n in (1, 2)]
    for name, (_, simple) in curve_groups.items():
        out.append((simple, label_by_names(simple, load_fixture(name).component_of)))
    return out


def test_loci_shrink_with_k(curve_groups):
    for p, lab in _fixture_matrices(curve_groups):
        loci = [set(char_variety(p, lab, k, 12)) for k in range(p.rank + 1)]
        for k in range(p.rank):
            assert loci[k + 1] <= loci[k]


def test_char_loci_survive_simplification(curve_groups):
    for name, (full, simple) in curve_groups.items():
        comp = load_fixture(name).component_of
        assert char_variety(full, label_by_names(full, comp), 1) == \
            char_variety(simple, label_by_names(simple, comp), 1)


# evaluation and scanning

def test_evaluate_examples():
    assert evaluate(T1 - 1, P(0, 0)).is_zero()
    assert not evaluate(T1 - 1, P("1/4", 0)).is_zero()
    assert evaluate(T1 * T1 * T2 - 1, P("1/4", "1/2")).is_zero()
    with pytest.raises(ZvkError):
        evaluate(T1, P("1/4", 0), order=6)


def test_character_points():
    pt = P("1/4", "1/2")
    assert pt.order == 4
    assert pt.to_json() == {"q": ["1/4", "1/2"]}
    assert CharacterPoint.from_json(pt.to_json()) == pt
    assert str(pt) == "(i,-1)" and str(P("1/3", 0)) == "(e(1/3),1)"
    with pytest.raises(ZvkError):
        P(1, 0)
    with pytest.raises(SchemaError):
        CharacterPoint.from_json({"q": ["1/0"]})


def test_charvar_examples():
    assert charvar_points([T1 - 1, T2 - 1], 24) == [P(0, 0)]
    assert charvar_points([LaurentPoly.constant(2, 1)], 24) == []
    assert len(charvar_points([LaurentPoly.zero(2)], 3)) == 9
    with pytest.raises(ZvkError):
        charvar_points([T1], 0)


def test_charvar_jobs_agree():
    gens = fitting_ideal(alexander_matrix(two_generator_presentation(2), quartic_conic_labels()), 1, 2, 2)
    assert charvar_points(gens, 12, jobs=3) == charvar_points(gens, 12)


_ROOTS = st.tuples(st.integers(0, 11), st.integers(0, 11)).map(lambda q: P(Fraction(q[0], 12), Fraction(q[1], 12)))
_POLYS = st.dictionaries(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-4, 4),
                         max_size=4).map(lambda d: LaurentPoly(2, d))


@settings(max_examples=1000)
@given(_POLYS, _POLYS, _ROOTS)
def test_evaluate_is_a_ring_map(a, b, pt):
    assert evaluate(a * b, pt, 12) == evaluate(a, pt, 12) * evaluate(b, pt, 12)
    assert evaluate(a + b, pt, 12) == evaluate(a, pt, 12) + evaluate(b, pt, 12)


# one-variable specialization

def test_alexander_polynomial_examples():
    g1 = fitting_ideal(alexander_matrix(two_generator_presentation(1), quartic_conic_labels()), 1, 2, 2)
    assert alexander_polynomial(g1) == (-1, 1)
    assert alexander_polynomial([LaurentPoly.constant(2, 1)]) == (1,)
    assert alexander_polynomial([LaurentPoly.zero(2)]) == (0,)
    assert alexander_polynomial([T1 * T1 - T2 * T2]) == (0,)  # specializes to 0
    assert alexander_polynomial([(T1 - 1) * (T2 + 1), T1 * T1 - 1]) == (-1, 0, 1)
