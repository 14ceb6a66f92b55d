from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from zvkpair import geometry as geo
from zvkpair.errors import SchemaError, ZvkError


def test_orbit_classes():
    orb = geo.cubic_orbit_classes()
    assert orb.modulus == 12
    assert orb.classes == ((0, 4, 8), (2, 6, 10), (1, 3, 5, 7, 9, 11))
    flat = sorted(e for c in orb.classes for e in c)
    assert flat == list(range(12))
    for c in orb.classes:
        assert {(e + 4) % 12 for e in c} == set(c)
        assert {(-e) % 12 for e in c} == set(c)


def test_orbit_classes_solve_the_system():
    # t2 = exp(2 pi i e/12), t1 = t2^-2 satisfies t1 t2^2 = 1 and t1^7 t2^2 = 1
    for e in range(12):
        t1 = (-2 * e) % 12
        assert (t1 + 2 * e) % 12 == 0 and (7 * t1 + 2 * e) % 12 == 0


def test_homogeneity_enforced():
    with pytest.raises(ZvkError):
        geo.HomogeneousPoly({(1, 0, 0): 1, (0, 0, 0): 1})
    assert geo.CURVES["c1"].degree == 6 and geo.CURVES["c2"].degree == 6


@pytest.mark.parametrize("curve", ["c1", "c2"])
def test_stated_singular_points(curve):
    for pt, _ in geo.SINGULAR_POINTS[curve]:
        assert geo.singular_point_check(geo.CURVES[curve], pt)


def test_singular_points_of_components():
    assert geo.singular_point_check(geo.CURVES["c1_quartic"], (0, 0, 1))
    assert geo.singular_point_check(geo.CURVES["c2_quartic"], (0, 0, 1))
    # the A15 point of C2 is where the smooth conic and the smooth quartic touch
    assert not geo.singular_point_check(geo.CURVES["c2_quartic"], (0, 1, 0))
    assert geo.CURVES["c2_quartic"]((0, 1, 0)) == 0 and geo.CURVES["c2_conic"]((0, 1, 0)) == 0
    assert geo.singular_point_check(geo.CURVES["c2"], (0, 1, 0))


def test_smooth_point_of_conic():
    # 8z^2 - 20yz + 36xz + 17y^2 - 18xy vanishes at [1:0:0]
    c = geo.CURVES["c1_conic"]
    assert c((1, 0, 0)) == 0
    assert not geo.singular_point_check(c, (1, 0, 0))
    with pytest.raises(ZvkError):
        geo.singular_point_check(c, (0, 0, 0))


@settings(max_examples=200)
@given(st.integers(-5, 5).filter(bool))
def test_singularity_is_projective(lam):
    for curve, pts in geo.SINGULAR_POINTS.items():
        for pt, _ in pts:
            assert geo.singular_point_check(geo.CURVES[curve], tuple(lam * x for x in pt))


def test_polynomial_json():
    f = geo.CURVES["c2_conic"]
    assert geo.HomogeneousPoly.from_json(f.to_json()) == f


def test_discriminants():
    assert [geo.disc(geo.a_chain_lattice(k)) for k in (15, 3, 1)] == [16, 4, 2]
    assert geo.disc(geo.scalar_lattice(2)) == 2
    spec = {"summands": [{"type": "scalar", "value": 2}, {"type": "A", "k": 15},
                         {"type": "A", "k": 3}, {"type": "A", "k": 1}]}
    assert geo.disc(geo.lattice_from_spec(spec)) == 256
    with pytest.raises(SchemaError):
        geo.lattice_from_spec({"summands": [{"type": "E", "k": 8}]})
    with pytest.raises(ZvkError):
        geo.a_chain_lattice(0)
    with pytest.raises(ZvkError):
        geo.GramLattice(((1, 2), (3, 1)))


_GRAMS = st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(-4, 4), min_size=n * n, max_size=n * n).map(
    lambda v: geo.GramLattice(tuple(tuple(v[i * n + j] + v[j * n + i] for j in range(n)) for i in range(n)))))


@settings(max_examples=1000)
@given(_GRAMS, _GRAMS)
def test_disc_multiplicative_and_matches_sympy(a, b):
    assert geo.disc(a) == abs(int(Matrix(a.gram).det()))
    assert geo.disc(geo.direct_sum([a, b])) == geo.disc(a) * geo.disc(b)


def test_torsion_obstruction():
    assert geo.torsion_obstruction(256, 16, 8) == geo.OBSTRUCTED
    assert geo.torsion_obstruction(256, 4, 8) == geo.COMPATIBLE
    assert geo.torsion_obstruction(256, 16, 2) == geo.COMPATIBLE
    with pytest.raises(ZvkError):
        geo.torsion_obstruction(0, 1, 1)


@settings(max_examples=1000)
@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6))
def test_trivial_torsion_never_obstructs(d, ns):
    if ns <= d:
        assert geo.torsion_obstruction(d, ns, 1) == geo.COMPATIBLE


def test_q_relation_check():
    a1 = geo.a_chain_lattice(1)
    assert geo.q_relation_check(a1, [0], [0])
    assert not geo.q_relation_check(a1, [1], [0])
    with pytest.raises(ZvkError):
        geo.q_relation_check(a1, [1, 2], [])


def test_tangent_line_relation():
    g, names = geo.tangent_line_configuration()
    c = geo.tangent_line_relation()
    assert g.dimension == len(c) == 20 and names[0] == "L+"
    assert geo.q_relation_check(g, c, range(1, 20))
    perturbed = list(c)
    perturbed[2] += Fraction(1, 8)
    assert not geo.q_relation_check(g, perturbed, range(1, 20))
