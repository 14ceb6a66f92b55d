"""Orbits of torsion characters and the lattice obstruction to a D16 cover.

Run with ``python3 demos/04_lattices.py``.
"""
from zvkpair import geometry as geo

# %% Characters with t1 t2^2 = t1^7 t2^2 = 1 are t2 = exp(2 pi i e / 12);
# up to t2 -> t2 zeta_3 and conjugation they fall into three classes,
# matching t^12 - 1 = (t^3 - 1)(t^3 + 1)(t^6 + 1).
for cls in geo.cubic_orbit_classes().classes:
    print("class", cls)

# %% The stated singular points of both sextics really are singular.
for curve, pts in geo.SINGULAR_POINTS.items():
    for pt, kind in pts:
        print(curve, pt, kind, geo.singular_point_check(geo.CURVES[curve], pt))

# %% T = <2> + A15 + A3 + A1 for the first sextic.  An 8-torsion quotient
# NS/T would force disc(NS) <= disc(T)/64, but disc(NS) is 16.
T = geo.direct_sum([geo.scalar_lattice(2), geo.a_chain_lattice(15), geo.a_chain_lattice(3),
                    geo.a_chain_lattice(1)])
d = geo.disc(T)
print("\ndisc(T) =", d, "-> disc(T)/64 =", d // 64)
print("D16 cover for the first sextic:", geo.torsion_obstruction(d, 16, 8))

# %% For the second sextic the tangent-line component L+ is a rational
# combination of the exceptional curves; check the class has square 0 and
# is orthogonal to T.
g, names = geo.tangent_line_configuration()
print("relation holds:", geo.q_relation_check(g, geo.tangent_line_relation(), range(1, g.dimension)))
