"""Fox calculus and torsion points of the first characteristic variety.

Run with ``python3 demos/03_characteristic_varieties.py``.
"""
from zvkpair import alexander as alx
from zvkpair.cyclotomic import format_poly
from zvkpair.pipeline import quartic_conic_labels, zariski_pair
from zvkpair.zvk import two_generator_presentation

# %% Alexander matrix of <a, b | b^2 (ab)^-4>, a -> t1 (quartic), b -> t2 (conic).
p = two_generator_presentation(2)
m = alx.alexander_matrix(p, quartic_conic_labels())
for row in m:
    print([str(e) for e in row])

# %% F_1 is the augmentation ideal times the entries; scan 24-torsion points.
f1 = alx.fitting_ideal(m, 1, p.rank, 2)
pts = alx.charvar_points(f1, 24)
print("Char_1 torsion points:", [str(x) for x in pts])
print("as exponents q:", [x.to_json()["q"] for x in pts])
print("Alexander polynomial:", format_poly(alx.alexander_polynomial(f1)))

# %% The whole comparison, from braid monodromy to a verdict.
rep = zariski_pair()
for name, c in rep.outputs["curves"].items():
    print(f"{name}: Char_1 = {c['char1']}")
print("verdict:", rep.outputs["verdict"], f"({rep.wall_time:.1f}s)")
