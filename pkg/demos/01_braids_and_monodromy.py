"""Braids acting on free groups, and monodromy assembled from a table.

Run with ``python3 demos/01_braids_and_monodromy.py``.
"""
from zvkpair.braids import BraidWord, artin_action, braids_equal, writhe
from zvkpair.monodromy import load_fixture, solve_deformation_exponent, deformation_lhs
from zvkpair.words import Word

# %% The Artin action.  sigma_1 moves x1 to x2 and conjugates x2 by it.
s1 = BraidWord(3, (1,))
for i in (1, 2, 3):
    print(f"x{i} ^ s1 =", artin_action(s1, Word((i,))).letters)

# Braid words are compared by their action, so the braid relation holds:
print("s1 s2 s1 == s2 s1 s2:", braids_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2))))

# and the product x3 x2 x1 is fixed by every braid.
b = BraidWord(3, (1, -2, 2, 2, -1))
print("x3 x2 x1 fixed:", artin_action(b, Word((3, 2, 1))) == Word((3, 2, 1)))

# %% Monodromy of the two sextics.  Each braid is the loop around one
# discriminant point: an approach path, a local braid, and back.
for name in ("c1_special", "c2_special"):
    mp = load_fixture(name)
    print(f"\n{name}: {len(mp.braids)} braids on {mp.strands} strands")
    for j, br in enumerate(mp.braids, start=1):
        print(f"  gamma_{j}: length {len(br):3d}, writhe {writhe(br):3d}")

# %% Deforming the deep tangency point of the second sextic splits its
# local braid into three pieces; only one exponent k glues them back.
print("\nk with matching half-twist in 0..8:", solve_deformation_exponent((0, 8)))
print("closed form for k=2:", deformation_lhs(2))
