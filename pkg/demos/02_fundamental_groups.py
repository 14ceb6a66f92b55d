"""From monodromy to group presentations and cheap invariants.

Run with ``python3 demos/02_fundamental_groups.py`` (about ten seconds).
"""
from zvkpair.invariants import abelianization, catalog, fingerprint
from zvkpair.monodromy import load_fixture
from zvkpair.pipeline import curve_group
from zvkpair.zvk import two_generator_presentation

groups = {}
for name in ("c1_special", "c2_special"):
    full, simple = curve_group(load_fixture(name))
    groups[name] = simple
    print(f"{name}: {full.rank} generators / {len(full.relators)} relators "
          f"-> {simple.rank} / {len(simple.relators)}")
    print("   ", simple)
    print("    abelianization:", abelianization(simple))

# %% The second group is <a, b | b^2 = (ab)^4>; compare finite quotients.
small = catalog(8)
ref = two_generator_presentation(2)
same = fingerprint(groups["c2_special"], groups=small) == fingerprint(ref, groups=small)
print("\nc2 group agrees with <a,b | b^2=(ab)^4> on all quotients of order <= 8:", same)

# %% Both groups have abelianization Z + Z/2, yet they count homomorphisms
# into small groups differently.
f1, f2 = (fingerprint(groups[n], 16) for n in ("c1_special", "c2_special"))
print("\n|Hom(G, Q)|       G1    G2")
for label in sorted(f1):
    if f1[label] != f2[label]:
        print(f"  {label:12s} {f1[label]:5d} {f2[label]:5d}")
