"""End-to-end runs: monodromy -> presentation -> invariants.

:func:`curve_group` turns a bundled monodromy fixture into a simplified
presentation of the projective complement, and :func:`zariski_pair`
compares the two sextics by their first characteristic varieties.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import alexander as alx
from .errors import SchemaError
from .invariants import abelianization, fingerprint
from .monodromy import MonodromyPresentation, load_fixture
from .zvk import GroupPresentation, two_generator_presentation, projectivize, tietze_simplify, zvk_presentation

COMPONENT_ORDER = ("quartic", "conic")


@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict
    fitting_offset: int = alx.FITTING_OFFSET
    scan_order: int = alx.DEFAULT_SCAN_ORDER
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        doc = {"command": self.command, "inputs": self.inputs, "outputs": self.outputs,
               "convention": {"fitting_offset": self.fitting_offset,
                              "fitting_ideal": "augmentation ideal times (rank-k)-minors",
                              "scan_order": self.scan_order}}
        doc.update(self.extra)
        if timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc


def curve_group(mp: MonodromyPresentation, budget: int = 100_000) -> tuple[GroupPresentation, GroupPresentation]:
    """(full projective ZVK presentation, its Tietze simplification)."""
    p = zvk_presentation(mp)
    if mp.infinity_word is not None:
        p = projectivize(p, mp.infinity_word)
    return p, tietze_simplify(p, budget)


def label_by_names(p: GroupPresentation, component_of: Mapping[int, str],
                   order: Sequence[str] = COMPONENT_ORDER) -> alx.AbelianLabel:
    """Labels for a presentation whose generators are named ``a<i>``."""
    comps = []
    for name in p.names:
        try:
            comps.append(component_of[int(name.lstrip("a"))])
        except (ValueError, KeyError):
            raise SchemaError(f"generator {name!r} is not a named meridian") from None
    return alx.AbelianLabel.by_component(comps, order)


def quartic_conic_labels() -> alx.AbelianLabel:
    """a around the quartic, b around the conic."""
    return alx.AbelianLabel.by_component(["quartic", "conic"], COMPONENT_ORDER)


def char1(p: GroupPresentation, lab: alx.AbelianLabel, n: int = alx.DEFAULT_SCAN_ORDER,
          jobs: int = 1) -> list[alx.CharacterPoint]:
    return alx.char_variety(p, lab, 1, n, jobs)


def curve_summary(name: str, n: int = alx.DEFAULT_SCAN_ORDER, jobs: int = 1) -> dict:
    mp = load_fixture(name)
    _, g = curve_group(mp)
    lab = label_by_names(g, mp.component_of)
    f1 = alx.fitting_ideal(alx.alexander_matrix(g, lab), 1, g.rank, lab.nvars)
    pts = alx.charvar_points(f1, n, lab.nvars, jobs)
    return {
        "presentation": str(g),
        "abelianization": str(abelianization(g)),
        "char1": [str(pt) for pt in pts],
        "char1_q": [pt.to_json()["q"] for pt in pts],
        "alexander_polynomial": list(alx.alexander_polynomial(f1)),
    }


def zariski_pair(n: int = alx.DEFAULT_SCAN_ORDER, jobs: int = 1, max_order: int = 0) -> RunReport:
    """Compare the two sextics; DISTINCT when their Char_1 sets differ.

    With ``max_order > 0`` the finite-quotient fingerprints are compared
    too; they are reported but never decide the verdict.
    """
    t0 = time.perf_counter()
    curves = {name: curve_summary(name, n, jobs) for name in ("c1_special", "c2_special")}
    a, b = (curves[k]["char1"] for k in ("c1_special", "c2_special"))
    outputs: dict = {"curves": curves, "verdict": "DISTINCT" if a != b else "UNDECIDED"}
    if max_order:
        prints = {}
        for name in curves:
            _, g = curve_group(load_fixture(name))
            prints[name] = fingerprint(g, max_order, jobs=jobs)
        f1, f2 = prints["c1_special"], prints["c2_special"]
        outputs["fingerprint_differences"] = {
            k: [f1[k], f2[k]] for k in sorted(f1) if f1[k] != f2[k]}
    return RunReport("zariski-pair", {"fixtures": sorted(curves)}, outputs,
                     scan_order=n, wall_time=time.perf_counter() - t0)

