"""Braid monodromy data: decomposition tables, composed monodromies, JSON I/O."""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import tables
from .braids import BraidWord, braids_equal, conjugate
from .errors import SchemaError, ZvkError
from .words import Word

BUNDLED_FIXTURES = Path(__file__).parent / "data"

_LABEL = re.compile(r"^(Gamma|alpha)_([0-9A-Za-z]+)(\+?)$")


@dataclass(frozen=True)
class DecompositionTable:
    strands: int
    rows: tuple[tuple[str, BraidWord], ...]

    @classmethod
    def from_rows(cls, strands: int, rows: Iterable[tuple[str, Sequence[int]]]) -> "DecompositionTable":
        return cls(strands, tuple((label, BraidWord(strands, tuple(letters))) for label, letters in rows))

    def points(self) -> list[tuple[BraidWord, BraidWord, BraidWord | None]]:
        """Group the rows into ``(Gamma_j, alpha_j, alpha_j+)`` triples.

        Only the last point may omit its ``alpha+`` row.
        """
        out = []
        rows = list(self.rows)
        pos = 0
        while pos < len(rows):
            kinds = []
            for offset in range(3):
                if pos + offset >= len(rows):
                    break
                m = _LABEL.match(rows[pos + offset][0])
                if m is None:
                    raise SchemaError(f"row {pos + offset}: unrecognised path label {rows[pos + offset][0]!r}")
                kinds.append(m)
            expected = [("Gamma", ""), ("alpha", ""), ("alpha", "+")]
            got = [(m.group(1), m.group(3)) for m in kinds]
            if got[:2] != expected[:2]:
                raise SchemaError(f"row {pos}: expected Gamma_j, alpha_j, got {[r[0] for r in rows[pos:pos + 2]]}")
            idx = kinds[0].group(2)
            if kinds[1].group(2) != idx:
                raise SchemaError(f"row {pos + 1}: alpha index {kinds[1].group(2)!r} does not match Gamma index {idx!r}")
            if len(got) == 3 and got[2] == expected[2]:
                if kinds[2].group(2) != idx:
                    raise SchemaError(f"row {pos + 2}: alpha+ index does not match {idx!r}")
                out.append((rows[pos][1], rows[pos + 1][1], rows[pos + 2][1]))
                pos += 3
            else:
                if pos + 2 != len(rows):
                    raise SchemaError(f"row {pos + 2}: missing alpha_{idx}+ before the next point")
                out.append((rows[pos][1], rows[pos + 1][1], None))
                pos += 2
        return out


@dataclass(frozen=True)
class MonodromyPresentation:
    strands: int
    braids: tuple[BraidWord, ...]
    component_of: Mapping[int, str]
    infinity_word: Word | None = None
    label: str = ""
    partial: bool = False

    def __post_init__(self):
        object.__setattr__(self, "braids", tuple(self.braids))
        object.__setattr__(self, "component_of", dict(self.component_of))
        for j, b in enumerate(self.braids):
            if b.strands != self.strands:
                raise SchemaError(f"braids[{j}]: has {b.strands} strands, expected {self.strands}")
        missing = [i for i in range(1, self.strands + 1) if i not in self.component_of]
        if missing:
            raise SchemaError(f"component_of: no component for meridians {missing}")
        extra = [i for i in self.component_of if not 1 <= i <= self.strands]
        if extra:
            raise SchemaError(f"component_of: meridian indices {extra} out of range")
        if self.infinity_word is not None and self.infinity_word.max_index > self.strands:
            raise SchemaError(f"infinity_word: uses generator {self.infinity_word.max_index} > {self.strands}")

    def components(self) -> list[str]:
        """Distinct component ids in order of first appearance."""
        seen: list[str] = []
        for i in range(1, self.strands + 1):
            if self.component_of[i] not in seen:
                seen.append(self.component_of[i])
        return seen

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "component_of": {str(i): self.component_of[i] for i in sorted(self.component_of)},
            "braids": [b.to_json() for b in self.braids],
            "infinity_word": None if self.infinity_word is None else self.infinity_word.to_json(),
            "label": self.label,
            "partial": self.partial,
        }

    @classmethod
    def from_json(cls, data) -> "MonodromyPresentation":
        if not isinstance(data, dict):
            raise SchemaError("monodromy document must be a JSON object")
        for key in ("strands", "component_of", "braids"):
            if key not in data:
                raise SchemaError(f"missing field {key!r}")
        strands = data["strands"]
        if not isinstance(strands, int) or strands < 2:
            raise SchemaError(f"strands: expected an integer >= 2, got {strands!r}")
        if not isinstance(data["braids"], list):
            raise SchemaError("braids: expected an array")
        braids = []
        for j, raw in enumerate(data["braids"]):
            try:
                braids.append(BraidWord.from_json(raw))
            except ZvkError as exc:
                raise SchemaError(f"braids[{j}]: {exc}") from exc
        comp = data["component_of"]
        if not isinstance(comp, dict):
            raise SchemaError("component_of: expected an object")
        try:
            component_of = {int(k): str(v) for k, v in comp.items()}
        except ValueError as exc:
            raise SchemaError(f"component_of: keys must be meridian indices ({exc})") from exc
        inf = data.get("infinity_word")
        try:
            infinity_word = None if inf is None else Word.from_json(inf)
        except ZvkError as exc:
            raise SchemaError(f"infinity_word: {exc}") from exc
        return cls(strands, tuple(braids), component_of, infinity_word,
                   str(data.get("label", "")), bool(data.get("partial", False)))


def compose_from_table(t: DecompositionTable, component_of: Mapping[int, str] | None = None,
                       infinity_word: Word | None = None, label: str = "",
                       partial: bool = False) -> MonodromyPresentation:
    """Braid monodromy of the standard loops gamma_1, ..., gamma_r.

    With beta_j = Gamma_1 alpha_1+ Gamma_2 ... alpha_{j-1}+ Gamma_j, the loop
    gamma_j maps to beta_j alpha_j beta_j^-1.
    """
    braids = []
    beta = BraidWord(t.strands)
    points = t.points()
    for gamma, alpha, alpha_plus in points:
        beta = beta * gamma
        braids.append(conjugate(beta, alpha))
        if alpha_plus is not None:
            beta = beta * alpha_plus
    if component_of is None:
        component_of = {i: "unknown" for i in range(1, t.strands + 1)}
    return MonodromyPresentation(t.strands, tuple(braids), component_of, infinity_word, label, partial)


def deformation_lhs(k: int) -> BraidWord:
    """sigma_1^(8-2k) sigma_3^(2k) sigma_2 sigma_1 sigma_3 sigma_2 in B_4."""
    return BraidWord.from_powers(4, (1, 8 - 2 * k), (3, 2 * k)) * BraidWord(4, (2, 1, 3, 2))


def deformation_product(k: int) -> BraidWord:
    """Literal product of the Gamma and alpha+ rows of the refinement table."""
    t = DecompositionTable.from_rows(4, tables.c2_a15_refinement_rows(k))
    out = BraidWord(4)
    for gamma, _, alpha_plus in t.points():
        out = out * gamma * alpha_plus
    return out


def solve_deformation_exponent(k_range: tuple[int, int] | range) -> set[int]:
    """All k in the (inclusive) range for which the deformed half-twist matches alpha_2+."""
    if isinstance(k_range, range):
        ks = list(k_range)
    else:
        lo, hi = k_range
        ks = list(range(lo, hi + 1))
    if any(not 0 <= k <= 8 for k in ks):
        raise ZvkError(f"k range must lie within 0..8, got {ks[0]}..{ks[-1]}")
    target = dict((label, b) for label, b in tables.C2_SPECIAL_ROWS)["alpha_2+"]
    target = BraidWord(4, tuple(target))
    return {k for k in ks if braids_equal(deformation_lhs(k), target)}


def table(name: str) -> DecompositionTable:
    if name == "c1_special":
        return DecompositionTable.from_rows(4, tables.C1_SPECIAL_ROWS)
    if name == "c2_special":
        return DecompositionTable.from_rows(4, tables.C2_SPECIAL_ROWS)
    if name == "generic_common":
        return DecompositionTable.from_rows(6, tables.GENERIC_COMMON_ROWS)
    if name == "c2_a15_refinement":
        return DecompositionTable.from_rows(4, tables.c2_a15_refinement_rows(2))
    raise KeyError(name)


def build_fixture(name: str) -> MonodromyPresentation:
    """Compose a bundled fixture directly from its decomposition table."""
    t = table(name)
    if name == "c1_special":
        return compose_from_table(t, tables.SEXTIC_COMPONENTS, Word(tuple(tables.C1_INFINITY_WORD)), name)
    if name == "c2_special":
        return compose_from_table(t, tables.SEXTIC_COMPONENTS, Word(tuple(tables.C2_INFINITY_WORD)), name)
    if name == "c2_a15_refinement":
        return compose_from_table(t, tables.SEXTIC_COMPONENTS, None, name, partial=True)
    return compose_from_table(t, None, None, name, partial=True)


FIXTURE_NAMES = ("c1_special", "c2_special", "generic_common", "c2_a15_refinement")


def fixture_dir() -> Path:
    env = os.environ.get("ZVK_FIXTURES")
    return Path(env) if env else BUNDLED_FIXTURES


def load_fixture(name: str) -> MonodromyPresentation:
    return load_monodromy(fixture_dir() / f"{name}.json")


def load_monodromy(path) -> MonodromyPresentation:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return MonodromyPresentation.from_json(data)


def store_monodromy(mp: MonodromyPresentation, path) -> None:
    Path(path).write_text(dumps(mp.to_json()))


def dumps(doc: dict) -> str:
    """Canonical JSON: sorted keys, one top-level field per line."""
    lines = [f" {json.dumps(k)}: {json.dumps(doc[k], sort_keys=True)}" for k in sorted(doc)]
    return "{\n" + ",\n".join(lines) + "\n}\n"
