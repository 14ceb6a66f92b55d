"""Command-line front end.

Every command reads JSON files and prints canonical JSON (sorted keys) on
stdout.  Exit codes: 0 success / true, 1 logical false, 2 bad input.
Errors are reported as ``{"error": ..., "message": ...}`` on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import alexander as alx
from . import geometry as geo
from .braids import BraidWord, braids_equal
from .errors import SchemaError, ZvkError
from .invariants import abelianization, fingerprint
from .monodromy import load_monodromy, solve_deformation_exponent
from .pipeline import RunReport, zariski_pair
from .zvk import load_presentation, projectivize, tietze_simplify, zvk_presentation


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def _report(args, command: str, inputs: dict, outputs, t0: float) -> int:
    rep = RunReport(command, inputs, outputs, scan_order=getattr(args, "order", alx.DEFAULT_SCAN_ORDER),
                    wall_time=time.perf_counter() - t0)
    _emit(rep.to_json(timing=False))
    print(f"wall time {rep.wall_time:.3f}s", file=sys.stderr)
    return 0


def cmd_present(args) -> int:
    mp = load_monodromy(args.monodromy)
    p = zvk_presentation(mp)
    if args.projective:
        if mp.infinity_word is None:
            raise SchemaError("--projective needs an infinity_word in the monodromy document")
        p = projectivize(p, mp.infinity_word)
    _emit(p.to_json())
    return 0


def cmd_simplify(args) -> int:
    _emit(tietze_simplify(load_presentation(args.presentation), args.budget).to_json())
    return 0


def cmd_abelianize(args) -> int:
    ab = abelianization(load_presentation(args.presentation))
    _emit({**ab.to_json(), "group": str(ab)})
    return 0


def cmd_homcount(args) -> int:
    t0 = time.perf_counter()
    p = load_presentation(args.presentation)
    return _report(args, "homcount", {"presentation": args.presentation, "max_order": args.max_order},
                   fingerprint(p, args.max_order, jobs=args.jobs), t0)


def _labels(path) -> alx.AbelianLabel:
    return alx.AbelianLabel.from_json(_read_json(path))


def cmd_charvar(args) -> int:
    t0 = time.perf_counter()
    p = load_presentation(args.presentation)
    lab = _labels(args.labels)
    if not 0 <= args.k <= p.rank:
        raise InputError(f"-k must lie in 0..{p.rank}")
    pts = alx.char_variety(p, lab, args.k, args.order, args.jobs)
    return _report(args, "charvar", {"presentation": args.presentation, "k": args.k},
                   {"points": [pt.to_json() for pt in pts], "display": [str(pt) for pt in pts]}, t0)


def cmd_alexpoly(args) -> int:
    from .cyclotomic import format_poly
    p = load_presentation(args.presentation)
    lab = _labels(args.labels)
    gens = alx.fitting_ideal(alx.alexander_matrix(p, lab), args.k, p.rank, lab.nvars)
    poly = alx.alexander_polynomial(gens)
    _emit({"coefficients": list(poly), "polynomial": format_poly(poly)})
    return 0


def cmd_braid_eq(args) -> int:
    a = BraidWord.from_json(_read_json(args.b1))
    b = BraidWord.from_json(_read_json(args.b2))
    same = braids_equal(a, b)
    _emit({"equal": same})
    return 0 if same else 1


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise InputError(f"range must look like a..b, got {text!r}") from None
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return lo, hi


def cmd_deform_solve(args) -> int:
    lo, hi = _parse_range(args.range)
    _emit({"range": [lo, hi], "solutions": sorted(solve_deformation_exponent((lo, hi)))})
    return 0


def cmd_orbits(args) -> int:
    _emit(geo.cubic_orbit_classes().to_json())
    return 0


def cmd_lattice(args) -> int:
    if args.action == "disc":
        if not args.spec:
            raise InputError("lattice disc needs a spec file")
        lat = geo.lattice_from_spec(_read_json(args.spec))
        _emit({"dimension": lat.dimension, "disc": geo.disc(lat)})
    else:
        if None in (args.disc_t, args.disc_ns, args.n):
            raise InputError("lattice obstruct needs --disc-t, --disc-ns and -n")
        _emit({"disc_t": args.disc_t, "disc_ns": args.disc_ns, "n": args.n,
               "verdict": geo.torsion_obstruction(args.disc_t, args.disc_ns, args.n)})
    return 0


def cmd_zariski_pair(args) -> int:
    rep = zariski_pair(args.order, args.jobs, args.max_order)
    _emit(rep.to_json(timing=False))
    print(f"wall time {rep.wall_time:.3f}s", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="zvk", description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1, help="worker processes (output does not depend on it)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("present", help="ZVK presentation of a monodromy document")
    s.add_argument("monodromy")
    s.add_argument("--projective", action="store_true")
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("simplify", help="Tietze simplification")
    s.add_argument("presentation")
    s.add_argument("--budget", type=int, default=100_000)
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("abelianize")
    s.add_argument("presentation")
    s.set_defaults(func=cmd_abelianize)

    s = sub.add_parser("homcount", help="homomorphism counts into small groups")
    s.add_argument("presentation")
    s.add_argument("--max-order", type=int, default=16)
    s.set_defaults(func=cmd_homcount)

    s = sub.add_parser("charvar", help="torsion points of a characteristic variety")
    s.add_argument("presentation")
    s.add_argument("--labels", required=True)
    s.add_argument("-k", type=int, default=1)
    s.add_argument("--order", type=int, default=alx.DEFAULT_SCAN_ORDER)
    s.set_defaults(func=cmd_charvar)

    s = sub.add_parser("alexpoly", help="one-variable Alexander polynomial of F_k")
    s.add_argument("presentation")
    s.add_argument("--labels", required=True)
    s.add_argument("-k", type=int, default=1)
    s.set_defaults(func=cmd_alexpoly)

    s = sub.add_parser("braid")
    bsub = s.add_subparsers(dest="braid_command", required=True, parser_class=_Parser)
    e = bsub.add_parser("eq", help="exit 0 if the braids are equal, 1 otherwise")
    e.add_argument("b1")
    e.add_argument("b2")
    e.set_defaults(func=cmd_braid_eq)

    s = sub.add_parser("deform-solve")
    s.add_argument("--range", default="0..8")
    s.set_defaults(func=cmd_deform_solve)

    s = sub.add_parser("orbits")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("lattice")
    s.add_argument("action", choices=["disc", "obstruct"])
    s.add_argument("spec", nargs="?")
    s.add_argument("--disc-t", type=int)
    s.add_argument("--disc-ns", type=int)
    s.add_argument("-n", type=int)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("zariski-pair", help="full comparison of the two bundled sextics")
    s.add_argument("--order", type=int, default=alx.DEFAULT_SCAN_ORDER)
    s.add_argument("--max-order", type=int, default=0, help="also compare hom counts up to this order")
    s.set_defaults(func=cmd_zariski_pair)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InputError, ZvkError, OSError) as exc:
        kind = "usage" if isinstance(exc, InputError) else type(exc).__name__
        print(json.dumps({"error": kind, "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
