"""Command line interface.

Subcommands: separate-box, separate-2d, family, check-cond, verify, plot.
Exit codes: 0 when separated or valid, 2 for a clean negative (not
separable, condition violated), 1 on any error.  All JSON output is
byte-deterministic.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import Point
from .convex import Box, GeneratedConvexSet, box_intersects_hull, bounding_box, hull_contains
from .errors import MaxMinError, ParseError
from .oracle import Grid
from .semispaces import (
    HemispaceDescriptor,
    SemispaceDescriptor,
    hemispace_avoids_box,
    hemispace_contains,
    semispace_avoids_box,
    semispace_contains,
    semispace_family,
    set_in_semispace,
)
from .separation import (
    HEMISPACE,
    NOT_SEPARABLE,
    SEMISPACE,
    assert_nonseparable,
    box_profile,
    check_sep_cond,
    separate_box,
)
from .planar import separate_box_semispace, separate_two_sets
from . import serialize
from .svg import render_scene


def _load_instance(path: str) -> serialize.Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return serialize.parse_instance(fh.read())


def _emit(document: dict, out_path: str | None) -> None:
    text = serialize.dumps(document)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _single_set(inst: serialize.Instance) -> GeneratedConvexSet:
    if not inst.sets:
        raise ParseError("the instance defines no generated set")
    return inst.set_list()[0]


def _two_sets(inst: serialize.Instance) -> tuple[GeneratedConvexSet, GeneratedConvexSet]:
    if len(inst.sets) < 2:
        raise ParseError("two generated sets are required, in document order")
    first, second = inst.set_list()[:2]
    return first, second


def _cmd_separate_box(args) -> int:
    inst = _load_instance(args.instance)
    if inst.box is None:
        raise ParseError("separate-box needs a box in the instance")
    C = _single_set(inst)
    fallback = inst.options.fallback and not args.no_fallback
    cert = separate_box(inst.box, C, with_fallback=fallback)
    _emit(serialize.certificate_to_dict(cert, inst), args.output)
    return 0 if cert.separated else 2


def _cmd_separate_2d(args) -> int:
    inst = _load_instance(args.instance)
    C1, C2 = _two_sets(inst)
    if args.with_semispace:
        cert, S = separate_box_semispace(C1, C2)
    else:
        cert, S = separate_two_sets(C1, C2), None
    _emit(serialize.planar_certificate_to_dict(cert, inst, S), args.output)
    return 0


def _cmd_family(args) -> int:
    x0 = Point(tuple(serialize.parse_scalar(part) for part in args.point.split(",")))
    family = semispace_family(x0)
    document = {
        "x0": serialize.point_to_list(x0),
        "family": [serialize.descriptor_to_dict(S) for S in family],
    }
    _emit(document, None)
    return 0


def _cmd_check_cond(args) -> int:
    inst = _load_instance(args.instance)
    if inst.box is None:
        raise ParseError("check-cond needs a box in the instance")
    C = _single_set(inst)
    witness = check_sep_cond(inst.box, C)
    document = {
        "holds": witness is None,
        "witness": serialize.point_to_list(witness) if witness is not None else None,
    }
    _emit(document, None)
    return 0 if witness is None else 2


def _check(checks: list, name: str, ok: bool) -> None:
    checks.append({"check": name, "ok": bool(ok)})


def _verify_box_certificate(data: dict, inst: serialize.Instance, grid: Grid, checks: list) -> None:
    if inst.box is None:
        raise ParseError("certificate instance lacks a box")
    B = inst.box
    C = _single_set(inst)
    outcome = data.get("outcome")
    if outcome == SEMISPACE:
        S = serialize.descriptor_from_dict(data["separator"])
        if isinstance(S, HemispaceDescriptor):
            raise ParseError("semispace outcome carries a hemispace descriptor")
        _check(checks, "set inside separator", set_in_semispace(C, S) is None)
        _check(checks, "separator misses box", semispace_avoids_box(S, B))
        _check(
            checks,
            "grid hull points inside separator",
            all(semispace_contains(S, p) for p in grid.points() if hull_contains(C, p)),
        )
        _check(
            checks,
            "no grid box point inside separator",
            not any(semispace_contains(S, p) for p in grid.points() if B.contains_point(p)),
        )
    elif outcome == HEMISPACE:
        H = serialize.descriptor_from_dict(data["separator"])
        if not isinstance(H, HemispaceDescriptor):
            raise ParseError("hemispace outcome carries a semispace descriptor")
        _check(checks, "set inside separator", set_in_semispace(C, H) is None)
        _check(checks, "separator misses box", hemispace_avoids_box(H, B))
        _check(
            checks,
            "grid hull points inside separator",
            all(hemispace_contains(H, p) for p in grid.points() if hull_contains(C, p)),
        )
    elif outcome == NOT_SEPARABLE:
        witness = serialize.point_from_list(data["witness"])
        profile = box_profile(B)
        pos_of = {o: p for p, o in enumerate(profile.upper_perm, start=1)}
        _check(checks, "witness in hull", hull_contains(C, witness))
        _check(checks, "witness dominates box lower bounds", B.lower <= witness)
        exceed = [i for i in range(B.dim) if witness[i] > B.upper[i]]
        _check(
            checks,
            "witness escapes inside the profile threshold",
            bool(exceed) and all(pos_of[i] <= profile.t for i in exceed),
        )
        _check(
            checks,
            "no grid semispace separates",
            assert_nonseparable(B, C, Fraction(1, grid.denominator)),
        )
    else:
        raise ParseError(f"unknown certificate outcome {outcome!r}")


def _verify_two_set_certificate(data: dict, inst: serialize.Instance, grid: Grid, checks: list) -> None:
    C1, C2 = _two_sets(inst)
    boxed = int(data.get("boxed_set", 0))
    if boxed not in (1, 2):
        raise ParseError("two-set certificate needs boxed_set 1 or 2")
    box = serialize.box_from_dict(data["box"])
    inner, other = (C1, C2) if boxed == 1 else (C2, C1)
    bb = bounding_box(inner)
    _check(checks, "box contains its set", box.lower <= bb.lower and bb.upper <= box.upper)
    _check(checks, "box misses the other hull", not box_intersects_hull(box, other))
    _check(
        checks,
        "no grid point of the other hull in the box",
        not any(box.contains_point(p) for p in grid.points() if hull_contains(other, p)),
    )
    if data.get("semispace") is not None:
        S = serialize.descriptor_from_dict(data["semispace"])
        if isinstance(S, HemispaceDescriptor):
            raise ParseError("two-set certificates carry plain semispaces")
        _check(checks, "other set inside semispace", set_in_semispace(other, S) is None)
        _check(checks, "semispace misses the box", semispace_avoids_box(S, box))
        _check(
            checks,
            "no grid box point inside semispace",
            not any(semispace_contains(S, p) for p in grid.points() if box.contains_point(p)),
        )


def _cmd_verify(args) -> int:
    with open(args.certificate, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "instance" not in data:
        raise ParseError("certificate files carry their instance")
    inst = serialize.instance_from_dict(data["instance"])
    d = args.grid if args.grid else inst.options.grid
    grid = Grid(d, inst.dimension)
    checks: list[dict] = []
    kind = data.get("kind")
    if kind == "box":
        _verify_box_certificate(data, inst, grid, checks)
    elif kind == "two-set":
        _verify_two_set_certificate(data, inst, grid, checks)
    else:
        raise ParseError(f"unknown certificate kind {kind!r}")
    valid = all(c["ok"] for c in checks)
    _emit({"valid": valid, "grid": d, "checks": checks}, None)
    return 0 if valid else 1


def _cmd_plot(args) -> int:
    inst = _load_instance(args.instance)
    if inst.dimension != 2:
        raise ParseError("plot renders planar instances only")
    separator = None
    cert_box = None
    if args.certificate:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}") from None
        if data.get("separator") is not None:
            separator = serialize.descriptor_from_dict(data["separator"])
        if data.get("semispace") is not None:
            separator = serialize.descriptor_from_dict(data["semispace"])
        if data.get("box") is not None:
            cert_box = serialize.box_from_dict(data["box"])
    scene = render_scene(
        inst.box,
        inst.sets,
        separator=separator,
        certificate_box=cert_box,
        grid_denominator=args.grid if args.grid else inst.options.grid,
    )
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(scene)
    sys.stdout.write(f"wrote {args.output}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxminsep",
        description="Exact max-min convex separation on the unit cube.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("separate-box", help="separate a box from a generated set")
    p.add_argument("-i", "--instance", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--no-fallback", action="store_true", help="skip the hemispace stage")
    p.set_defaults(handler=_cmd_separate_box)

    p = sub.add_parser("separate-2d", help="separate two planar generated sets")
    p.add_argument("-i", "--instance", required=True)
    p.add_argument("-o", "--output")
    p.add_argument(
        "--with-semispace",
        action="store_true",
        help="also wrap the unboxed set in a semispace (interior sets only)",
    )
    p.set_defaults(handler=_cmd_separate_2d)

    p = sub.add_parser("family", help="list the semispaces at a point")
    p.add_argument("-p", "--point", required=True, help='coordinates like "0.6,0.3"')
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("check-cond", help="check the box-side separability condition")
    p.add_argument("-i", "--instance", required=True)
    p.set_defaults(handler=_cmd_check_cond)

    p = sub.add_parser("verify", help="re-check a certificate with the grid referee")
    p.add_argument("-i", "--certificate", required=True)
    p.add_argument("--grid", type=int, default=0, help="grid denominator (default: instance option)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("plot", help="render a planar instance to SVG")
    p.add_argument("-i", "--instance", required=True)
    p.add_argument("-c", "--certificate")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--grid", type=int, default=0, help="hull sampling denominator")
    p.set_defaults(handler=_cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (MaxMinError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
