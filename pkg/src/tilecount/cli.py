"""Command-line interface: counting, sequence tables, verification, rendering.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import count2d, identities, regions2d, sequences, solid3d
from .regions2d import Region2D
from .solid3d import Prism3D


def _json_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def parse_region_spec(spec: str) -> Region2D | Prism3D:
    """Turn a builder token like ``rect:3,4`` or ``@shape.txt`` into a region.

    Tokens: rect:R,C  a:n  b:n  c:n  l2:n,k  l3:n,k[,orient]  tower:n
    mtower:n, plus ``@path`` for an ASCII region file.
    """
    if spec.startswith("@"):
        return regions2d.from_ascii(Path(spec[1:]).read_text())
    token, sep, argtext = spec.partition(":")
    if not sep:
        raise ValueError(f"malformed region spec {spec!r}; expected token:args")
    args = argtext.split(",") if argtext else []

    def ints(count: int) -> list[int]:
        if len(args) != count:
            raise ValueError(
                f"spec {token!r} takes {count} argument(s), got {len(args)}"
            )
        try:
            return [int(a) for a in args]
        except ValueError:
            raise ValueError(f"non-integer argument in spec {spec!r}") from None

    if token == "rect":
        rows, cols = ints(2)
        return regions2d.rect(rows, cols)
    if token == "a":
        return regions2d.a_grid(*ints(1))
    if token == "b":
        return regions2d.b_grid(*ints(1))
    if token == "c":
        return regions2d.c_grid(*ints(1))
    if token == "l2":
        n, k = ints(2)
        return regions2d.l2_region(n, k)
    if token == "l3":
        orientation = "SW"
        if len(args) == 3:
            orientation = args.pop().upper()
        n, k = ints(2)
        return regions2d.l3_region(n, k, orientation)
    if token == "tower":
        return solid3d.tower(*ints(1))
    if token == "mtower":
        return solid3d.m_tower(*ints(1))
    raise ValueError(f"unknown region token {token!r}")


def cmd_count(args) -> int:
    try:
        region = parse_region_spec(args.spec)
        if isinstance(region, Prism3D):
            cells = region.cell_count
            count = solid3d.count_bricks(region)
        else:
            cells = region.cell_count
            count = count2d.count_tilings(region)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(_json_line({"spec": args.spec, "cells": cells, "count": str(count)}))
    else:
        print(count)
    return 0


def cmd_seq(args) -> int:
    fams = sequences.catalog()
    family = fams.get(args.family)
    if family is None:
        print(f"error: unknown family {args.family!r}; known: {' '.join(fams)}", file=sys.stderr)
        return 2
    if args.method == "closed" and family.closed is None:
        print(f"error: family {args.family} has no closed form", file=sys.stderr)
        return 2
    if args.start < family.start:
        print(
            f"error: family {args.family} starts at index {family.start}", file=sys.stderr
        )
        return 2
    if args.end < args.start:
        print("error: empty range", file=sys.stderr)
        return 2
    for n in range(args.start, args.end + 1):
        value = family.eval(n, args.method)
        if args.json:
            print(_json_line({"family": family.name, "n": n, "value": str(value)}))
        else:
            print(f"{n}\t{value}")
    return 0


def cmd_verify(args) -> int:
    bounds: dict[str, int] = {}
    if args.max is not None:
        bounds["max_n"] = args.max
    if args.max_n is not None:
        bounds["max_n"] = args.max_n
    if args.max_k is not None:
        bounds["max_k"] = args.max_k
    try:
        if args.suite == "all":
            if bounds:
                print("error: 'verify all' runs fixed default bounds", file=sys.stderr)
                return 2
            report = identities.verify_all()
        else:
            report = identities.SUITES[args.suite](**bounds)
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        for record in report.records():
            print(_json_line(record))
        print(
            _json_line(
                {
                    "suite": args.suite,
                    "checks": len(report.checks),
                    "failed": len(report.failures),
                }
            )
        )
    else:
        print(report.to_text())
    return 0 if report.all_passed else 1


def cmd_render(args) -> int:
    try:
        region = parse_region_spec(args.spec)
        if isinstance(region, Prism3D):
            raise ValueError("render supports 2D regions only")
        tilings = count2d.enumerate_tilings(region, args.limit)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for i, tiling in enumerate(tilings):
        if i:
            print()
        print(count2d.render_tiling_ascii(tiling))
    return 0


def cmd_bfile(args) -> int:
    fams = sequences.catalog()
    family = fams.get(args.family)
    if family is None:
        print(f"error: unknown family {args.family!r}; known: {' '.join(fams)}", file=sys.stderr)
        return 2
    if args.to < family.start:
        print(
            f"error: family {args.family} starts at index {family.start}", file=sys.stderr
        )
        return 2
    for n, value in zip(
        range(family.start, args.to + 1),
        sequences.rec_values(family.recurrence, family.start, args.to),
    ):
        print(f"{n} {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecount",
        description="Exact domino and brick tiling counts for grid regions and prisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count tilings of a region or prism")
    p_count.add_argument("spec", help="region spec, e.g. rect:3,4 a:2 l3:2,2 tower:5 @file")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_seq = sub.add_parser("seq", help="print a sequence family over an index range")
    p_seq.add_argument("family", help="family token: F A B C T M L3 L2D")
    p_seq.add_argument("start", type=int)
    p_seq.add_argument("end", type=int)
    p_seq.add_argument("--method", choices=("iter", "matpow", "closed"), default="iter")
    p_seq.add_argument("--json", action="store_true")
    p_seq.set_defaults(func=cmd_seq)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=tuple(identities.SUITES) + ("all",))
    p_verify.add_argument("--max", type=int, default=None, help="index bound")
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_verify.add_argument("--max-k", type=int, default=None, dest="max_k")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_render = sub.add_parser("render", help="draw tilings of a small 2D region")
    p_render.add_argument("spec")
    p_render.add_argument("--limit", type=int, default=10)
    p_render.set_defaults(func=cmd_render)

    p_bfile = sub.add_parser("bfile", help="emit OEIS-style 'n a(n)' lines")
    p_bfile.add_argument("family")
    p_bfile.add_argument("--to", type=int, required=True)
    p_bfile.set_defaults(func=cmd_bfile)

    return parser


def main(argv=None) -> int:
    # counts routinely exceed the default int-to-str conversion limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream consumer (e.g. `| head`) closed the pipe; not an error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
