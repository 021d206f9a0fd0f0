"""Command-line interface.

Every command reads and writes JSON documents (files or stdin/stdout).
Failures exit with status 1 and print ``{"error": ..., "message": ...,
"details": ...}`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cutting import CutSpec, cut_delzant3, cut_u2
from .errors import DocumentError, HamXRayError
from .obstruction import tolman_check
from .render import render
from .scenarios import (
    DEFAULT_LAMBDA,
    HnParams,
    gelfand_cetlin,
    hirzebruch,
    hn_sweep,
    m1_flag,
    m2_toric,
    tolman_fixture,
)
from .serialize import decode, document, encode
from .xray import chamber_to_xray, flag_xray, toric_xray


class UsageError(HamXRayError):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    """Reports bad arguments with the same JSON contract as every other failure."""

    def error(self, message):
        print(json.dumps(UsageError(message, usage=self.format_usage().strip()).to_dict()), file=sys.stderr)
        sys.exit(1)


def _rationals(text):
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from exc


def _ints(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational, got {text!r}") from exc


def _read(path, kind):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError(f"cannot read {path}: {exc.strerror}", path=path) from exc
    doc = decode(text)
    if doc.kind not in kind:
        raise DocumentError(f"expected a {' or '.join(kind)} document, got {doc.kind!r}", path="$.kind")
    return doc


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _emit(args, kind, payload, provenance):
    _write(encode(document(kind, payload, provenance)), args.out)


def cmd_xray(args):
    if args.source == "flag":
        lam = args.lam or DEFAULT_LAMBDA
        _emit(args, "xray", flag_xray(lam), f"flag orbit lambda={','.join(map(str, lam))}")
    elif args.source == "toric":
        doc = _read(args.file, ("polytope3",))
        _emit(args, "xray", toric_xray(doc.payload), f"toric x-ray of {args.file}")
    else:
        doc = _read(args.file, ("chamber",))
        _emit(args, "xray", chamber_to_xray(doc.payload), f"chamber x-ray of {args.file}")


def cmd_cut(args):
    if (args.chamber is None) == (args.polytope is None):
        raise UsageError("give exactly one of --chamber and --polytope")
    spec = CutSpec(args.circle, args.level)
    desc = f"cut <v,({','.join(map(str, args.circle))})> <= {args.level}"
    if args.chamber is not None:
        doc = _read(args.chamber, ("chamber",))
        report = cut_u2(doc.payload, spec)
        _emit(args, "chamber", report.result, f"{desc} of {args.chamber}")
    else:
        doc = _read(args.polytope, ("polytope3",))
        report = cut_delzant3(doc.payload, spec)
        _emit(args, "polytope3", report.result, f"{desc} of {args.polytope}")
    if report.notes:
        for note in report.notes:
            print(f"note: {note}", file=sys.stderr)


def cmd_check(args):
    doc = _read(args.xray, ("xray",))
    _emit(args, "verdict", tolman_check(doc.payload), f"tolman check of {args.xray}")


def cmd_scenario(args):
    name = args.name
    if name == "sweep":
        rows = hn_sweep(args.n_from, args.n_to)
        _emit(args, "sweep", rows, f"H_n sweep {args.n_from}..{args.n_to}")
        return
    if name == "m1":
        lam = args.lam or DEFAULT_LAMBDA
        _emit(args, "xray", m1_flag(lam), "M1: flag variety")
        return
    if name == "m2":
        sc = m2_toric()
        if args.emit == "polytope":
            _emit(args, "polytope3", sc.polytope, "M2: toric variety")
        else:
            _emit(args, "xray", sc.xray, "M2: toric variety")
        return
    if name == "gc":
        _emit(args, "chamber", gelfand_cetlin(args.lam or DEFAULT_LAMBDA), "Gelfand-Cetlin chamber data")
        return
    if name == "fixture":
        _emit(args, "xray", tolman_fixture(), "hand-transcribed Tolman X-ray")
        return
    if name == "m3":
        n = 2
    else:
        if args.n is None:
            raise UsageError("scenario hn needs --n")
        n = args.n
    if args.lam is not None or args.level is not None:
        base = HnParams.default(n)
        params = HnParams(n, args.lam or base.lam, base.level if args.level is None else args.level)
    else:
        params = HnParams.default(n)
    space = hirzebruch(params)
    prov = f"H_{n}: lambda={','.join(map(str, params.lam))} level={params.level}"
    emit = args.emit or "verdict"
    if emit == "chamber":
        _emit(args, "chamber", space.chamber, prov)
    elif emit == "xray":
        _emit(args, "xray", space.xray, prov)
    elif emit == "verdict":
        _emit(args, "verdict", space.verdict, prov)
    else:
        raise UsageError(f"scenario {name} cannot emit {emit!r}")


def cmd_render(args):
    doc = _read(args.xray, ("xray",))
    certs = ()
    if args.verdict:
        certs = _read(args.verdict, ("verdict",)).payload.certificates
    overlays = {"certificates": certs}
    if args.format == "svg":
        overlays["wall"] = args.wall
        if args.cut:
            direction, _, level = args.cut.partition(":")
            try:
                overlays["cut"] = (_ints(direction), _rational(level))
            except argparse.ArgumentTypeError as exc:
                raise UsageError(f"--cut expects DIRECTION:LEVEL ({exc})") from exc
    _write(render(doc.payload, args.format, **overlays), args.out)


def build_parser():
    parser = _Parser(prog="hamxray", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xray", help="build an X-ray document")
    p.add_argument("source", choices=("flag", "toric", "chamber"))
    p.add_argument("--lambda", dest="lam", type=_rationals, help="eigenvalues l1>l2>l3, e.g. 5,1,0")
    p.add_argument("--file", help="input polytope3 or chamber document")
    p.add_argument("--out")
    p.set_defaults(func=cmd_xray)

    p = sub.add_parser("cut", help="symplectic cut of chamber data or a Delzant polytope")
    p.add_argument("--chamber")
    p.add_argument("--polytope")
    p.add_argument("--circle", type=_ints, required=True, help="primitive circle direction, e.g. 1,2")
    p.add_argument("--level", type=_rational, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("check", help="run Tolman's obstruction check on an X-ray")
    p.add_argument("--xray", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scenario", help="built-in spaces")
    p.add_argument("name", choices=("m1", "m2", "m3", "gc", "hn", "sweep", "fixture"))
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam", type=_rationals)
    p.add_argument("--level", type=_rational)
    p.add_argument("--from", dest="n_from", type=int, default=-3)
    p.add_argument("--to", dest="n_to", type=int, default=5)
    p.add_argument("--emit", choices=("verdict", "xray", "chamber", "polytope"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("render", help="draw an X-ray")
    p.add_argument("--xray", required=True)
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--verdict", help="verdict document whose uncovered faces are highlighted")
    p.add_argument("--cut", help="dashed cut line DIRECTION:LEVEL, e.g. 1,2:4")
    p.add_argument("--wall", action="store_true", help="draw the Weyl wall x = y")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except HamXRayError as exc:
        print(json.dumps(exc.to_dict(), default=str), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
