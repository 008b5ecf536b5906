"""Command-line interface.

Exit codes: 0 pass/valid, 1 refuted or failed verification, 2 usage or
format error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from .config import Config
from .export import cells_dot, to_off, to_polytope_dict
from .formula import ParseError, parse, to_text
from .frames.algebra import CarrierTooLarge
from .frames.catalog import BUILTIN_NAMES, builtin_frame, is_builtin
from .frames.io import FrameFormatError, load_json, map_to_dict, poset_from_dict, to_dot
from .frames.logic import frame_validates, satisfies_bd, satisfies_pl
from .frames.poset import Poset
from .realization.core import (
    ConvexRealization, RealizationError, RealizationFormatError, realize_low_height,
    realize_sawed_tree, verify_realization,
)
from .reduction.drawing import plane_drawing
from .reduction.reduce import ReductionError, reduce_to_sawed_tree
from .reduction.sawed import SawedTree, SawedTreeError, detect_sawed_tree

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_status = sys.stdout


def _say(msg: str = "") -> None:
    print(msg, file=_status)


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def load_frame_arg(arg: str) -> tuple[Poset, SawedTree | None]:
    """A builtin name or a JSON file; sawed structure is taken from the file
    when present, otherwise recognised automatically."""
    path = Path(arg)
    if not path.exists():
        if is_builtin(arg):
            F = builtin_frame(arg)
            return F, detect_sawed_tree(F)
        raise UsageError(f"{arg}: no such file or builtin frame (builtins: {', '.join(BUILTIN_NAMES)})")
    data = load_json(path)
    if not isinstance(data, dict):
        raise FrameFormatError(f"{arg}: frame JSON must be an object")
    if "frame" in data and "elements" not in data:
        data = data["frame"]
    F = poset_from_dict(data)
    if "tops_order" in data and "saw_nodes" in data:
        try:
            return F, SawedTree.from_dict(data)
        except SawedTreeError as exc:
            raise FrameFormatError(f"{arg}: {exc}") from None
    return F, detect_sawed_tree(F)


def load_realization(arg: str) -> ConvexRealization:
    data = load_json(arg)
    if not isinstance(data, dict):
        raise RealizationFormatError("realisation JSON must be an object")
    return ConvexRealization.from_dict(data)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands

def cmd_frame_info(args, cfg: Config) -> int:
    F, st = load_frame_arg(args.frame)
    comps = F.connected_components()
    _say(f"elements: {len(F)}")
    _say(f"height: {F.height() if len(F) else -1}")
    root = F.root()
    _say(f"rooted: {'yes (' + root + ')' if root else 'no'}")
    _say(f"tops: {len(F.tops())} ({', '.join(F.tops())})")
    _say(f"components: {len(comps)}")
    if st is not None:
        _say(f"sawed tree: tops {', '.join(st.tops_order)}; saws {', '.join(st.saws)}")
    if args.dot:
        _write(args.dot, to_dot(F, Path(args.frame).stem))
    return PASS


def cmd_frame_check(args, cfg: Config) -> int:
    F, _ = load_frame_arg(args.frame)
    if args.formula is not None:
        if args.logic is not None:
            raise UsageError("give either --formula or --logic, not both")
        try:
            phi = parse(args.formula)
        except ParseError as exc:
            raise UsageError(str(exc)) from None
        v = frame_validates(F, phi, cfg.cap)
        if v.valid:
            _say(f"valid: {to_text(phi)}")
            return PASS
        _say(f"refuted: {to_text(phi)} fails at {v.point}")
        for p, u in sorted(v.valuation.items()):
            _say(f"  {p} = {{{', '.join(sorted(u))}}}")
        return FAIL
    if args.logic is None:
        raise UsageError("one of --formula or --logic is required")
    if args.n is None:
        raise UsageError("--logic needs --n")
    if args.logic == "bd":
        if args.n == math.inf:
            raise UsageError("bd needs a finite --n")
        ok = satisfies_bd(F, int(args.n))
        _say(f"BD_{int(args.n)}: {'pass' if ok else 'fail'} (height {F.height()})")
        return PASS if ok else FAIL
    n = None if args.n == math.inf else int(args.n)
    verdict = satisfies_pl(F, n)
    label = "PL" if n is None else f"PL_{n}"
    if verdict.ok:
        _say(f"{label}: pass")
        return PASS
    _say(f"{label}: fail")
    _say(f"witness: clause ({verdict.clause}) at {verdict.witness}")
    return FAIL


def _pl_gate(F: Poset) -> int | None:
    verdict = satisfies_pl(F)
    if not verdict.ok:
        _say("input is not a PL frame")
        _say(f"witness: clause ({verdict.clause}) at {verdict.witness}")
        return FAIL
    return None


def cmd_reduce(args, cfg: Config) -> int:
    F, _ = load_frame_arg(args.frame)
    if F.root() is None:
        raise UsageError("reduction needs a rooted frame")
    if F.height() < 2:
        raise UsageError("reduction needs height at least 2")
    gate = _pl_gate(F)
    if gate is not None:
        return gate
    try:
        red = reduce_to_sawed_tree(F)
    except ReductionError as exc:
        _say(f"reduction failed: {exc}")
        return FAIL
    map_out = args.map_out or str(Path(args.out).with_suffix("")) + ".map.json"
    _write(args.out, _dump(red.tree.to_dict()))
    _write(map_out, _dump(map_to_dict(red.map)))
    _say(f"sawed tree: {len(red.tree.poset)} elements, height {red.tree.height()}, "
         f"{len(red.tree.tops_order)} tops")
    _say(f"p-morphism verified; written {args.out} and {map_out}")
    return PASS


def _emit_export(r: ConvexRealization, fmt: str, out: str | None, cfg: Config) -> None:
    if fmt == "off":
        if r.n > 3:
            raise UsageError("OFF export needs height at most 3")
        _write(out, to_off(r, cfg.precision))
    elif fmt == "dot":
        _write(out, cells_dot(r))
    elif fmt == "json":
        _write(out, _dump(to_polytope_dict(r)))
    elif fmt == "drawing":
        if r.sawed is None:
            raise UsageError("drawings exist for sawed trees only")
        d = plane_drawing(r.sawed)
        if out is not None and out.endswith(".dot"):
            pos = {e: (float(x), float(y)) for e, (x, y) in d.coords.items()}
            _write(out, to_dot(r.frame, "drawing", pos))
        else:
            _write(out, _dump(d.to_dict()))


def cmd_realize(args, cfg: Config) -> int:
    global _status
    if args.export and args.export_out in (None, "-"):
        _status = sys.stderr
    F, st = load_frame_arg(args.frame)
    if len(F) and F.height() <= 1:
        raise UsageError("height <= 1: use the realize-low-height subcommand")
    if st is None:
        if not args.via_reduction:
            raise UsageError("input is not a sawed tree; pass --via-reduction to reduce it first")
        gate = _pl_gate(F)
        if gate is not None:
            return gate
        st = reduce_to_sawed_tree(F).tree
        _say(f"reduced to a sawed tree with {len(st.poset)} elements")
    try:
        r = realize_sawed_tree(st, verify=False)
    except RealizationError as exc:
        raise UsageError(str(exc)) from None
    report = verify_realization(r, samples=cfg.samples, seed=cfg.seed)
    _say(report.text())
    if not report.ok:
        return FAIL
    _write(args.out, _dump(r.to_dict()))
    _say(f"realisation written to {args.out}")
    if args.export:
        _emit_export(r, args.export, args.export_out, cfg)
    return PASS


def cmd_realize_low(args, cfg: Config) -> int:
    F, _ = load_frame_arg(args.frame)
    try:
        r = realize_low_height(F)
    except RealizationError as exc:
        raise UsageError(str(exc)) from None
    report = verify_realization(r, samples=cfg.samples, seed=cfg.seed)
    _say(report.text())
    if not report.ok:
        return FAIL
    _write(args.out, _dump(r.to_dict()))
    return PASS


def cmd_verify(args, cfg: Config) -> int:
    r = load_realization(args.realization)
    report = verify_realization(r, samples=cfg.samples, seed=cfg.seed)
    _say(report.text())
    _say("verdict: " + ("PASS" if report.ok else "FAIL"))
    return PASS if report.ok else FAIL


def cmd_export(args, cfg: Config) -> int:
    r = load_realization(args.realization)
    _emit_export(r, args.format, args.out, cfg)
    return PASS


# ---------------------------------------------------------------------------

def _n_arg(text: str) -> float:
    if text.lower() in ("inf", "infinity", "omega"):
        return math.inf
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--n must be a non-negative integer or 'inf'") from None
    if v < 0:
        raise argparse.ArgumentTypeError("--n must be non-negative")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _err(message)
        raise SystemExit(USAGE)


def _globals(p: argparse.ArgumentParser, cfg: Config | None) -> None:
    dflt = (lambda v: v) if cfg is not None else (lambda v: argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=dflt(cfg and cfg.seed),
                   help="seed for all sampling (default 0)")
    p.add_argument("--cap", type=int, default=dflt(cfg and cfg.cap),
                   help="maximum number of upsets enumerated (default 2**20)")
    p.add_argument("--samples", type=int, default=dflt(cfg and cfg.samples),
                   help="random samples per verifier check (default 100)")
    p.add_argument("--precision", type=int, default=dflt(cfg and cfg.precision),
                   help="decimals in OFF output (default 6)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="convexlogic", description="Finite frames, PL, sawed trees and convex realisations.")
    _globals(p, Config())
    # the same options are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    frame = sub.add_parser("frame", parents=[common], help="inspect or check a frame")
    fsub = frame.add_subparsers(dest="action", required=True, parser_class=_Parser)
    info = fsub.add_parser("info", parents=[common], help="elements, height, rootedness, tops, components")
    info.add_argument("frame")
    info.add_argument("--dot", metavar="PATH", help="also write the Hasse diagram as DOT")
    info.set_defaults(func=cmd_frame_info)
    check = fsub.add_parser("check", parents=[common], help="check a formula or PL/BD membership")
    check.add_argument("frame")
    check.add_argument("--formula")
    check.add_argument("--logic", choices=("pl", "bd"))
    check.add_argument("--n", type=_n_arg)
    check.set_defaults(func=cmd_frame_check)

    red = sub.add_parser("reduce", parents=[common], help="reduce a PL frame to a sawed tree")
    red.add_argument("frame")
    red.add_argument("--out", required=True)
    red.add_argument("--map-out")
    red.set_defaults(func=cmd_reduce)

    rz = sub.add_parser("realize", parents=[common], help="convex realisation of a sawed tree")
    rz.add_argument("frame")
    rz.add_argument("--out", required=True, help="realisation JSON")
    rz.add_argument("--export", choices=("off", "json", "dot", "drawing"))
    rz.add_argument("--export-out", help="where to write the export (default stdout)")
    rz.add_argument("--via-reduction", action="store_true")
    rz.set_defaults(func=cmd_realize)

    low = sub.add_parser("realize-low-height", parents=[common], help="realise the point, 1-fork or 2-fork")
    low.add_argument("frame")
    low.add_argument("--out", required=True)
    low.set_defaults(func=cmd_realize_low)

    ver = sub.add_parser("verify", parents=[common], help="re-run all checks on a realisation JSON")
    ver.add_argument("realization")
    ver.set_defaults(func=cmd_verify)

    ex = sub.add_parser("export", parents=[common], help="export a stored realisation")
    ex.add_argument("realization")
    ex.add_argument("--format", choices=("off", "json", "dot", "drawing"), default="off")
    ex.add_argument("--out")
    ex.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    global _status
    _status = sys.stdout
    args = build_parser().parse_args(argv)
    try:
        fmt = getattr(args, "export", None) or getattr(args, "format", None) or "json"
        cfg = Config(seed=args.seed, cap=args.cap, samples=args.samples, format=fmt,
                     precision=args.precision)
        return args.func(args, cfg)
    except (UsageError, ValueError) as exc:
        # FrameFormatError, RealizationFormatError and parse errors land here too
        _err(str(exc))
        return USAGE
    except CarrierTooLarge as exc:
        _err(f"{exc} (raise --cap)")
        return USAGE
    except OSError as exc:
        _err(str(exc))
        return USAGE


if __name__ == "__main__":
    raise SystemExit(main())
