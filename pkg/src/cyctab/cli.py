"""Command-line front end: ``cyctab <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool

from . import cyclic, dynamics, rotation, special_cases
from .errors import CyctabError
from .shape import enumerate_shapes, format_shape, is_connected_ribbon, parse_shape
from .tableau import descent_set, enumerate_syt, format_tableau, parse_tableau, render, reverse, to_record, transpose

OPS = {
    "phi": cyclic.phi,
    "phi-inverse": cyclic.phi_inverse,
    "promote": dynamics.promote,
    "demote": dynamics.demote,
    "rotate-se": lambda t: rotation.rotate(t, "SE"),
    "rotate-nw": lambda t: rotation.rotate(t, "NW"),
    "rotate-se-inverse": lambda t: rotation.rotate_inverse(t, "SE"),
    "rotate-nw-inverse": lambda t: rotation.rotate_inverse(t, "NW"),
    "transpose": transpose,
    "reverse": reverse,
}

SUITES = ("axioms", "paths", "special", "rotation", "all")

GRAMMAR = """\
shapes:   LAMBDA/MU, comma-separated positive parts, MU may be empty: 3,3,2/1,1  4/
tableaux: rows separated by '/', entries by ',', '.' marks a cell of mu: .,2,4/.,3,5/1,6
"""


class Output:
    """Collects structured results and prints them as text or JSON."""

    def __init__(self, command: str, fmt: str, inputs: dict):
        self.command = command
        self.fmt = fmt
        self.inputs = inputs
        self.outputs: dict = {}
        self.diagnostics: list[str] = []
        self.lines: list[str] = []

    def emit(self) -> None:
        if self.fmt == "json":
            doc = {
                "command": self.command,
                "inputs": self.inputs,
                "outputs": self.outputs,
                "diagnostics": self.diagnostics,
            }
            sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            for line in self.lines:
                print(line)
            for d in self.diagnostics:
                print(d, file=sys.stderr)


def _fmt_set(s) -> str:
    return ",".join(map(str, sorted(s)))


def _tableau(args):
    shape = parse_shape(args.shape) if getattr(args, "shape", None) else None
    return parse_tableau(args.tableau, shape)


def cmd_apply(args, out: Output) -> int:
    t = _tableau(args)
    r = OPS[args.op](t)
    out.outputs = {"tableau": format_tableau(r), "record": to_record(r)}
    out.lines = [format_tableau(r), render(r)]
    return 0


def cmd_cdes(args, out: Output) -> int:
    t = _tableau(args)
    c = cyclic.cdes(t)
    d = descent_set(t)
    out.outputs = {"cdes": sorted(c), "des": sorted(d)}
    out.lines = [f"cdes={_fmt_set(c)}", f"des={_fmt_set(d)}"]
    return 0


def cmd_orbit(args, out: Output) -> int:
    t = _tableau(args)
    o = cyclic.orbit(t)
    out.outputs = {"size": o.size, "period": o.cdes_period, "digest": o.trajectory_digest}
    out.lines = [f"size={o.size} period={o.cdes_period}", f"digest={o.trajectory_digest}"]
    return 0


def cmd_fibers(args, out: Output) -> int:
    shape = parse_shape(args.shape)
    fibers = cyclic.fiber_multiset(shape)
    rows = sorted((sorted(j), k) for j, k in fibers.items())
    out.outputs = {"fibers": [{"set": j, "count": k} for j, k in rows]}
    out.lines = [f"{{{_fmt_set(j)}}}: {k}" for j, k in rows]
    return 0


def cmd_enumerate(args, out: Output) -> int:
    if args.tableaux:
        if not args.shape:
            raise CyctabError("--tableaux needs --shape")
        items = [format_tableau(t) for t in enumerate_syt(parse_shape(args.shape))]
        out.outputs = {"tableaux": items}
    else:
        if args.n is None:
            raise CyctabError("--shapes needs --n")
        items = [format_shape(s) for s in enumerate_shapes(args.n, "non-ribbon" if args.non_ribbon else "all")]
        out.outputs = {"shapes": items}
    out.lines = items
    return 0


def cmd_paths(args, out: Output) -> int:
    t = _tableau(args)
    if args.kind == "promotion":
        p = dynamics.promotion_path(t)
    elif args.kind == "demotion":
        p = dynamics.demotion_path(t)
    else:
        if not args.corner:
            raise CyctabError("--kind pseudo needs --corner R,C")
        try:
            r, c = (int(x) for x in args.corner.split(","))
        except ValueError as exc:
            raise CyctabError(f"bad corner {args.corner!r}; expected R,C") from exc
        p = dynamics.pseudo_promotion_path(t, (r, c))
    cells = [list(c) for c in p.cells]
    entries = [t[c] for c in p.cells]
    out.outputs = {"kind": p.kind, "cells": cells, "entries": entries}
    out.lines = [" ".join(f"({r},{c})" for r, c in p.cells), "entries=" + ",".join(map(str, entries))]
    return 0


def _rotation_suite(shape) -> list[str]:
    bad = []
    syt = enumerate_syt(shape)
    for side in ("SE", "NW"):
        images = set()
        for t in syt:
            r = rotation.rotate(t, side)
            images.add(r)
            if rotation.rotate_inverse(r, side) != t:
                bad.append(f"{side} inverse fails at {t}")
                break
        if len(images) != len(syt):
            bad.append(f"{side} rotation is not injective")
    return bad


def run_suite(task: tuple[str, str]) -> tuple[str, list[str]]:
    """Run one suite on one shape; returns the shape string and failure messages."""
    suite, text = task
    shape = parse_shape(text)
    msgs: list[str] = []
    if suite in ("axioms", "all"):
        rep = cyclic.verify_cdm(shape)
        for axiom, t in rep.counterexamples.items():
            msgs.append(f"{axiom} fails at {format_tableau(t)}")
        if not rep.fibers_rotation_invariant:
            msgs.append("fiber sizes are not rotation invariant")
    if suite in ("paths", "all"):
        rep = cyclic.path_lemma_suite(shape)
        for name, t in rep.examples.items():
            msgs.append(f"{name} fails at {format_tableau(t)}")
    if suite in ("special", "all"):
        rep = special_cases.coincidence_suite(shape)
        for name in rep.violations:
            t = rep.examples.get(name)
            msgs.append(f"{name} fails" + (f" at {format_tableau(t)}" if t else ""))
    if suite in ("rotation", "all"):
        msgs.extend(_rotation_suite(shape))
    return text, msgs


def cmd_verify(args, out: Output) -> int:
    if args.shape:
        shape = parse_shape(args.shape)
        if is_connected_ribbon(shape):
            out.outputs = {"shapes": 1, "failures": {}, "rejected": [args.shape]}
            out.lines = [f"{args.shape}: connected ribbon, no cyclic descent map"]
            return 1
        shapes = [args.shape]
    else:
        shapes = [format_shape(s) for n in range(1, args.max_n + 1) for s in enumerate_shapes(n, "non-ribbon")]
    tasks = [(args.suite, s) for s in shapes]
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(run_suite, tasks, chunksize=8)
    else:
        results = [run_suite(t) for t in tasks]
    failures = {s: msgs for s, msgs in results if msgs}
    out.outputs = {"shapes": len(shapes), "failures": failures}
    if failures:
        out.lines = [f"{s}: {m}" for s, msgs in failures.items() for m in msgs]
        out.lines.append(f"{len(failures)} of {len(shapes)} shapes fail")
        return 1
    out.lines = [f"checked {len(shapes)} shapes", "all shapes pass"]
    return 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CYCTAB_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default $CYCTAB_JOBS or 1)")

    p = argparse.ArgumentParser(
        prog="cyctab",
        description="Cyclic descents and rotation operators on skew standard Young tableaux.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def tableau_args(sp):
        sp.add_argument("--tableau", required=True)
        sp.add_argument("--shape", help="optional; checked against the tableau")

    sp = sub.add_parser("apply", parents=[common], help="apply an operator to a tableau")
    sp.add_argument("--op", choices=sorted(OPS), required=True)
    tableau_args(sp)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("cdes", parents=[common], help="cyclic descent set")
    tableau_args(sp)
    sp.set_defaults(func=cmd_cdes)

    sp = sub.add_parser("orbit", parents=[common], help="orbit size and cyclic descent period")
    tableau_args(sp)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("verify", parents=[common], help="exhaustive checks over shapes")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--shape")
    sp.add_argument("--suite", choices=SUITES, default="axioms")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fibers", parents=[common], help="fiber sizes of the cyclic descent map")
    sp.add_argument("--shape", required=True)
    sp.set_defaults(func=cmd_fibers)

    sp = sub.add_parser("enumerate", parents=[common], help="list shapes or tableaux")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--shapes", action="store_true")
    g.add_argument("--tableaux", action="store_true")
    sp.add_argument("--n", type=int)
    sp.add_argument("--shape")
    sp.add_argument("--non-ribbon", action="store_true", help="with --shapes, skip connected ribbons")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("paths", parents=[common], help="promotion, demotion or pseudo-promotion path")
    sp.add_argument("--kind", choices=("promotion", "demotion", "pseudo"), default="promotion")
    sp.add_argument("--corner", help="R,C start cell for --kind pseudo")
    tableau_args(sp)
    sp.set_defaults(func=cmd_paths)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format", "jobs")}
    out = Output(args.command, args.format, inputs)
    try:
        status = args.func(args, out)
    except CyctabError as exc:
        out.diagnostics.append(f"error: {exc}")
        if args.format == "json":
            out.emit()
        else:
            print(f"error: {exc}", file=sys.stderr)
            print(GRAMMAR, end="", file=sys.stderr)
        return 2
    out.emit()
    return status


if __name__ == "__main__":
    sys.exit(main())
