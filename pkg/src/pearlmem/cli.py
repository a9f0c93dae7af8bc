"""Command-line front-end.

Subcommands: analyze | dot | verify | brute-check | selftest.  Exit status is
0 on success, 1 on parse or semantic errors (and other input problems), and 2
when verify or brute-check detects a correctness mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .assignment import conv_encoder_gates
from .gf2 import brute_force_min_memory, conv_matrix, fitted_margin, interior_equal, pearl_matrix
from .graph import to_dot
from .model import PearlNecklace
from .parser import ParseError, SourceText, parse
from .report import AnalysisReport, analyze, to_json, to_text
from .selftest import run_selftest


def _load_encoder(path: str) -> PearlNecklace:
    text = Path(path).read_text(encoding="utf-8")
    return parse(SourceText(text, name=path))


def _emit_report(report: AnalysisReport, as_json: bool) -> None:
    sys.stdout.write(to_json(report) if as_json else to_text(report))


def _cmd_analyze(args: argparse.Namespace) -> int:
    enc = _load_encoder(args.file)
    report = analyze(enc)
    if args.dot:
        Path(args.dot).write_text(to_dot(report.graph, enc), encoding="utf-8")
    _emit_report(report, args.json)
    return 0


def _cmd_dot(args: argparse.Namespace) -> int:
    enc = _load_encoder(args.file)
    text = to_dot(analyze(enc).graph, enc)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    enc = _load_encoder(args.file)
    report = analyze(enc)
    memory = report.assignment.memory
    margin = (
        args.margin
        if args.margin is not None
        else fitted_margin(enc, memory, args.frames)
    )
    pearl = pearl_matrix(enc, args.frames)
    conv = conv_matrix(
        enc, conv_encoder_gates(enc, report.assignment), memory, args.frames
    )
    equal = interior_equal(pearl, conv, margin)
    verification = {
        "frames": args.frames,
        "interior_equal": equal,
        "margin": margin,
    }
    if args.json:
        _emit_report(dataclasses.replace(report, verification=verification), True)
    else:
        print(
            f"interior_equal={'TRUE' if equal else 'FALSE'} "
            f"(frames={args.frames}, margin={margin}, memory={memory})"
        )
    if not equal:
        print(
            f"{args.file}: convolutional realization does not match the "
            "pearl-necklace encoder on the GF(2) interior",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_brute_check(args: argparse.Namespace) -> int:
    enc = _load_encoder(args.file)
    report = analyze(enc)
    memory = report.assignment.memory
    bound = args.bound if args.bound is not None else memory + 1
    brute = brute_force_min_memory(enc, bound)
    # None means nothing feasible within the bound, consistent iff memory > bound.
    ok = (brute == memory) or (brute is None and memory > bound)
    brute_text = f"exceeds-bound({bound})" if brute is None else str(brute)
    verification = {
        "bound": bound,
        "brute_force_frames": brute,
        "match": ok,
    }
    if args.json:
        _emit_report(dataclasses.replace(report, verification=verification), True)
    else:
        print(f"graph={memory} brute={brute_text} {'OK' if ok else 'MISMATCH'}")
    if not ok:
        print(
            f"{args.file}: brute-force memory disagrees with the graph analysis",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    result = run_selftest(seed=args.seed, count=args.count)
    if args.json:
        payload = {
            "count": result.count,
            "failures": list(result.failures),
            "seed": result.seed,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        status = "OK" if result.ok else f"{len(result.failures)} FAILED"
        print(f"selftest seed={result.seed} count={result.count}: {status}")
        for failure in result.failures:
            print(f"  {failure}")
    return 0 if result.ok else 2


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pearlmem",
        description=(
            "Compute the minimal quantum memory of a pearl-necklace encoder "
            "and a minimal-memory convolutional realization."
        ),
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report memory and frame assignment")
    p.add_argument("file", help="encoder source file")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--dot", metavar="PATH", help="also write the graph as DOT")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("dot", help="write the commutativity graph as DOT")
    p.add_argument("file", help="encoder source file")
    p.add_argument("--output", "-o", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser(
        "verify", help="GF(2) equivalence check of the derived convolutional encoder"
    )
    p.add_argument("file", help="encoder source file")
    p.add_argument("--frames", type=int, default=12, help="truncation window (default 12)")
    p.add_argument(
        "--margin",
        type=int,
        default=None,
        help=(
            "boundary frames to ignore (default: memory + max|l| + 1, capped "
            "so an interior remains)"
        ),
    )
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "brute-check", help="compare against brute-force minimal memory"
    )
    p.add_argument("file", help="encoder source file")
    p.add_argument(
        "--bound",
        type=int,
        default=None,
        help="max per-gate frame offset to enumerate (default: memory + 1)",
    )
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=_cmd_brute_check)

    p = sub.add_parser("selftest", help="random cross-checks against the oracles")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--count", type=int, default=25, help="instances to run (default 25)")
    p.add_argument("--json", action="store_true", help="emit a JSON summary")
    p.set_defaults(func=_cmd_selftest)
    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(str(err), file=sys.stderr)
        return 1
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
