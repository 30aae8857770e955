"""Command-line entry point: ``framecert verify <claim>`` and ``framecert weight-enum``.

Exit status: 0 when every claim passes, 1 when any claim fails, 2 on usage or
input errors.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Mapping, Optional, Sequence

from . import codes
from .errors import MatrixParseError
from .suite import GROUPS, RunConfig, run_suite

CODES = ("C", "D", "Cprime", "Dprime")


class UsageError(Exception):
    pass


def _seed(text: str) -> int:
    value = int(text, 0)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be unsigned")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--matrix", type=Path, help="generator matrix file overriding the bundled D")
    p.add_argument("--fixed-coord", type=int, default=0, help="coordinate removed for the shorter pair (0-based)")
    p.add_argument("--seed", type=_seed, default=None, help="RNG seed (default 0xB5, or $FVOA_SEED)")
    p.add_argument("--samples", type=int, default=1000, help="random codewords per certificate check")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="framecert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", parents=[common], help="run verification claims")
    verify.add_argument("what", choices=("all",) + GROUPS)
    verify.add_argument("--n", type=int, choices=(16, 32), help="Steiner system size for `verify steiner`")
    enum = sub.add_parser("weight-enum", parents=[common], help="print a weight distribution")
    enum.add_argument("--code", choices=CODES, required=True)
    return parser


def load_config(args: argparse.Namespace, environ: Mapping[str, str]) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = environ.get("FVOA_SEED")
        try:
            seed = _seed(env) if env else 0xB5
        except (ValueError, argparse.ArgumentTypeError):
            raise UsageError(f"FVOA_SEED={env!r} is not an unsigned integer") from None
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    matrix, source = None, "bundled"
    if args.matrix is not None:
        try:
            matrix = codes.parse_generator_matrix(args.matrix.read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.matrix}: {exc.strerror}") from None
        except MatrixParseError as exc:
            raise UsageError(f"{args.matrix}: {exc}") from None
        source = str(args.matrix)
    n = matrix.cols if matrix is not None else 48
    if not 0 <= args.fixed_coord < n:
        raise UsageError(f"--fixed-coord must lie in 0..{n - 1}")
    return RunConfig(matrix=matrix, matrix_source=source, fixed_coord=args.fixed_coord, seed=seed,
                     samples=args.samples, fmt=args.format, steiner_n=getattr(args, "n", None))


def _weight_enum(config: RunConfig, which: str) -> str:
    D = codes.from_generators(config.matrix if config.matrix is not None else codes.moonshine_frame_matrix())
    code = {"D": D, "C": codes.dual(D)}.get(which)
    if code is None:
        base = D if which == "Dprime" else codes.dual(D)
        code = codes.shorten(base, config.fixed_coord)
    dist = codes.weight_distribution(code)
    if config.fmt == "json":
        return json.dumps({"schema": 1, "code": which, "n": code.n, "k": code.k,
                           "distribution": {str(w): a for w, a in dist.nonzero().items()}}, indent=2) + "\n"
    lines = [f"{which}: [{code.n},{code.k}]"] + [f"  A{w} = {a}" for w, a in dist.nonzero().items()]
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = load_config(args, os.environ if environ is None else environ)
    except UsageError as exc:
        print(f"framecert: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "weight-enum":
        sys.stdout.write(_weight_enum(config, args.code))
        return 0
    groups = GROUPS if args.what == "all" else (args.what,)
    report = run_suite(config, groups)
    sys.stdout.write(report.to_json() if config.fmt == "json" else report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
