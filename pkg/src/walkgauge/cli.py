"""Command-line front end.

Subcommands: classify, sweep, verify, search. Output is deterministic:
identical input bytes and flags produce identical output bytes (CSV floats
at 17 significant digits, text mode at 6).

Exit codes: 0 success, 1 verification failure, 2 input or configuration
error, 3 internal theorem violation.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .entropy import (
    classify,
    entropy_profile,
    profile_to_csv,
    run_invariant_battery,
)
from .errors import TheoremViolationError
from .families import FAMILY_NAMES, FamilySpec, generate, search_regular_not_walk_regular
from .graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6
from .walks import WalkCountError

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_THEOREM_VIOLATION = 3

DEFAULT_MAX_N = 2048


class InputError(Exception):
    """User-facing input or configuration problem (exit code 2)."""


def _dense_ceiling() -> int:
    raw = os.environ.get("WALKGAUGE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"WALKGAUGE_MAX_N must be an integer, got {raw!r}") from exc


def _parse_grid(spec: str) -> np.ndarray:
    """Parse a min:max:count:scale grid token, e.g. 0.001:40:41:log."""
    parts = spec.split(":")
    if len(parts) != 4:
        raise InputError(f"grid must be min:max:count:scale, got {spec!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise InputError(f"bad grid numbers in {spec!r}") from exc
    scale = parts[3]
    if lo <= 0 or hi < lo or count < 1 or (hi == lo and count > 1):
        raise InputError("grid needs 0 < min <= max and count >= 1")
    if scale == "log":
        return np.logspace(math.log10(lo), math.log10(hi), count)
    if scale == "linear":
        return np.linspace(lo, hi, count)
    raise InputError(f"grid scale must be 'log' or 'linear', got {scale!r}")


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    conns = None
    if args.connections:
        try:
            conns = tuple(int(tok) for tok in args.connections.split(",") if tok)
        except ValueError as exc:
            raise InputError(
                f"connections must be comma-separated integers, got {args.connections!r}"
            ) from exc
    return FamilySpec(
        name=args.family, n=args.n, k=args.k, connections=conns, dim=args.dim
    )


def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    """Resolve the single input source into (graph, display name)."""
    if (args.input is None) == (args.family is None):
        raise InputError("exactly one of --input or --family is required")
    if args.family is not None:
        try:
            g = generate(_family_spec(args))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        name = args.family
        return g, name
    path = args.input
    fmt = args.format
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        if fmt == "graph6":
            first = next(
                (ln for ln in data.splitlines() if ln.strip()), b""
            )
            g = parse_graph6(first)
        else:
            g = parse_edge_list(data.decode("utf-8", errors="replace"))
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return g, path


def _check_size(g: Graph) -> None:
    ceiling = _dense_ceiling()
    if g.n > ceiling:
        raise InputError(
            f"graph has {g.n} vertices, above the dense-operation ceiling "
            f"{ceiling} (override with WALKGAUGE_MAX_N)"
        )


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_classify(args: argparse.Namespace) -> int:
    g, name = _load_graph(args)
    _check_size(g)
    result = classify(g, max_entropy_tol=args.eq_tol)
    if args.out_format == "json":
        payload = result.to_dict()
        payload["graph"] = name
        _write(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    lines = [f"{result.label.value}"]
    if result.decision.witness_k is not None:
        i, j = result.decision.witness_vertices
        lines.append(
            f"witness: k={result.decision.witness_k}, vertices=({i}, {j}), "
            f"closed-walk counts differ"
        )
    lines.append(f"deficit at beta=1: {result.deficit_beta1:.6g}")
    lines.append(f"tail gap estimate: {result.profile.gap_estimate:.6g}")
    for note in result.notes:
        lines.append(f"note: {note}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    g, name = _load_graph(args)
    _check_size(g)
    grid = _parse_grid(args.grid)
    profile = entropy_profile(g, grid, graph_id=name)
    if args.out_format == "json":
        _write(args, json.dumps(profile.to_dict(), sort_keys=True, indent=2) + "\n")
    elif args.out_format == "text":
        lines = [f"graph {name}: n={profile.n}"]
        lines.append("beta=0: entropy=%.6g deficit=0" % profile.limit_zero)
        for pt in profile.points:
            lines.append(
                "beta=%.6g: entropy=%.6g deficit=%.6g" % (pt.beta, pt.entropy, pt.deficit)
            )
        lines.append(
            "beta=inf: entropy=%.6g deficit=%.6g"
            % (profile.limit_infinity, math.log(profile.n) - profile.limit_infinity)
        )
        for note in profile.notes:
            lines.append(f"note: {note}")
        _write(args, "\n".join(lines) + "\n")
    else:
        _write(args, profile_to_csv(profile))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g, name = _load_graph(args)
    _check_size(g)
    grid = _parse_grid(args.grid) if args.grid else None
    results = run_invariant_battery(g, grid, eq_tol=args.eq_tol)
    lines = []
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        if not res.passed:
            failures += 1
        lines.append(f"{status} {res.name}: {res.detail}")
    lines.append(
        f"{name}: {len(results) - failures}/{len(results)} checks passed"
    )
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def _cmd_search(args: argparse.Namespace) -> int:
    stream = None
    if args.stream:
        try:
            with open(args.stream, "r", encoding="ascii") as fh:
                stream = fh.readlines()
        except OSError as exc:
            raise InputError(f"cannot read {args.stream}: {exc}") from exc
    if stream is None and args.max_n is None:
        raise InputError("search needs --max-n or --stream")
    try:
        results = search_regular_not_walk_regular(
            max_n=args.max_n, degree=args.degree, stream=stream
        )
    except GraphFormatError as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _write(args, "".join(line + "\n" for line in results))
    print(
        f"found {len(results)} regular-but-not-walk-regular graph(s)",
        file=sys.stderr,
    )
    return EXIT_OK


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="path to an edge-list or graph6 file")
    p.add_argument(
        "--format",
        choices=("edgelist", "graph6"),
        help="input format (default: inferred from the file extension)",
    )
    p.add_argument("--family", choices=FAMILY_NAMES, help="generate a named family")
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--k", type=int, help="second side for complete_bipartite")
    p.add_argument("--connections", help="circulant offsets, e.g. 1,2")
    p.add_argument("--dim", type=int, help="hypercube dimension (<= 7)")
    p.add_argument("--output", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walkgauge",
        description=(
            "Walk entropy, subgraph centrality and exact walk-regularity "
            "analysis of simple undirected graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="exact trichotomy label with numeric corroboration"
    )
    _add_input_options(p_classify)
    p_classify.add_argument(
        "--eq-tol",
        type=float,
        default=1e-9,
        help="max-entropy deficit tolerance at beta=1 (default 1e-9)",
    )
    p_classify.add_argument(
        "--out-format", choices=("text", "json"), default="text"
    )
    p_classify.set_defaults(func=_cmd_classify)

    p_sweep = sub.add_parser("sweep", help="entropy profile over a beta grid")
    _add_input_options(p_sweep)
    p_sweep.add_argument(
        "--grid",
        default="0.001:40:41:log",
        help="beta grid min:max:count:scale (default 0.001:40:41:log)",
    )
    p_sweep.add_argument(
        "--out-format", choices=("csv", "json", "text"), default="csv"
    )
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser(
        "verify", help="run the invariant battery and report pass/fail"
    )
    _add_input_options(p_verify)
    p_verify.add_argument("--grid", help="beta grid min:max:count:scale")
    p_verify.add_argument(
        "--eq-tol",
        type=float,
        default=1e-9,
        help="max-entropy deficit tolerance at beta=1 (default 1e-9)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser(
        "search", help="find regular-but-not-walk-regular graphs"
    )
    p_search.add_argument("--max-n", type=int, dest="max_n")
    p_search.add_argument("--degree", type=int)
    p_search.add_argument("--stream", help="graph6 candidate file")
    p_search.add_argument("--output", help="write graph6 lines to this path")
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (TheoremViolationError, WalkCountError) as exc:
        print(f"internal theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION


if __name__ == "__main__":
    raise SystemExit(main())
