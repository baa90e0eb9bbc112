"""Command-line interface.

Exit codes: 0 success, 1 verification failure or counterexample found,
2 usage error, 3 I/O error.  All output is deterministic: results are
aggregated and emitted in sorted order, independent of ``--threads``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from .enumeration import (
    SizeLimitError,
    enumerate_connected,
    enumerate_trees,
)
from .graph import Graph, degree_sequence, edge_irregularity, total_irregularity
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .transform import reduce_to_minimum
from .verify import (
    VerificationReport,
    check_conjecture,
    verify_bicyclic,
    verify_trees,
    verify_unicyclic,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_graphs(path: str) -> list[Graph]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise _CliError(EXIT_IO, f"cannot read {path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise _CliError(EXIT_IO, f"{path} is not an ASCII graph6 file: {exc}") from None
    graphs = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except Graph6Error as exc:
            raise _CliError(EXIT_IO, f"{path}:{lineno}: {exc}") from None
    return graphs


def _seq_text(seq: Sequence[int]) -> str:
    """Compact run-length rendering, e.g. ``3 2^4 1^3``."""
    parts = []
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        parts.append(str(seq[i]) if j - i == 1 else f"{seq[i]}^{j - i}")
        i = j
    return " ".join(parts)


def _cmd_compute(args) -> int:
    graphs = _read_graphs(args.infile)
    fields = {
        "total": ("irr_t",),
        "edge": ("irr",),
        "both": ("irr_t", "irr"),
    }[args.index]
    rows = []
    for g in graphs:
        values = {"irr_t": total_irregularity(g), "irr": edge_irregularity(g)}
        rows.append((write_graph6(g), values))
    if args.format == "csv":
        print(",".join(("graph",) + fields))
        for name, values in rows:
            print(",".join([name] + [str(values[f]) for f in fields]))
    else:
        for name, values in rows:
            record = {"graph": name}
            record.update({f: values[f] for f in fields})
            print(json.dumps(record, separators=(",", ":")))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    n = args.n
    try:
        if args.family == "tree":
            stream: Iterable[Graph] = enumerate_trees(n, threads=args.threads)
        elif args.family == "unicyclic":
            stream = enumerate_connected(n, n, threads=args.threads)
        elif args.family == "bicyclic":
            stream = enumerate_connected(n, n + 1, threads=args.threads)
        else:
            stream = enumerate_connected(n, None, threads=args.threads)
        lines = [write_graph6(g) for g in stream]
    except SizeLimitError as exc:
        raise _CliError(EXIT_USAGE, str(exc)) from None
    if args.out:
        try:
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write("".join(line + "\n" for line in lines))
        except OSError as exc:
            raise _CliError(EXIT_IO, f"cannot write {args.out}: {exc}") from None
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _report_text(rep: VerificationReport) -> str:
    parts = [f"{rep.family} n={rep.n}"]
    for i, verdict in enumerate(rep.verdict):
        actual = rep.ranked_minima[i] if i < len(rep.ranked_minima) else None
        expected = rep.expected[i]
        chunk = [f"rank{i + 1}"]
        if actual is not None:
            seqs = ", ".join(_seq_text(s) for s in actual.sequences)
            chunk.append(f"value={actual.value} count={actual.count} seqs=[{seqs}]")
        else:
            chunk.append("value=none")
        if expected is not None:
            chunk.append(f"expected={expected.value}")
        chunk.append(f"[{verdict}]")
        parts.append(" ".join(chunk))
    return "\n  ".join(parts)


def _cmd_verify(args) -> int:
    if args.n_min > args.n_max:
        raise _CliError(EXIT_USAGE, "--n-min must not exceed --n-max")
    n_range = range(args.n_min, args.n_max + 1)
    try:
        if args.family == "tree":
            reports = verify_trees(n_range, threads=args.threads)
        elif args.family == "unicyclic":
            reports = verify_unicyclic(n_range, threads=args.threads)
        else:
            reports = verify_bicyclic(n_range, threads=args.threads)
    except SizeLimitError as exc:
        raise _CliError(EXIT_USAGE, str(exc)) from None
    if args.format == "json":
        print(json.dumps([rep.to_dict() for rep in reports], indent=2))
    else:
        for rep in reports:
            print(_report_text(rep))
    failed = [rep for rep in reports if not rep.passed()]
    if failed:
        print(
            f"FAILED: {len(failed)} of {len(reports)} reports", file=sys.stderr
        )
        return EXIT_VERIFICATION_FAILURE
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    if args.mode == "graph" and args.n_max > 9:
        raise _CliError(EXIT_USAGE, "graph mode supports --n-max up to 9")
    if args.mode == "sequence" and args.n_max > 16:
        raise _CliError(EXIT_USAGE, "sequence mode supports --n-max up to 16")
    report = check_conjecture(
        range(3, args.n_max + 1), mode=args.mode, threads=args.threads
    )
    print(f"mode={report.mode}")
    for e in report.entries:
        seqs = " | ".join(_seq_text(s) for s in e.min_sequences)
        status = "empty" if e.min_value is None else (
            "ok" if e.min_value >= e.bound else "VIOLATED"
        )
        print(
            f"n={e.n} bound={e.bound} min_nonregular="
            f"{'-' if e.min_value is None else e.min_value} [{status}] seqs=[{seqs}]"
        )
    if report.counterexample is None:
        print("no counterexample")
        return EXIT_OK
    c = report.counterexample
    print(
        f"counterexample: n={c.n} sequence=({_seq_text(c.degree_sequence)}) "
        f"irr_t={c.irr_t} < {c.violated_bound}"
    )
    if c.witness is not None:
        print(f"witness: {write_graph6(c.witness)}")
    return EXIT_VERIFICATION_FAILURE


def _cmd_transform(args) -> int:
    graphs = _read_graphs(args.infile)
    for idx, g in enumerate(graphs, start=1):
        if not g.is_connected():
            raise _CliError(
                EXIT_USAGE, f"graph {idx} is disconnected; reduction needs connectivity"
            )
        final, steps = reduce_to_minimum(g)
        print(
            f"graph {idx}: {write_graph6(g)} n={g.n} m={g.m} "
            f"irr_t={total_irregularity(g)}"
        )
        if args.trace:
            running = total_irregularity(g)
            for k, step in enumerate(steps, start=1):
                running += step.delta
                moved = len(step.moved)
                print(
                    f"  step {k}: move subtree of {moved} "
                    f"vertex{'es' if moved != 1 else ''} from {step.source} "
                    f"to {step.target} delta={step.delta} irr_t={running}"
                )
        print(
            f"  final: {write_graph6(final)} steps={len(steps)} "
            f"irr_t={total_irregularity(final)} "
            f"degrees=[{_seq_text(degree_sequence(final))}]"
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="K",
        help="worker threads; output is identical for any value",
    )

    parser = argparse.ArgumentParser(
        prog="totalirr",
        description="Total irregularity of graphs: indices, enumeration, "
        "exhaustive verification of extremal minima, reduction traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="index values for a graph6 file")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    p.add_argument("--index", choices=["total", "edge", "both"], default="both")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("enumerate", parents=[common], help="emit a graph family as graph6")
    p.add_argument(
        "--family",
        choices=["tree", "unicyclic", "bicyclic", "connected"],
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="FILE.g6")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check the ranked minima")
    p.add_argument(
        "--family", choices=["tree", "unicyclic", "bicyclic"], required=True
    )
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "conjecture", parents=[common], help="search for bound violations"
    )
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=["sequence", "graph"], default="sequence")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser(
        "transform", parents=[common], help="reduce graphs by branch moves"
    )
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    p.add_argument("--trace", action="store_true", help="print per-step deltas")
    p.set_defaults(func=_cmd_transform)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"totalirr: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
