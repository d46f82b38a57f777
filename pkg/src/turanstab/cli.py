"""Command-line front end.

Exit codes: 0 success (all applicable verdicts hold), 1 input error,
2 the graph contains ``K_{p+1}``, 3 a search guard was exceeded,
4 a verdict failed.
"""

from __future__ import annotations

import argparse
import sys

from .errors import CapabilityError, InputError, PreconditionViolation
from .generators import GenSpec
from .graph import format_edge_list, read_edge_list
from .oracle import oracle_report
from .partitioner import format_trace, theorem1_certificate
from .report import CertificateRow, csv_lines, human_report
from .stability import corollary1_certificate
from .sweep import SweepConfig, run_sweep

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_GUARD = 3
EXIT_VERDICT = 4


def _load_graph(path):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not ASCII text") from None


def cmd_gen(args) -> int:
    spec = GenSpec.parse(args.spec)
    if args.seed is not None:
        spec = GenSpec(spec.kind, spec.n, spec.p, spec.param, args.seed)
    text = format_edge_list(spec.build())
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_partition(args) -> int:
    G = _load_graph(args.input)
    cert, trace, _, _ = theorem1_certificate(G, args.p)
    sys.stdout.write(format_trace(trace))
    sys.stdout.write(
        f"# certificate n={cert.n} p={cert.p} t={cert.t} s={cert.s} "
        f"internal_total={cert.internal_total} h0_edges={cert.h0_edges} "
        f"bound_ok={str(cert.bound_ok).lower()}\n"
    )
    return EXIT_OK if cert.bound_ok else EXIT_VERDICT


def cmd_verify(args) -> int:
    G = _load_graph(args.input)
    cert, _ = corollary1_certificate(G, args.p, seed=args.seed)
    report = oracle_report(G, args.p) if args.with_oracle else None
    row = CertificateRow(cert, report, source=args.input)
    sys.stdout.write(csv_lines([row]))
    sys.stderr.write(human_report(row))
    return EXIT_OK if row.all_applicable_hold() else EXIT_VERDICT


def cmd_sweep(args) -> int:
    config = SweepConfig.load(args.config)
    out = args.out or config.output
    rows, summary = run_sweep(config, jobs=args.jobs)
    text = csv_lines(rows) + summary.line() + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    sys.stderr.write(summary.line() + "\n")
    return EXIT_OK if summary.failures == 0 else EXIT_VERDICT


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turanstab",
        description="Certify that K_{p+1}-free graphs are close to complete p-partite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated graph as an edge list")
    gen.add_argument("spec", help="kind:n:p:param:seed")
    gen.add_argument("--seed", type=int, help="override the seed in the spec")
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    part = sub.add_parser("partition", help="run degree majorization and print the trace")
    part.add_argument("input", help="edge-list file")
    part.add_argument("--p", type=_positive_int, required=True)
    part.set_defaults(func=cmd_partition)

    verify = sub.add_parser("verify", help="print the stability certificate as a CSV row")
    verify.add_argument("input", help="edge-list file")
    verify.add_argument("--p", type=_positive_int, required=True)
    verify.add_argument("--with-oracle", action="store_true", help="compare with exhaustive optima")
    verify.add_argument("--seed", type=int, help="seed to record in the row")
    verify.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="certify every instance of a JSON sweep config")
    sweep.add_argument("--config", required=True)
    sweep.add_argument("--out", help="CSV path (default: config 'output', else stdout)")
    sweep.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 is reserved for K_{p+1} witnesses here
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PreconditionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("witness: " + " ".join(str(v) for v in exc.witness))
        return EXIT_PRECONDITION
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
