"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input/output error, 3 documented
EDk discrepancy (``oracle-check`` only), 4 oracle mismatch in an asserted
configuration.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from lcsk import bench, harness
from lcsk.dataset import Dataset, FormatError, read_dataset, score_matrix
from lcsk.edk_dp import edk_score, edk_traceback
from lcsk.lcsk_dp import lcsk_score, lcsk_traceback
from lcsk.oracle import OracleGuardError
from lcsk.seq import Sequence, normalize

EXIT_USAGE = 1
EXIT_IO = 2

log = logging.getLogger("lcsk")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def resolve_sequence(arg: str, uppercase: bool, label: str) -> Sequence:
    """Inline literal, or ``@path`` to a plain-text / FASTA file (first record used)."""
    if not arg.startswith("@"):
        return normalize(arg, uppercase, id=label)
    dataset = read_dataset(arg[1:], uppercase)
    if not dataset.records:
        raise FormatError(f"{arg[1:]}: no sequences")
    if len(dataset) > 1:
        log.warning("%s holds %d records; using %r", arg[1:], len(dataset), dataset.records[0].id)
    return dataset.records[0]


def run_pairwise(args) -> int:
    a = resolve_sequence(args.a, args.uppercase, "a")
    b = resolve_sequence(args.b, args.uppercase, "b")
    k = args.k
    if k > min(len(a), len(b)):
        log.warning("k=%d exceeds a sequence length (%d, %d); no k-match is possible", k, len(a), len(b))
    report: dict = {"metric": args.command, "k": k}
    if args.command == "lcsk":
        if args.traceback:
            result = lcsk_traceback(a, b, k)
            report["score"] = result.length
            report["matches"] = [m.to_dict() for m in result.matches]
        else:
            report["score"] = lcsk_score(a, b, k)
    else:
        report["mode"] = args.mode
        if args.traceback:
            result = edk_traceback(a, b, k, args.mode)
            report["score"] = result.distance
            report["script"] = [op.to_dict() for op in result.script]
        else:
            report["score"] = edk_score(a, b, k, args.mode)
    if args.format == "json":
        sys.stdout.write(json.dumps(report) + "\n")
    else:
        sys.stdout.write(f"metric\tk\tscore\n{args.command}\t{k}\t{report['score']}\n")
    return 0


def run_matrix(args) -> int:
    dataset: Dataset = read_dataset(args.input, args.uppercase)
    if not dataset.records:
        raise UsageError(f"{args.input}: dataset has no records")
    report = score_matrix(dataset, args.metric, args.k, args.mode, args.jobs)
    text = report.to_tsv()
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def run_oracle_check(args) -> int:
    try:
        report = harness.run_oracle_check(
            args.metric, args.k, args.max_len, args.alphabet, args.trials, args.seed, args.mode
        )
    except OracleGuardError as exc:
        raise UsageError(str(exc))
    for line in report.summary_lines():
        print(line)
    return report.exit_code


def run_bench(args) -> int:
    if args.sizes != sorted(args.sizes):
        raise UsageError("--sizes must be ascending")
    rows = bench.run_bench(args.metric, args.k, args.sizes, args.repeats, args.seed, args.mode)
    sys.stdout.write(bench.format_table(rows, args.metric, args.k))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lcsk", description="LCSk similarity and EDk distance.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("lcsk", "LCSk score of two sequences"), ("edk", "EDk distance of two sequences")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--a", required=True, help="sequence literal or @file")
        p.add_argument("--b", required=True, help="sequence literal or @file")
        p.add_argument("--mode", choices=["full", "indel"], default="full")
        p.add_argument("--traceback", action="store_true")
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--uppercase", action="store_true")
        p.set_defaults(func=run_pairwise)

    p = sub.add_parser("matrix", help="all-pairs score matrix of a FASTA dataset")
    p.add_argument("--metric", choices=["lcsk", "edk"], default="lcsk")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--mode", choices=["full", "indel"], default="full")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--uppercase", action="store_true")
    p.set_defaults(func=run_matrix)

    p = sub.add_parser("oracle-check", help="compare the DP against the brute-force oracle")
    p.add_argument("--metric", choices=["lcsk", "edk"], default="lcsk")
    p.add_argument("--k", type=_int_list, default=[1, 2, 3], help="comma-separated k values")
    p.add_argument("--mode", choices=["full", "indel"], default="full")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--alphabet", default="AC")
    p.add_argument("--trials", type=int, default=0, help="random pairs; 0 means exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=run_oracle_check)

    p = sub.add_parser("bench", help="time and memory scaling of the score-only DP")
    p.add_argument("--metric", choices=["lcsk", "edk"], default="lcsk")
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--mode", choices=["full", "indel"], default="full")
    p.add_argument("--sizes", type=_int_list, default=[1000, 2000, 4000])
    p.add_argument("--repeats", type=_positive, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=run_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lcsk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, OSError) as exc:
        print(f"lcsk: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
