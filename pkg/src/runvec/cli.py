"""Command-line front end.

Human-readable output by default, ``--json`` for machine output with
stable key order and no timestamps, so identical invocations produce
byte-identical reports.  Reports go to stdout, diagnostics to stderr.

Exit codes: 0 on success with zero verifier failures, 1 on parse errors
or verifier failures, 2 when a requested range exceeds a resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .lemmalab import SWEEP_LIMITS, SWEEP_TARGETS, sweep
from .search import (
    FULL_SEARCH_LIMIT,
    SKEW_SEARCH_LIMIT,
    SearchSpec,
    classify_odd_barker,
    counts_csv,
    enumerate_barker,
)
from .seqcore import (
    BinarySequence,
    ParseError,
    RunLengthEncoding,
    aperiodic_autocorrelations,
    autocorrelation_profile,
    decode_rle,
    encode_rle,
    is_balanced,
    is_barker,
    is_skew_symmetric,
    run_structure,
    run_vector_of,
)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _fmt_vec(values) -> str:
    return " ".join(str(v) for v in values) if values else "(empty)"


def _cmd_analyze(args) -> int:
    if (args.sequence is None) == (args.rle is None):
        print("error: provide either a sequence or --rle", file=sys.stderr)
        return 1
    if args.rle is not None:
        rle = RunLengthEncoding.from_text(args.rle)
        seq = decode_rle(rle)
    else:
        seq = BinarySequence.from_text(args.sequence)
        rle = encode_rle(seq)
    rs = run_structure(rle)
    rv = run_vector_of(rs)
    profile = autocorrelation_profile(seq)
    report = {
        "sequence": seq.to_text(),
        "n": seq.n,
        "rle": rle.to_text(),
        "gamma": rle.gamma,
        "S": sorted(rs.s_set),
        "T": sorted(rs.t_set),
        "C": list(profile.c),
        "C_periodic": list(profile.c_periodic),
        "r_tilde": list(rv.r_tilde),
        "r": list(rv.r),
        "balanced": is_balanced(rs),
        "skew_symmetric": is_skew_symmetric(seq),
        "barker": is_barker(seq),
    }
    if args.json:
        print(_dumps(report))
        return 0
    order = (
        "sequence", "n", "rle", "gamma", "S", "T", "C", "C_periodic",
        "r_tilde", "r", "balanced", "skew_symmetric", "barker",
    )
    for key in order:
        value = report[key]
        if isinstance(value, list):
            value = _fmt_vec(value)
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        print(f"{key:<15} {value}")
    return 0


def _cmd_rle(args) -> int:
    # an encoding always contains a comma; a bare sequence never does
    if "," in args.input:
        rle = RunLengthEncoding.from_text(args.input)
        seq = decode_rle(rle)
        converted = seq.to_text()
    else:
        seq = BinarySequence.from_text(args.input)
        rle = encode_rle(seq)
        converted = rle.to_text()
    if args.json:
        print(_dumps({"sequence": seq.to_text(), "rle": rle.to_text()}))
    else:
        print(converted)
    return 0


def _parse_targets(text: str) -> tuple[str, ...]:
    lookup = {name.lower(): name for name in SWEEP_TARGETS}
    targets = []
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token not in lookup:
            raise ValueError(
                f"unknown verify target {token!r}; choose from {', '.join(SWEEP_TARGETS)}"
            )
        targets.append(lookup[token])
    if not targets:
        raise ValueError("no verify targets given")
    return tuple(targets)


def _cmd_verify(args) -> int:
    targets = _parse_targets(args.targets)
    for target in targets:
        cap = SWEEP_LIMITS[target]
        if args.max_n > cap:
            print(
                f"error: target {target} limited to n <= {cap}, requested {args.max_n}",
                file=sys.stderr,
            )
            return 2
    report = sweep(args.max_n, targets, workers=args.workers)
    if args.json:
        print(_dumps(report.to_json()))
    else:
        print(f"{'target':<10} {'n':>3} {'population':>11} {'hyp_met':>9} {'failures':>9}")
        for rec in report.records:
            print(
                f"{rec.target:<10} {rec.n:>3} {rec.population:>11} "
                f"{rec.hypotheses_met_count:>9} {rec.failure_count:>9}"
            )
        status = "ok" if report.ok else "FAILED"
        print(f"{status}: {len(report.records)} records, max n {args.max_n}")
    return 0 if report.ok else 1


def _search_record(seq: BinarySequence) -> dict:
    return {
        "n": seq.n,
        "sequence": seq.to_text(),
        "rle": encode_rle(seq).to_text(),
        "C": list(aperiodic_autocorrelations(seq)),
        "verdict": "barker",
    }


def _cmd_search(args) -> int:
    spec = SearchSpec(
        n_min=args.min_n, n_max=args.max_n, mode=args.mode, normalize=args.normalize
    )
    limit = args.limit_full if args.mode == "full" else args.limit_skew
    if args.max_n > limit:
        print(
            f"error: {args.mode}-mode search limited to n <= {limit}, "
            f"requested {args.max_n}",
            file=sys.stderr,
        )
        return 2
    found = enumerate_barker(spec, workers=args.workers, limit=limit)
    if args.json:
        for seq in found:
            print(_dumps(_search_record(seq)))
    else:
        for seq in found:
            print(f"n={seq.n:<3} {seq.to_text()}  rle={encode_rle(seq).to_text()}")
        print(f"{len(found)} sequence(s) in [{args.min_n}, {args.max_n}] ({args.mode} mode)")
    return 0


def _cmd_classify(args) -> int:
    if args.max_n > SKEW_SEARCH_LIMIT:
        print(
            f"error: classification limited to n <= {SKEW_SEARCH_LIMIT}, "
            f"requested {args.max_n}",
            file=sys.stderr,
        )
        return 2
    report = classify_odd_barker(args.max_n, workers=args.workers)
    if args.csv:
        Path(args.csv).write_text(counts_csv(report))
    if args.json:
        print(_dumps(report.to_json()))
        return 0
    print(f"{'n':>3} {'count':>6}  normalized rle(s)")
    for n in sorted(report.counts):
        rles = report.normalized_rles.get(n, ())
        shown = " ".join(rle.to_text() for rle in rles) if rles else "-"
        print(f"{n:>3} {report.counts[n]:>6}  {shown}")
    for check in report.checks:
        print(
            f"check n={check['n']} {check['rle']}: structure_ok={check['structure_ok']} "
            f"n<=bound({check['length_bound']})={check['length_bound_ok']}"
        )
    for note in report.notes:
        print(f"note: {note}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="runvec",
        description="Run-vector analysis, verification sweeps, and Barker search "
        "for binary sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one sequence or encoding")
    p.add_argument("sequence", nargs="?", help="sequence as a '+-' string")
    p.add_argument("--rle", help="encoding as '<sign>,r1,r2,...'")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("rle", help="convert between sequence and encoding text")
    p.add_argument("input", help="'+-' string or '<sign>,r1,r2,...'")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_rle)

    p = sub.add_parser("verify", help="run verifier sweeps over full populations")
    p.add_argument(
        "--targets",
        required=True,
        help=f"comma-separated from: {', '.join(SWEEP_TARGETS)}",
    )
    p.add_argument("--max-n", type=int, required=True, help="largest length to sweep")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="enumerate Barker sequences of odd length")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=("full", "skew"), default="full")
    p.add_argument(
        "--normalize",
        action="store_true",
        help="one representative per negation/reversal orbit",
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--limit-full",
        type=int,
        default=FULL_SEARCH_LIMIT,
        help=f"full-mode length cap (default {FULL_SEARCH_LIMIT})",
    )
    p.add_argument(
        "--limit-skew",
        type=int,
        default=SKEW_SEARCH_LIMIT,
        help=f"skew-mode length cap (default {SKEW_SEARCH_LIMIT})",
    )
    p.add_argument("--json", action="store_true", help="JSON lines output")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("classify", help="classify odd Barker encodings up to a length")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--csv", help="also write per-length counts CSV to this path")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_classify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
