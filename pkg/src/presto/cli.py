"""Command-line front end.

    presto count    --network E --motif M --delta D
    presto estimate --network E --motif M --delta D [--variant a|e] (--samples S | --epsilon X --eta Y)
    presto evaluate --network E --motif M --delta D --samples S --runs R [--trim]
    presto stats    --network E (--ell L | --motif M) --delta D [--c C]

Exit codes: 0 success, 2 usage error, 3 input error, 4 runtime error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import shlex
import sys
import time

from .bounds import ApproximationGoal, bennett_sample_size_a, bennett_sample_size_e
from .errors import IngestError, InvalidConfig, InvalidGoal, MotifError, PrestoError
from .evaluation import RunRecord, csv_text, evaluate
from .exact import EdgeSlice, count_instances
from .ingest import parse_motif, parse_network
from .model import compute_stats, edge_start_support, sampling_interval
from .sampler import DEFAULT_SEED, EstimatorConfig, run_estimate

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_RUNTIME = 4

DEFAULT_C = 1.25

log = logging.getLogger("presto")


class UsageError(Exception):
    pass


def _default_workers() -> int:
    raw = os.environ.get("PRESTO_WORKERS")
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"PRESTO_WORKERS must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("PRESTO_WORKERS must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="presto", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--network", required=True, help="edge list: src dst timestamp")
    common.add_argument("--delta", type=float, required=True, help="maximum instance duration")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", help="write the record here instead of stdout")
    common.add_argument("--lenient", action="store_true",
                        help="skip malformed input lines instead of failing")

    motif = argparse.ArgumentParser(add_help=False)
    motif.add_argument("--motif", required=True, help="motif file: x y per line")
    motif.add_argument("--workers", type=int, default=None,
                       help="parallel workers (default: $PRESTO_WORKERS or 1)")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--c", type=float, default=DEFAULT_C, help="window length factor (> 1)")
    sampling.add_argument("--variant", choices=("a", "e", "A", "E"), default="e")
    sampling.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sub.add_parser("count", parents=[common, motif], help="exact count")

    est = sub.add_parser("estimate", parents=[common, motif, sampling], help="sampled estimate")
    est.add_argument("--samples", type=int)
    est.add_argument("--epsilon", type=float)
    est.add_argument("--eta", type=float)
    est.add_argument("--budget-seconds", type=float, dest="budget_seconds",
                     help="stop sampling at this wall-clock budget")

    ev = sub.add_parser("evaluate", parents=[common, motif, sampling],
                        help="MAPE over repeated runs")
    ev.add_argument("--samples", type=int, required=True)
    ev.add_argument("--runs", type=int, default=10)
    ev.add_argument("--trim", action="store_true", help="drop the best and worst run")

    st = sub.add_parser("stats", parents=[common], help="network statistics")
    st.add_argument("--c", type=float, default=DEFAULT_C)
    group = st.add_mutually_exclusive_group(required=True)
    group.add_argument("--ell", type=int, help="number of motif edges")
    group.add_argument("--motif", help="motif file (only its edge count is used)")
    return parser


def _load(args):
    network, report = parse_network(args.network, "lenient" if args.lenient else "strict")
    log.info("ingested %s", report.to_json())
    return network


def _workers(args) -> int:
    workers = args.workers if args.workers is not None else _default_workers()
    if workers < 1:
        raise UsageError("--workers must be >= 1")
    return workers


def cmd_count(args, echo: str) -> RunRecord:
    network = _load(args)
    motif = parse_motif(args.motif)
    workers = _workers(args)
    started = time.perf_counter()
    total = count_instances(EdgeSlice.full(network), motif, args.delta, workers=workers)
    return RunRecord(command=echo, dataset_path=args.network, motif_path=args.motif,
                     delta=args.delta, exact_count=total,
                     elapsed=time.perf_counter() - started, workers=workers)


def derive_samples(network, ell, variant, c, delta, epsilon, eta) -> int:
    goal = ApproximationGoal(epsilon, eta)
    if variant.upper() == "A":
        lo, hi = sampling_interval(network, ell, c, delta)
        return bennett_sample_size_a(goal, hi - lo, c, delta)
    _, count = edge_start_support(network, c, delta)
    return bennett_sample_size_e(goal, count)


def cmd_estimate(args, echo: str) -> RunRecord:
    by_goal = args.epsilon is not None or args.eta is not None
    if (args.samples is not None) == by_goal:
        raise UsageError("give exactly one of --samples or (--epsilon and --eta)")
    if by_goal and (args.epsilon is None or args.eta is None):
        raise UsageError("--epsilon and --eta must be given together")
    network = _load(args)
    motif = parse_motif(args.motif)
    workers = _workers(args)
    if by_goal:
        s = derive_samples(network, motif.ell, args.variant, args.c, args.delta,
                           args.epsilon, args.eta)
        log.info("derived sample size s=%d", s)
    else:
        s = args.samples
    config = EstimatorConfig(args.variant, args.c, args.delta, s, args.seed, workers,
                             args.budget_seconds)
    result = run_estimate(network, motif, config)
    return RunRecord(command=echo, dataset_path=args.network, motif_path=args.motif,
                     delta=args.delta, c=args.c, variant=config.variant,
                     s=result.iterations, seed=args.seed, estimate=result.estimate,
                     elapsed=result.elapsed, workers=workers)


def cmd_evaluate(args, echo: str):
    if args.trim and args.runs < 3:
        raise UsageError("--trim needs --runs >= 3")
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    network = _load(args)
    motif = parse_motif(args.motif)
    return evaluate(network, motif, args.delta, args.c, args.variant, args.samples,
                    args.runs, args.seed, args.trim, _workers(args))


def cmd_stats(args, echo: str):
    network = _load(args)
    ell = args.ell if args.ell is not None else parse_motif(args.motif).ell
    return compute_stats(network, ell, args.c, args.delta)


COMMANDS = {
    "count": cmd_count,
    "estimate": cmd_estimate,
    "evaluate": cmd_evaluate,
    "stats": cmd_stats,
}


def _render(record, fmt: str) -> str:
    if fmt == "csv":
        return record.to_csv() if hasattr(record, "to_csv") else csv_text([record.to_dict()])
    return json.dumps(record.to_dict(), indent=2) + "\n"


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(level=logging.WARNING, format="presto: %(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    echo = shlex.join(["presto", *argv])
    try:
        record = COMMANDS[args.command](args, echo)
    except (UsageError, InvalidConfig, InvalidGoal) as exc:
        print(f"presto: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IngestError, MotifError, OSError) as exc:
        print(f"presto: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PrestoError as exc:
        print(f"presto: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    text = _render(record, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
