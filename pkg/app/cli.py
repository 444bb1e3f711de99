"""
Command-line entry point: python -m app.cli <command> ...

  gen        write a random instance
  solve      run greedy | coloring | exact on an instance file
  verify     check a solution file against its instance
  graph      interval graph statistics
  export-lp  write the integer program in LP format
  reduce-bp  turn a bin-packing file into a drone instance
  bench      bound-certificate suite, greedy scaling run, or replay of a saved failure
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from app.core.config import BENCH_SIZES, EXACT_CAP, SUITE_WORKERS
from app.core.errors import DDPError
from app.core.files import (
    dump_instance,
    dump_solution,
    read_bin_packing,
    read_instance,
    read_solution,
    write_model,
    write_text,
)
from app.core.logging_config import configure_logging
from app.core.verify import verify_solution
from app.harness.generator import GeneratorConfig, acceptance_configs, generate
from app.harness.suite import growth_exponents, replay_failure, run_scaling, run_suite
from app.models import ALGORITHMS
from app.schemas import GraphSummary, InstanceFile, to_json
from app.solvers.exact import export_ilp
from app.solvers.reduction import bp_to_ddp
from app.solvers.registry import solve

logger = logging.getLogger("app.cli")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_text(out, text)
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(
        n=args.n,
        budget=args.budget,
        cost_min=args.cost_min,
        cost_max=args.cost_max if args.cost_max is not None else args.budget,
        horizon=args.horizon,
        overlap=args.overlap,
        seed=args.seed,
    )
    _emit(dump_instance(generate(cfg)), args.out)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    sol = solve(inst, args.algorithm, args.cap)
    _emit(dump_solution(sol), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    report = verify_solution(inst, read_solution(args.solution))
    for note in report.notes:
        print(f"NOTE {note}")
    if report.passed:
        print("pass")
        return 0
    for violation in report.violations:
        print(f"FAIL {violation}")
    return 1


def cmd_graph(args: argparse.Namespace) -> int:
    _emit(to_json(GraphSummary.for_instance(read_instance(args.instance))), args.out)
    return 0


def cmd_export_lp(args: argparse.Namespace) -> int:
    write_text(args.out, export_ilp(read_instance(args.instance)))
    return 0


def cmd_reduce_bp(args: argparse.Namespace) -> int:
    inst = bp_to_ddp(read_bin_packing(args.bp_file).to_instance())
    write_model(args.ddp_file, InstanceFile.from_instance(inst))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    if args.replay:
        cert = replay_failure(Path(args.replay), args.algorithms, cap=args.cap)
        print(to_json(cert), end="")
        return 0

    out = Path(args.out)
    if args.scaling:
        records = run_scaling(args.sizes or BENCH_SIZES, seed=args.seed)
        for r in records:
            print(f"n={r.n:>7}  n_e={r.n_e:>7}  checks={r.check_calls:>7}  {r.elapsed:.3f}s")
        print("growth exponents:", ", ".join(f"{e:.2f}" for e in growth_exponents(records)))
        out.mkdir(parents=True, exist_ok=True)
        write_text(out / "scaling.json", json.dumps([r.model_dump() for r in records], indent=2) + "\n")
        return 0

    configs = acceptance_configs(args.instances, max_n=args.max_n, seed=args.seed)
    report = run_suite(
        configs, args.algorithms, cap=args.cap, replay_dir=out, workers=args.workers
    )
    report.write(out)
    print(report.summary())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ddp", description="Drone delivery packing toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--cost-min", type=int, default=1)
    p.add_argument("--cost-max", type=int)
    p.add_argument("--horizon", type=int, default=1000)
    p.add_argument("--overlap", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="greedy")
    p.add_argument("--cap", type=int, default=EXACT_CAP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="verify a solution file")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="interval graph statistics")
    p.add_argument("instance")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("export-lp", help="write the integer program as LP text")
    p.add_argument("instance")
    p.add_argument("out")
    p.set_defaults(func=cmd_export_lp)

    p = sub.add_parser("reduce-bp", help="bin packing file -> drone instance file")
    p.add_argument("bp_file")
    p.add_argument("ddp_file")
    p.set_defaults(func=cmd_reduce_bp)

    p = sub.add_parser("bench", help="certify bounds on random instances")
    p.add_argument("--instances", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--algorithm", dest="algorithms", action="append", choices=ALGORITHMS)
    p.add_argument("--cap", type=int, default=EXACT_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=SUITE_WORKERS)
    p.add_argument("--scaling", action="store_true", help="greedy scaling run instead")
    p.add_argument("--sizes", type=int, nargs="+")
    p.add_argument("--replay", metavar="INSTANCE", help="re-certify a saved failure-<seed>.json")
    p.add_argument("--out", default="bench-out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "algorithms", "unset") is None:
        args.algorithms = list(ALGORITHMS)
    configure_logging("DEBUG" if args.verbose else None)
    try:
        return args.func(args)
    except (DDPError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
