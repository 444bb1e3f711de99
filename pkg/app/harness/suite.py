"""
Batch experiments: solve generated instances, re-verify every solution,
check every proven bound and collect complexity counters.

Any infeasible solution or broken bound aborts the run with the offending
instance written to disk for replay.
"""
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, Field

from app.core.config import BENCH_SIZES, EXACT_CAP, SUITE_WORKERS
from app.core.errors import BoundViolationError
from app.core.files import dump_instance, read_instance, write_text
from app.core.verify import verify_solution
from app.harness.generator import GeneratorConfig, generate, sparse_config
from app.models import Instance, Solution
from app.solvers.coloring import class_pair_overflow, solve_with_coloring
from app.solvers.exact import solve_exact
from app.solvers.greedy import half_budget_census, solve_greedy
from app.solvers.interval_graph import build_graph

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "instance_id", "seed", "n", "n_e", "max_degree", "omega", "lower_bound",
    "m_greedy", "m_coloring", "opt", "lemma1_census", "check_calls",
    "elapsed_greedy", "elapsed_coloring", "elapsed_exact",
]


class ClassRecord(BaseModel):
    size: int
    weight: int
    drones: int


class BoundCertificate(BaseModel):
    """Per-instance record of sizes, drone counts and the quantities the bounds talk about."""
    instance_id: int
    seed: Optional[int] = None
    n: int
    n_e: int
    max_degree: int
    omega: int
    lower_bound: int
    budget: int
    m_greedy: Optional[int] = None
    m_coloring: Optional[int] = None
    opt: Optional[int] = None
    lemma1_census: Optional[int] = None
    classes: List[ClassRecord] = Field(default_factory=list)
    class_pairs_overflow: bool = True
    check_calls: Optional[int] = None
    elapsed: Dict[str, float] = Field(default_factory=dict)

    def violations(self) -> List[str]:
        found = []
        if self.check_calls is not None and self.check_calls > self.n + 2 * self.n_e:
            found.append(f"check calls {self.check_calls} > n + 2*n_e = {self.n + 2 * self.n_e}")
        if self.m_greedy is not None:
            if self.lemma1_census is not None and self.lemma1_census < self.m_greedy - self.max_degree - 1:
                found.append(
                    f"half-budget census {self.lemma1_census} < m - max_degree - 1 = "
                    f"{self.m_greedy - self.max_degree - 1}"
                )
            if self.m_greedy < self.omega:
                found.append(f"greedy used {self.m_greedy} < omega = {self.omega} drones")
        if self.m_coloring is not None:
            if self.m_coloring < self.omega:
                found.append(f"coloring used {self.m_coloring} < omega = {self.omega} drones")
            for k, c in enumerate(self.classes, start=1):
                if not 2 * c.weight > (c.drones - 1) * self.budget:
                    found.append(f"class {k}: 2*W = {2 * c.weight} <= (m_k - 1)*B")
            if not self.class_pairs_overflow:
                found.append("two drones of one color class fit together")
        if self.opt is not None:
            if self.omega > self.opt:
                found.append(f"omega {self.omega} > OPT {self.opt}")
            if self.m_greedy is not None:
                if self.m_greedy > 2 * self.opt + self.max_degree + 1:
                    found.append(
                        f"greedy {self.m_greedy} > 2*OPT + max_degree + 1 = "
                        f"{2 * self.opt + self.max_degree + 1}"
                    )
                if self.m_greedy < self.opt:
                    found.append(f"greedy {self.m_greedy} beats OPT {self.opt}")
            if self.m_coloring is not None:
                # with no deliveries OPT = omega = 0 and the strict bound is vacuous
                if self.opt and self.m_coloring > 2 * self.opt + self.omega - 1:
                    found.append(
                        f"coloring {self.m_coloring} > 2*OPT + omega - 1 = "
                        f"{2 * self.opt + self.omega - 1}"
                    )
                if self.m_coloring > 3 * self.opt:
                    found.append(f"coloring {self.m_coloring} > 3*OPT = {3 * self.opt}")
                if self.m_coloring < self.opt:
                    found.append(f"coloring {self.m_coloring} beats OPT {self.opt}")
        return found

    def as_row(self) -> Dict[str, object]:
        row = self.model_dump(exclude={"classes", "elapsed", "budget", "class_pairs_overflow"})
        for alg in ("greedy", "coloring", "exact"):
            row[f"elapsed_{alg}"] = self.elapsed.get(alg)
        return row


class SuiteReport(BaseModel):
    certificates: List[BoundCertificate] = Field(default_factory=list)

    def table(self) -> pd.DataFrame:
        return pd.DataFrame([c.as_row() for c in self.certificates], columns=CSV_COLUMNS)

    def summary(self) -> str:
        if not self.certificates:
            return "no instances"
        df = self.table()
        lines = [f"instances: {len(df)}   max n: {df['n'].max()}   all bounds hold"]
        for column in ("m_greedy", "m_coloring"):
            solved = df[df[column].notna()]
            if solved.empty:
                continue
            opt = pd.to_numeric(solved["opt"], errors="coerce")
            reference = opt.fillna(solved["lower_bound"]).clip(lower=1)
            ratio = solved[column] / reference
            lines.append(
                f"{column}: total {int(solved[column].sum())}   "
                f"mean ratio {ratio.mean():.3f}   worst ratio {ratio.max():.3f}"
            )
        if df["opt"].notna().any():
            lines.append(f"instances with OPT: {int(df['opt'].notna().sum())}")
        return "\n".join(lines)

    def write(self, out_dir: Path) -> None:
        out_dir.mkdir(parents=True, exist_ok=True)
        self.table().to_csv(out_dir / "summary.csv", index=False)
        write_text(out_dir / "certificates.json", self.model_dump_json(indent=2) + "\n")


def certify(
    inst: Instance,
    algorithms: Sequence[str],
    instance_id: int = 0,
    seed: Optional[int] = None,
    cap: int = EXACT_CAP,
    replay_dir: Optional[Path] = None,
) -> BoundCertificate:
    """Solve with each requested algorithm, verify, and check the bounds."""
    graph = build_graph(inst)
    cert = BoundCertificate(
        instance_id=instance_id,
        seed=seed,
        n=inst.n,
        n_e=graph.edge_count,
        max_degree=graph.max_degree,
        omega=graph.clique_number,
        lower_bound=max(graph.clique_number, -(-inst.total_cost // inst.budget)),
        budget=inst.budget,
    )
    solutions: Dict[str, Solution] = {}
    if "greedy" in algorithms:
        sol = solutions["greedy"] = solve_greedy(inst, graph=graph)
        cert.m_greedy = sol.drones_used
        cert.lemma1_census = half_budget_census(sol, inst)
        cert.check_calls = sol.meta.check_calls
    if "coloring" in algorithms:
        sol = solutions["coloring"] = solve_with_coloring(inst)
        cert.m_coloring = sol.drones_used
        start = 0
        for stat in sol.meta.class_stats:
            block = sol.assignments[start:start + stat.drones]
            start += stat.drones
            cert.classes.append(ClassRecord(size=stat.size, weight=stat.weight, drones=stat.drones))
            cert.class_pairs_overflow &= class_pair_overflow(block, inst)
    if "exact" in algorithms:
        if inst.n <= cap:
            sol = solutions["exact"] = solve_exact(inst, cap=cap)
            cert.opt = sol.drones_used
        else:
            logger.info("instance %d: n=%d above cap %d, no OPT", instance_id, inst.n, cap)

    problems = []
    for alg, sol in solutions.items():
        cert.elapsed[alg] = sol.meta.elapsed
        report = verify_solution(inst, sol)
        problems.extend(f"{alg}: {v}" for v in report.violations)
    problems.extend(cert.violations())
    if problems:
        replay = None
        if replay_dir is not None:
            replay = replay_dir / f"failure-{seed if seed is not None else instance_id}.json"
            write_text(replay, dump_instance(inst))
        raise BoundViolationError(
            f"instance {instance_id}: " + "; ".join(problems),
            replay_path=str(replay) if replay else None,
            problems=problems,
        )
    return cert


def replay_failure(
    path: Path,
    algorithms: Sequence[str] = ("greedy", "coloring", "exact"),
    cap: int = EXACT_CAP,
) -> BoundCertificate:
    """Re-certify a saved instance. A reproduced failure raises again, without a new replay file."""
    inst = read_instance(path)
    logger.info("replaying %s (n=%d)", path, inst.n)
    return certify(inst, algorithms, cap=cap, replay_dir=None)


def _certify_config(args) -> BoundCertificate:
    instance_id, cfg, algorithms, cap, replay_dir = args
    return certify(generate(cfg), algorithms, instance_id, cfg.seed, cap, replay_dir)


def run_suite(
    cfgs: Sequence[GeneratorConfig],
    algorithms: Sequence[str] = ("greedy", "coloring", "exact"),
    cap: int = EXACT_CAP,
    replay_dir: Optional[Path] = Path("failures"),
    workers: int = SUITE_WORKERS,
) -> SuiteReport:
    """
    Certify one generated instance per config. Results are ordered by
    instance id whatever order the workers finish in.
    """
    jobs = [(k, cfg, tuple(algorithms), cap, replay_dir) for k, cfg in enumerate(cfgs)]
    started = time.perf_counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            certificates = list(pool.map(_certify_config, jobs, chunksize=16))
    else:
        certificates = [_certify_config(job) for job in jobs]
    logger.info(
        "suite: %d instances certified in %.2fs", len(certificates), time.perf_counter() - started
    )
    return SuiteReport(certificates=certificates)


class ScalingRecord(BaseModel):
    n: int
    n_e: int
    check_calls: int
    elapsed: float
    drones: int


def run_scaling(sizes: Sequence[int] = BENCH_SIZES, seed: int = 0) -> List[ScalingRecord]:
    """Greedy on large sparse instances; the probe accounting bound is enforced."""
    records = []
    for n in sizes:
        inst = generate(sparse_config(n, seed))
        graph = build_graph(inst)
        sol = solve_greedy(inst, graph=graph)
        if sol.meta.check_calls > n + 2 * graph.edge_count:
            raise BoundViolationError(
                f"scaling n={n}: check calls {sol.meta.check_calls} > n + 2*n_e"
            )
        records.append(
            ScalingRecord(
                n=n,
                n_e=graph.edge_count,
                check_calls=sol.meta.check_calls,
                elapsed=sol.meta.elapsed,
                drones=sol.drones_used,
            )
        )
        logger.info("scaling n=%d: %.3fs", n, sol.meta.elapsed)
    return records


def growth_exponents(records: Sequence[ScalingRecord]) -> List[float]:
    """log(t2/t1) / log(n2/n1) between consecutive sizes; below 2 means sub-quadratic."""
    exponents = []
    for a, b in zip(records, records[1:]):
        if a.elapsed > 0 and b.elapsed > 0 and b.n > a.n:
            exponents.append(math.log(b.elapsed / a.elapsed) / math.log(b.n / a.n))
    return exponents
