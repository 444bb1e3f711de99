"""
Exact minimum drone count by branch and bound, plus an LP-format export of
the integer program (min sum y_i; capacity, assignment and conflict rows).

The search places deliveries in launch order. A drone accepts the next
delivery iff its largest rendezvous is before the delivery's launch and the
cost fits, which is exactly pairwise compatibility under launch order.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional

from app.core.config import EXACT_CAP
from app.core.errors import CapExceededError
from app.models import Assignment, Instance, RunReport, Solution
from app.solvers.interval_graph import build_graph, clique_number

logger = logging.getLogger(__name__)


@dataclass
class _Drone:
    remaining: int
    last_rendezvous: int
    members: List[int] = field(default_factory=list)


@dataclass
class SearchState:
    """Mutable state of one branch-and-bound run."""
    open_drones: List[_Drone] = field(default_factory=list)
    incumbent: int = 0
    best: List[List[int]] = field(default_factory=list)
    omega: int = 0
    explored: int = 0
    pruned: int = 0


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def solve_exact(inst: Instance, cap: Optional[int] = None) -> Solution:
    """Provably minimum drone count with a witness assignment."""
    cap = EXACT_CAP if cap is None else cap
    if inst.n > cap:
        raise CapExceededError("solve_exact", inst.n, cap)

    started = time.perf_counter()
    order = inst.launch_order()
    budget = inst.budget
    suffix_cost = [0] * (inst.n + 1)
    for pos in range(inst.n - 1, -1, -1):
        suffix_cost[pos] = suffix_cost[pos + 1] + order[pos].cost

    state = SearchState(
        incumbent=inst.n,
        best=[[d.id] for d in order],
        omega=clique_number(inst),
    )
    root_bound = max(state.omega, _ceil_div(suffix_cost[0], budget)) if inst.n else 0

    def lower_bound(pos: int) -> int:
        drones = state.open_drones
        residual = sum(dr.remaining for dr in drones)
        overflow = max(0, suffix_cost[pos] - residual)
        return max(root_bound, len(drones) + _ceil_div(overflow, budget))

    def search(pos: int) -> None:
        state.explored += 1
        drones = state.open_drones
        if pos == inst.n:
            if len(drones) < state.incumbent:
                state.incumbent = len(drones)
                state.best = [list(dr.members) for dr in drones]
                logger.debug("new incumbent %d after %d nodes", state.incumbent, state.explored)
            return
        if lower_bound(pos) >= state.incumbent:
            state.pruned += 1
            return

        d = order[pos]
        tried = set()
        for dr in drones:
            signature = (dr.remaining, dr.last_rendezvous)
            if dr.remaining < d.cost or dr.last_rendezvous >= d.launch or signature in tried:
                continue
            tried.add(signature)
            previous = dr.last_rendezvous
            dr.remaining -= d.cost
            dr.last_rendezvous = max(previous, d.rendezvous)
            dr.members.append(d.id)
            search(pos + 1)
            dr.members.pop()
            dr.last_rendezvous = previous
            dr.remaining += d.cost
            if state.incumbent <= root_bound:
                return

        # drones are identical: only ever open the next unused one
        if len(drones) + 1 < state.incumbent:
            drones.append(_Drone(budget - d.cost, d.rendezvous, [d.id]))
            search(pos + 1)
            drones.pop()

    if inst.n:
        search(0)

    assignments = tuple(
        Assignment(drone_index=i, delivery_ids=frozenset(ids))
        for i, ids in enumerate(state.best, start=1)
    )
    report = RunReport(
        algorithm="exact",
        drones_used=len(assignments),
        tree_ops={"explored": state.explored, "pruned": state.pruned},
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        "exact: n=%d opt=%d explored=%d pruned=%d elapsed=%.4fs",
        inst.n, report.drones_used, state.explored, state.pruned, report.elapsed,
    )
    return Solution(assignments=assignments, meta=report)


def _terms(pairs) -> str:
    parts = []
    for coef, name in pairs:
        sign = "-" if coef < 0 else "+"
        magnitude = abs(coef)
        parts.append(f"{sign} {name}" if magnitude == 1 else f"{sign} {magnitude} {name}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def export_ilp(inst: Instance) -> str:
    """
    LP-format text of the drone packing integer program with a pool of n
    drones. Rows come in the order capacity (cap_i), assignment (asg_j),
    conflict (cfl_i_j_k), each by index; all variables are binary.
    """
    n = inst.n
    drones = range(1, n + 1)
    conflicts = build_graph(inst).edges()
    output = [f"\\ drone delivery packing: n={n} budget={inst.budget}\n", "minimize\n"]
    output.append(f" obj: {_terms((1, f'y_{i}') for i in drones)}\n")

    output.append("subject to\n")
    for i in drones:
        row = [(d.cost, f"x_{i}_{d.id}") for d in inst.deliveries] + [(-inst.budget, f"y_{i}")]
        output.append(f" cap_{i}: {_terms(row)} <= 0\n")
    for d in inst.deliveries:
        output.append(f" asg_{d.id}: {_terms((1, f'x_{i}_{d.id}') for i in drones)} = 1\n")
    for i in drones:
        for j, k in conflicts:
            output.append(f" cfl_{i}_{j}_{k}: x_{i}_{j} + x_{i}_{k} <= 1\n")

    output.append("binary\n")
    for i in drones:
        for d in inst.deliveries:
            output.append(f" x_{i}_{d.id}\n")
    for i in drones:
        output.append(f" y_{i}\n")
    output.append("end\n")
    return "".join(output)
