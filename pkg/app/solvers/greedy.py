# Launch-ordered greedy packer backed by the augmented drone tree
import logging
import time
from typing import Dict, List, Optional

from app.models import Assignment, Instance, RunReport, Solution
from app.solvers.interval_graph import IntervalGraph, build_graph
from app.solvers.tree import DroneTree, ProbeBudget, find_feasible

logger = logging.getLogger(__name__)


def solve_greedy(
    inst: Instance,
    graph: Optional[IntervalGraph] = None,
    audit: Optional[bool] = None,
) -> Solution:
    """
    Walk the deliveries by (launch, rendezvous, id). Each goes to the feasible
    open drone with the most remaining capacity, found by a reverse in-order
    search limited to N(j) + 1 checks; otherwise a new drone is opened.

    Uses at most 2*OPT + max_degree + 1 drones.
    """
    started = time.perf_counter()
    if graph is None:
        graph = build_graph(inst)
    tree = DroneTree(audit=audit)
    members: Dict[int, List[int]] = {}

    for d in inst.launch_order():
        budget = ProbeBudget.for_conflicts(graph.degrees[d.id])
        node = find_feasible(tree, d, budget)
        if node is not None:
            members[node.index].append(d.id)
            tree.update(node, node.key - d.cost, max(d.rendezvous, node.data))
            logger.debug("delivery %d -> drone %d (key now %d)", d.id, node.index, node.key)
        else:
            index = tree.size + 1
            members[index] = [d.id]
            tree.insert(index, inst.budget - d.cost, d.rendezvous)
            logger.debug("delivery %d opens drone %d", d.id, index)

    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("drone tree (index, key, data): %s", tree.dump())

    assignments = tuple(
        Assignment(drone_index=i, delivery_ids=frozenset(ids)) for i, ids in sorted(members.items())
    )
    report = RunReport(
        algorithm="greedy",
        drones_used=len(assignments),
        check_calls=tree.counters.checks,
        tree_ops=tree.counters.as_ops(),
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        "greedy: n=%d drones=%d checks=%d elapsed=%.4fs",
        inst.n, report.drones_used, report.check_calls, report.elapsed,
    )
    return Solution(assignments=assignments, meta=report)


def half_budget_census(sol: Solution, inst: Instance) -> int:
    """Number of drones whose used energy is at least B/2 (compared as 2*used >= B)."""
    return sum(1 for a in sol.assignments if 2 * a.used_cost(inst) >= inst.budget)
