# Color-class packer: split into compatible classes, worst-fit each class
import logging
import time
from typing import Iterable, List, NamedTuple, Optional, Sequence

from app.core.errors import SolverInvariantError
from app.core.instance import intervals_conflict
from app.models import Assignment, ClassStat, Instance, RunReport, Solution
from app.solvers.interval_graph import build_graph, color_intervals
from app.solvers.tree import ClassTree, TreeCounters, find_max_key

logger = logging.getLogger(__name__)


class PackedClass(NamedTuple):
    assignments: List[Assignment]
    drones: int
    counters: TreeCounters


def pack_class(
    class_ids: Iterable[int],
    inst: Instance,
    first_index: int = 1,
    audit: Optional[bool] = None,
) -> PackedClass:
    """
    Worst-fit packing of one compatible class: each delivery joins the drone
    with the most remaining capacity if it fits, else opens a new drone.
    Drones are numbered from first_index.
    """
    members = sorted((inst.get(j) for j in class_ids), key=lambda d: (d.launch, d.id))
    for a, b in zip(members, members[1:]):
        if intervals_conflict(a, b):
            raise SolverInvariantError(
                f"color class is not compatible: deliveries {a.id} and {b.id} conflict"
            )

    tree = ClassTree(audit=audit)
    drones: List[List[int]] = []
    for d in members:
        node = find_max_key(tree, d.cost)
        if node is not None:
            drones[node.index - first_index].append(d.id)
            tree.update(node, node.key - d.cost)
        else:
            drones.append([d.id])
            tree.insert(first_index + len(drones) - 1, inst.budget - d.cost)

    assignments = [
        Assignment(drone_index=first_index + pos, delivery_ids=frozenset(ids))
        for pos, ids in enumerate(drones)
    ]
    return PackedClass(assignments, len(assignments), tree.counters)


def class_pair_overflow(assignments: Sequence[Assignment], inst: Instance) -> bool:
    """
    Worst-fit leaves no two drones of a class that could be merged:
    W(S_a) + W(S_b) > B for every pair. Checked on the two lightest drones.
    """
    weights = sorted(a.used_cost(inst) for a in assignments)
    return len(weights) < 2 or weights[0] + weights[1] > inst.budget


def class_weight_bound(stat: ClassStat, budget: int) -> bool:
    """2 * W(J_k) > (m_k - 1) * B."""
    return 2 * stat.weight > (stat.drones - 1) * budget


def solve_with_coloring(inst: Instance, audit: Optional[bool] = None) -> Solution:
    """
    Color the interval graph with clique_number colors, then pack every
    color class on its own. Classes get contiguous drone index blocks in
    color order. Uses fewer than 2*OPT + clique_number drones.
    """
    started = time.perf_counter()
    graph = build_graph(inst)
    coloring = color_intervals(inst, graph)

    assignments: List[Assignment] = []
    stats: List[ClassStat] = []
    totals = TreeCounters()
    for color, class_ids in enumerate(coloring.classes, start=1):
        packed, m_k, counters = pack_class(class_ids, inst, first_index=len(assignments) + 1, audit=audit)
        assignments.extend(packed)
        stats.append(
            ClassStat(
                color=color,
                size=len(class_ids),
                weight=sum(inst.get(j).cost for j in class_ids),
                drones=m_k,
            )
        )
        for name, value in vars(counters).items():
            setattr(totals, name, getattr(totals, name) + value)
        logger.debug("class %d: size=%d drones=%d", color, len(class_ids), m_k)

    report = RunReport(
        algorithm="coloring",
        drones_used=len(assignments),
        check_calls=totals.checks,
        tree_ops=totals.as_ops(),
        elapsed=time.perf_counter() - started,
        class_stats=tuple(stats),
    )
    logger.info(
        "coloring: n=%d omega=%d drones=%d elapsed=%.4fs",
        inst.n, graph.clique_number, report.drones_used, report.elapsed,
    )
    return Solution(assignments=tuple(assignments), meta=report)
