# Conflict graph over delivery intervals: degrees, max degree, clique number, coloring
import heapq
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from app.core.errors import SolverInvariantError
from app.models import Instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalGraph:
    """
    Vertices are delivery ids; an edge joins two conflicting deliveries.
    degrees[j] is N(j), the number of deliveries j conflicts with.
    """
    n: int
    adjacency: Mapping[int, Tuple[int, ...]]
    degrees: Mapping[int, int]
    edge_count: int
    max_degree: int
    clique_number: int

    def edges(self) -> List[Tuple[int, int]]:
        return [(j, k) for j, nbrs in self.adjacency.items() for k in nbrs if j < k]


@dataclass(frozen=True)
class Coloring:
    color_of: Mapping[int, int]
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def colors(self) -> int:
        return len(self.classes)


def build_graph(inst: Instance) -> IntervalGraph:
    """
    Endpoint sweep in launch order. An interval still active when j launches
    (rendezvous >= launch_j) conflicts with j, so each edge is found exactly
    once: O(n log n + n_e).
    """
    neighbours: Dict[int, List[int]] = {d.id: [] for d in inst.deliveries}
    active: List[Tuple[int, int]] = []  # heap of (rendezvous, id)
    alive = set()

    for d in inst.launch_order():
        while active and active[0][0] < d.launch:
            alive.discard(heapq.heappop(active)[1])
        for k in alive:
            neighbours[k].append(d.id)
            neighbours[d.id].append(k)
        heapq.heappush(active, (d.rendezvous, d.id))
        alive.add(d.id)

    adjacency = {j: tuple(sorted(nbrs)) for j, nbrs in neighbours.items()}
    degrees = {j: len(nbrs) for j, nbrs in adjacency.items()}
    edge_count = sum(degrees.values()) // 2
    graph = IntervalGraph(
        n=inst.n,
        adjacency=adjacency,
        degrees=degrees,
        edge_count=edge_count,
        max_degree=max(degrees.values(), default=0),
        clique_number=clique_number(inst),
    )
    logger.debug(
        "interval graph: n=%d n_e=%d max_degree=%d omega=%d",
        graph.n, graph.edge_count, graph.max_degree, graph.clique_number,
    )
    return graph


def clique_number(inst: Instance) -> int:
    """Maximum number of intervals covering one instant."""
    # at equal coordinates starts (0) sort before ends (1): touching counts as overlap
    events = sorted(
        [(d.launch, 0) for d in inst.deliveries] + [(d.rendezvous, 1) for d in inst.deliveries]
    )
    depth = best = 0
    for _, kind in events:
        if kind == 0:
            depth += 1
            best = max(best, depth)
        else:
            depth -= 1
    return best


def color_intervals(inst: Instance, g: IntervalGraph) -> Coloring:
    """
    Sweep in (launch, rendezvous, id) order handing each interval the smallest
    color not held by an interval still covering its launch. Interval graphs
    are perfect, so this uses exactly clique_number colors.
    """
    free: List[int] = []
    active: List[Tuple[int, int, int]] = []  # heap of (rendezvous, id, color)
    next_color = 1
    color_of: Dict[int, int] = {}

    for d in inst.launch_order():
        while active and active[0][0] < d.launch:
            heapq.heappush(free, heapq.heappop(active)[2])
        if free:
            color = heapq.heappop(free)
        else:
            color = next_color
            next_color += 1
        color_of[d.id] = color
        heapq.heappush(active, (d.rendezvous, d.id, color))

    classes: List[List[int]] = [[] for _ in range(next_color - 1)]
    for j in sorted(color_of):
        classes[color_of[j] - 1].append(j)
    if len(classes) != g.clique_number:
        raise SolverInvariantError(
            f"coloring used {len(classes)} colors, clique number is {g.clique_number}"
        )
    return Coloring(color_of=color_of, classes=tuple(tuple(c) for c in classes))
