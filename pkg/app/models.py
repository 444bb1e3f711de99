# Domain types for the drone-delivery packing problem.
# Everything here is immutable once built; solvers share instances freely.
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Optional, Tuple

ALGORITHMS = ("greedy", "coloring", "exact")


@dataclass(frozen=True, slots=True)
class Delivery:
    """
    One delivery: a closed time interval [launch, rendezvous] and its energy cost.
    Times and costs are integers; callers pre-scale decimal data.
    """
    id: int
    launch: int
    rendezvous: int
    cost: int

    def __repr__(self) -> str:
        return f"Delivery(id={self.id!r}, [{self.launch}, {self.rendezvous}], cost={self.cost!r})"


@dataclass(frozen=True, slots=True)
class Instance:
    """Battery budget B plus deliveries with ids 1..n in input order."""
    budget: int
    deliveries: Tuple[Delivery, ...]
    _by_id: Dict[int, Delivery] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_id", {d.id: d for d in self.deliveries})

    @property
    def n(self) -> int:
        return len(self.deliveries)

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(d.id for d in self.deliveries)

    @property
    def total_cost(self) -> int:
        return sum(d.cost for d in self.deliveries)

    def get(self, delivery_id: int) -> Optional[Delivery]:
        return self._by_id.get(delivery_id)

    def __contains__(self, delivery_id: object) -> bool:
        return delivery_id in self._by_id

    def __iter__(self) -> Iterator[Delivery]:
        return iter(self.deliveries)

    def launch_order(self) -> Tuple[Delivery, ...]:
        # (launch, rendezvous, id): equal launches always conflict, so any
        # consistent tie order keeps the data < launch compatibility test valid
        return tuple(sorted(self.deliveries, key=lambda d: (d.launch, d.rendezvous, d.id)))


@dataclass(frozen=True, slots=True)
class Assignment:
    """Deliveries flown by one drone."""
    drone_index: int
    delivery_ids: frozenset

    def used_cost(self, inst: Instance) -> int:
        return sum(inst.get(j).cost for j in self.delivery_ids)


@dataclass(frozen=True, slots=True)
class ClassStat:
    """Per color class packing record: |J_k|, W(J_k) and m_k."""
    color: int
    size: int
    weight: int
    drones: int


@dataclass(frozen=True, slots=True)
class RunReport:
    algorithm: str
    drones_used: int = 0
    check_calls: int = 0
    tree_ops: Mapping[str, int] = field(default_factory=dict)
    elapsed: float = 0.0
    class_stats: Tuple[ClassStat, ...] = ()


@dataclass(frozen=True, slots=True)
class Solution:
    """A partition of the deliveries into per-drone assignments."""
    assignments: Tuple[Assignment, ...]
    meta: RunReport

    @property
    def drones_used(self) -> int:
        return len(self.assignments)


@dataclass(frozen=True, slots=True)
class BinPackingInstance:
    """Classical one-dimensional bin packing: item sizes and a bin capacity."""
    capacity: int
    sizes: Tuple[int, ...]
