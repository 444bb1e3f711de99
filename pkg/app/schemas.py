# Pydantic schemas for the JSON interchange files and HTTP bodies
import json
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.models import (
    Assignment,
    BinPackingInstance,
    ClassStat,
    Instance,
    RunReport,
    Solution,
)
from app.solvers.interval_graph import build_graph, color_intervals

Algorithm = Literal["greedy", "coloring", "exact"]


def to_json(model: BaseModel) -> str:
    """Canonical text: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


# ===== Instance files =====

class DeliveryRecord(BaseModel):
    """One delivery as written in an instance file"""
    model_config = ConfigDict(strict=True)

    id: int
    launch: int
    rendezvous: int
    cost: int


class InstanceFile(BaseModel):
    """Schema for an instance file: budget plus deliveries"""
    model_config = ConfigDict(strict=True)

    budget: Optional[int] = None  # missing budget is reported by validate_instance
    deliveries: List[DeliveryRecord] = Field(default_factory=list)

    @classmethod
    def from_instance(cls, inst: Instance) -> "InstanceFile":
        return cls(
            budget=inst.budget,
            deliveries=[
                DeliveryRecord(id=d.id, launch=d.launch, rendezvous=d.rendezvous, cost=d.cost)
                for d in inst.deliveries
            ],
        )


# ===== Solution files =====

class AssignmentRecord(BaseModel):
    drone: int
    delivery_ids: List[int]


class ClassStatRecord(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    color: int
    size: int
    weight: int
    drones: int


class ReportRecord(BaseModel):
    check_calls: int = 0
    tree_ops: Dict[str, int] = Field(default_factory=dict)
    elapsed: float = 0.0
    class_stats: List[ClassStatRecord] = Field(default_factory=list)


class SolutionFile(BaseModel):
    """Schema for a solution file"""
    algorithm: Algorithm
    drones_used: int
    assignments: List[AssignmentRecord]
    report: ReportRecord = Field(default_factory=ReportRecord)

    @classmethod
    def from_solution(cls, sol: Solution) -> "SolutionFile":
        meta = sol.meta
        return cls(
            algorithm=meta.algorithm,
            drones_used=meta.drones_used,
            assignments=[
                AssignmentRecord(drone=a.drone_index, delivery_ids=sorted(a.delivery_ids))
                for a in sol.assignments
            ],
            report=ReportRecord(
                check_calls=meta.check_calls,
                tree_ops=dict(meta.tree_ops),
                elapsed=meta.elapsed,
                class_stats=[ClassStatRecord.model_validate(s) for s in meta.class_stats],
            ),
        )

    def to_solution(self) -> Solution:
        return Solution(
            assignments=tuple(
                Assignment(drone_index=a.drone, delivery_ids=frozenset(a.delivery_ids))
                for a in self.assignments
            ),
            meta=RunReport(
                algorithm=self.algorithm,
                drones_used=self.drones_used,
                check_calls=self.report.check_calls,
                tree_ops=dict(self.report.tree_ops),
                elapsed=self.report.elapsed,
                class_stats=tuple(
                    ClassStat(**s.model_dump()) for s in self.report.class_stats
                ),
            ),
        )


# ===== Bin packing files =====

class BinPackingFile(BaseModel):
    """Schema for a bin-packing instance: {capacity, sizes[]}"""
    model_config = ConfigDict(strict=True)

    capacity: int = Field(gt=0)
    sizes: List[int] = Field(default_factory=list)

    def to_instance(self) -> BinPackingInstance:
        return BinPackingInstance(capacity=self.capacity, sizes=tuple(self.sizes))


# ===== Responses =====

class GraphSummary(BaseModel):
    """Interval graph statistics for one instance"""
    n: int
    edge_count: int
    max_degree: int
    clique_number: int
    class_sizes: List[int]

    @classmethod
    def for_instance(cls, inst: Instance) -> "GraphSummary":
        g = build_graph(inst)
        coloring = color_intervals(inst, g)
        return cls(
            n=g.n,
            edge_count=g.edge_count,
            max_degree=g.max_degree,
            clique_number=g.clique_number,
            class_sizes=[len(c) for c in coloring.classes],
        )


class VerifyRequest(BaseModel):
    instance: InstanceFile
    solution: SolutionFile


class VerifyResponse(BaseModel):
    passed: bool
    violations: List[str]
    notes: List[str] = Field(default_factory=list)
