# Independent solution checker. Uses only the core predicates, never solver code.
from dataclasses import dataclass, field
from typing import Dict, List

from app.core.instance import intervals_conflict
from app.models import Instance, Solution


@dataclass
class VerificationReport:
    """
    `violations` break the partition, compatibility or budget rules and decide
    `passed`. `notes` flag a solution file whose report disagrees with its
    assignments; they do not affect `passed`.
    """
    violations: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def verify_solution(inst: Instance, sol: Solution) -> VerificationReport:
    """
    Check a solution against the problem definition:
    every delivery flown by exactly one drone, every drone's set compatible
    and within budget, no empty drone. Violations are reported, never raised.
    """
    report = VerificationReport()
    owner: Dict[int, int] = {}
    seen_drones = set()

    for a in sol.assignments:
        drone = a.drone_index
        if drone in seen_drones:
            report.violations.append(f"drone {drone} listed twice")
        seen_drones.add(drone)
        if not a.delivery_ids:
            report.violations.append(f"drone {drone} is empty")
            continue

        members = []
        for j in sorted(a.delivery_ids):
            d = inst.get(j)
            if d is None:
                report.violations.append(f"unknown delivery {j} in drone {drone}")
                continue
            if j in owner:
                report.violations.append(
                    f"delivery {j} assigned to drones {owner[j]} and {drone}"
                )
            else:
                owner[j] = drone
            members.append(d)

        used = sum(d.cost for d in members)
        if used > inst.budget:
            report.violations.append(
                f"drone {drone} over budget: {used} > {inst.budget}"
            )
        members.sort(key=lambda d: (d.launch, d.rendezvous, d.id))
        for a_, b_ in zip(members, members[1:]):
            if intervals_conflict(a_, b_):
                report.violations.append(
                    f"conflict in drone {drone}: deliveries {a_.id} and {b_.id}"
                )

    for d in inst.deliveries:
        if d.id not in owner:
            report.violations.append(f"delivery {d.id} unassigned")

    if sol.meta.drones_used != len(sol.assignments):
        report.notes.append(
            f"report claims {sol.meta.drones_used} drones, solution has {len(sol.assignments)}"
        )
    return report
