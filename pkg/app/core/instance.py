# Instance validation and the conflict / feasibility predicates
import logging
from typing import Any, Iterable, List, Mapping, Union

from pydantic import ValidationError

from app.core.errors import InstanceValidationError, UnknownDeliveryError
from app.models import Delivery, Instance
from app.schemas import InstanceFile

logger = logging.getLogger(__name__)


def validate_instance(raw: Union[InstanceFile, Mapping[str, Any]]) -> Instance:
    """
    Turn a parsed instance description into a canonical Instance.

    Deliveries are re-indexed 1..n in input order. Every problem found is
    collected, so callers see all offending deliveries at once:
    - budget missing or not positive
    - duplicate ids
    - launch > rendezvous, negative times
    - cost <= 0 or cost > budget
    """
    if not isinstance(raw, InstanceFile):
        try:
            raw = InstanceFile.model_validate(raw)
        except ValidationError as exc:
            raise InstanceValidationError(
                f"{'.'.join(str(p) for p in err['loc']) or 'instance'}: {err['msg']}"
                for err in exc.errors()
            ) from exc

    diagnostics: List[str] = []
    budget = raw.budget
    if budget is None or budget <= 0:
        diagnostics.append(f"budget must be a positive integer, got {budget!r}")

    seen = set()
    for rec in raw.deliveries:
        name = f"delivery {rec.id}"
        if rec.id in seen:
            diagnostics.append(f"{name}: duplicate id")
        seen.add(rec.id)
        if rec.launch < 0 or rec.rendezvous < 0:
            diagnostics.append(f"{name}: times must be non-negative")
        if rec.launch > rec.rendezvous:
            diagnostics.append(
                f"{name}: launch {rec.launch} is after rendezvous {rec.rendezvous}"
            )
        if rec.cost <= 0:
            diagnostics.append(f"{name}: cost must be positive, got {rec.cost}")
        elif budget is not None and budget > 0 and rec.cost > budget:
            diagnostics.append(f"{name}: cost exceeds budget ({rec.cost} > {budget})")

    if diagnostics:
        raise InstanceValidationError(diagnostics)

    deliveries = tuple(
        Delivery(id=pos, launch=rec.launch, rendezvous=rec.rendezvous, cost=rec.cost)
        for pos, rec in enumerate(raw.deliveries, start=1)
    )
    if any(rec.id != pos for pos, rec in enumerate(raw.deliveries, start=1)):
        logger.warning("delivery ids re-indexed to 1..%d in input order", len(deliveries))
    return Instance(budget=budget, deliveries=deliveries)


def intervals_conflict(a: Delivery, b: Delivery) -> bool:
    # closed intervals: touching endpoints conflict
    return a.launch <= b.rendezvous and b.launch <= a.rendezvous


def _members(ids: Iterable[int], inst: Instance) -> List[Delivery]:
    members = []
    for j in ids:
        d = inst.get(j)
        if d is None:
            raise UnknownDeliveryError(j)
        members.append(d)
    return members


def is_feasible_set(ids: Iterable[int], inst: Instance) -> bool:
    """Pairwise compatible and total cost within the budget."""
    members = _members(ids, inst)
    if sum(d.cost for d in members) > inst.budget:
        return False
    # sorted by launch, a set is pairwise compatible iff neighbours are
    members.sort(key=lambda d: (d.launch, d.rendezvous))
    return not any(intervals_conflict(a, b) for a, b in zip(members, members[1:]))
