# Bin packing <-> drone packing: items become pairwise-disjoint deliveries
import logging
from typing import List, Optional

from app.core.config import EXACT_CAP
from app.core.errors import CapExceededError, InstanceValidationError
from app.models import BinPackingInstance, Delivery, Instance

logger = logging.getLogger(__name__)


def validate_bin_packing(bp: BinPackingInstance) -> BinPackingInstance:
    problems = [] if bp.capacity > 0 else [f"capacity must be positive, got {bp.capacity}"]
    for pos, size in enumerate(bp.sizes, start=1):
        if not 0 < size <= bp.capacity:
            problems.append(f"item {pos}: size {size} outside (0, {bp.capacity}]")
    if problems:
        raise InstanceValidationError(problems)
    return bp


def bp_to_ddp(bp: BinPackingInstance) -> Instance:
    """Item j becomes delivery j on [2j, 2j+1] with cost s_j and budget b."""
    validate_bin_packing(bp)
    return Instance(
        budget=bp.capacity,
        deliveries=tuple(
            Delivery(id=j, launch=2 * j, rendezvous=2 * j + 1, cost=size)
            for j, size in enumerate(bp.sizes, start=1)
        ),
    )


def ddp_to_bp(inst: Instance) -> BinPackingInstance:
    """Costs as item sizes. Only meaningful when no two deliveries conflict."""
    return BinPackingInstance(capacity=inst.budget, sizes=tuple(d.cost for d in inst.deliveries))


def solve_bp_exact(bp: BinPackingInstance, cap: Optional[int] = None) -> int:
    """
    Minimum number of bins. Items are placed largest first into each
    distinct bin load or one new bin; bins with equal load are interchangeable.
    """
    cap = EXACT_CAP if cap is None else cap
    validate_bin_packing(bp)
    if len(bp.sizes) > cap:
        raise CapExceededError("solve_bp_exact", len(bp.sizes), cap)
    if not bp.sizes:
        return 0

    items = sorted(bp.sizes, reverse=True)
    capacity = bp.capacity
    volume_bound = -(-sum(items) // capacity)
    best = len(items)
    loads: List[int] = []

    def place(pos: int) -> None:
        nonlocal best
        if pos == len(items):
            best = min(best, len(loads))
            return
        remaining = sum(items[pos:])
        slack = sum(capacity - load for load in loads)
        if len(loads) + max(0, -(-(remaining - slack) // capacity)) >= best:
            return
        size = items[pos]
        seen = set()
        for b, load in enumerate(loads):
            if load + size > capacity or load in seen:
                continue
            seen.add(load)
            loads[b] += size
            place(pos + 1)
            loads[b] -= size
            if best == volume_bound:
                return
        if len(loads) + 1 < best:
            loads.append(size)
            place(pos + 1)
            loads.pop()

    place(0)
    logger.debug("bin packing: %d items, capacity %d, optimum %d", len(items), capacity, best)
    return best
