"""
Shared fixtures, hypothesis strategies and brute-force oracles.
Run from project root: python -m pytest tests/
"""
import sys
from itertools import combinations
from pathlib import Path
from typing import Iterator, List, Sequence

import pytest
from hypothesis import strategies as st

# Ensure project root is in path (for running directly with python)
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from app.models import Delivery, Instance  # noqa: E402


def make_instance(budget: int, spans: Sequence[tuple]) -> Instance:
    """spans: (launch, rendezvous, cost) triples, ids assigned 1..n."""
    return Instance(
        budget=budget,
        deliveries=tuple(
            Delivery(id=j, launch=s, rendezvous=e, cost=c)
            for j, (s, e, c) in enumerate(spans, start=1)
        ),
    )


@pytest.fixture
def fixture_a() -> Instance:
    """B=10: [0,2]c6, [1,3]c6, [4,5]c5, [4,6]c5; no feasible pair exists."""
    return make_instance(10, [(0, 2, 6), (1, 3, 6), (4, 5, 5), (4, 6, 5)])


@pytest.fixture
def fixture_b() -> Instance:
    """B=10: [0,1]c3 twice and [2,3]c3."""
    return make_instance(10, [(0, 1, 3), (0, 1, 3), (2, 3, 3)])


@st.composite
def instances(draw, min_n=0, max_n=10, horizon=30, max_len=12, max_budget=20):
    """Small random instances with a mix of overlap and cost regimes."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    budget = draw(st.integers(min_value=1, max_value=max_budget))
    spans = []
    for _ in range(n):
        launch = draw(st.integers(min_value=0, max_value=horizon))
        length = draw(st.integers(min_value=0, max_value=max_len))
        cost = draw(st.integers(min_value=1, max_value=budget))
        spans.append((launch, launch + length, cost))
    return make_instance(budget, spans)


# ===== Independent oracles (no solver code) =====

def brute_conflict(a: Delivery, b: Delivery) -> bool:
    return bool(set(range(a.launch, a.rendezvous + 1)) & set(range(b.launch, b.rendezvous + 1)))


def brute_feasible(inst: Instance, ids) -> bool:
    members = [inst.get(j) for j in ids]
    if sum(d.cost for d in members) > inst.budget:
        return False
    return not any(brute_conflict(a, b) for a, b in combinations(members, 2))


def set_partitions(items: List[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for k in range(len(partition)):
            yield partition[:k] + [[first] + partition[k]] + partition[k + 1:]
        yield [[first]] + partition


def brute_opt(inst: Instance) -> int:
    """Fewest blocks over all partitions into feasible sets."""
    best = inst.n
    for partition in set_partitions(list(inst.ids)):
        if len(partition) < best and all(brute_feasible(inst, block) for block in partition):
            best = len(partition)
    return best
