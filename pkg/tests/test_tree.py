"""
Tests for the augmented AVL drone tree, the Check decision and the
budget-limited reverse in-order search.
"""
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from app.core.errors import SolverInvariantError
from app.models import Delivery
from app.solvers.tree import (
    ClassTree,
    Decision,
    DroneNode,
    DroneTree,
    HEIGHT_FACTOR,
    ProbeBudget,
    check,
    find_feasible,
    find_max_key,
)


def delivery(cost, launch, rendezvous=None, id=1):
    return Delivery(id=id, launch=launch, rendezvous=launch if rendezvous is None else rendezvous, cost=cost)


# ===== insert / update =====

def test_insert_into_empty_tree():
    tree = DroneTree(audit=True)
    node = tree.insert(1, 10, 2)
    assert tree.size == 1
    assert tree.root is node


def test_equal_keys_visit_higher_index_first():
    tree = DroneTree(audit=True)
    tree.insert(1, 4, 0)
    tree.insert(2, 4, 0)
    assert [n.index for n in tree.reverse_inorder()] == [2, 1]


def test_sequential_inserts_stay_balanced():
    tree = DroneTree(audit=False)
    for i in range(1, 1001):
        tree.insert(i, i, 0)
    tree.audit()
    assert tree.height <= HEIGHT_FACTOR * math.log2(1001)


def test_duplicate_index_is_an_internal_error():
    tree = ClassTree()
    tree.insert(1, 5)
    with pytest.raises(SolverInvariantError):
        tree.insert(1, 3)


def test_update_single_node():
    tree = DroneTree(audit=True)
    node = tree.insert(1, 10, 2)
    tree.update(node, 4, 3)
    assert tree.dump() == [(1, 4, 3)]
    assert tree.root is node


def test_update_reorders_nodes():
    tree = DroneTree(audit=True)
    a = tree.insert(1, 9, 0)
    tree.insert(2, 6, 0)
    assert [n.index for n in tree.reverse_inorder()] == [1, 2]
    tree.update(a, 3, 1)
    assert [n.index for n in tree.reverse_inorder()] == [2, 1]


def test_update_absent_node_is_an_internal_error():
    tree = DroneTree()
    tree.insert(1, 5, 0)
    with pytest.raises(SolverInvariantError):
        tree.update(DroneNode(7, 5, 0), 1, 1)


def test_update_rejects_growing_key_or_shrinking_data():
    tree = DroneTree()
    node = tree.insert(1, 5, 4)
    with pytest.raises(SolverInvariantError):
        tree.update(node, 6, 4)
    with pytest.raises(SolverInvariantError):
        tree.update(node, 5, 3)


@settings(max_examples=100)
@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 20)), max_size=80), st.randoms())
def test_random_updates_keep_shadow_order(ops, rnd):
    """Inserts and shrinking updates against a plain dict, audited after each op."""
    tree = DroneTree(audit=True)
    shadow = {}
    for key, data in ops:
        if shadow and rnd.random() < 0.5:
            index = rnd.choice(sorted(shadow))
            old_key, old_data = shadow[index]
            new_key, new_data = min(old_key, key), max(old_data, data)
            tree.update(tree.node(index), new_key, new_data)
            shadow[index] = (new_key, new_data)
        else:
            index = len(shadow) + 1
            tree.insert(index, key, data)
            shadow[index] = (key, data)
    expected = sorted(((k, i, d) for i, (k, d) in shadow.items()), reverse=True)
    assert tree.dump() == [(i, k, d) for k, i, d in expected]


# ===== check =====

def test_check_stop_search_zeroes_budget():
    budget = ProbeBudget(3)
    assert check(DroneNode(1, 4, 2), delivery(6, 4), budget) is Decision.STOP_SEARCH
    assert budget.remaining == 0


def test_check_continue_on_conflict():
    budget = ProbeBudget(2)
    assert check(DroneNode(3, 5, 5), delivery(5, 4), budget) is Decision.CONTINUE
    assert budget.remaining == 1


def test_check_assign_with_equal_key():
    budget = ProbeBudget(2)
    assert check(DroneNode(1, 5, 3), delivery(5, 4), budget) is Decision.ASSIGN
    assert budget.remaining == 2


# ===== find_feasible =====

def test_find_on_empty_tree():
    assert find_feasible(DroneTree(), delivery(1, 0), ProbeBudget(5)) is None


def test_find_stops_when_largest_key_is_too_small():
    tree = DroneTree(audit=True)
    tree.insert(1, 4, 2)
    tree.insert(2, 4, 3)
    trace = []
    found = find_feasible(tree, delivery(5, 4, 5, id=3), ProbeBudget(2), trace)
    assert found is None
    assert trace == [(2, Decision.STOP_SEARCH)]


def test_find_continue_then_stop():
    """Delivery [4,6] c=5 probing drones (5, data 5) and (4, data 2)."""
    tree = DroneTree(audit=True)
    tree.insert(1, 4, 2)
    tree.insert(2, 4, 3)
    tree.insert(3, 5, 5)
    trace = []
    found = find_feasible(tree, delivery(5, 4, 6, id=4), ProbeBudget.for_conflicts(1), trace)
    assert found is None
    assert trace == [(3, Decision.CONTINUE), (2, Decision.STOP_SEARCH)]


def test_find_continue_exhausts_tree():
    tree = DroneTree()
    tree.insert(1, 7, 1)
    trace = []
    assert find_feasible(tree, delivery(3, 0, 1, id=2), ProbeBudget(2), trace) is None
    assert trace == [(1, Decision.CONTINUE)]


def test_find_stops_when_continue_spends_the_budget():
    tree = DroneTree()
    tree.insert(1, 9, 0)   # feasible but visited last
    tree.insert(2, 9, 10)  # conflicts
    budget = ProbeBudget(1)
    trace = []
    assert find_feasible(tree, delivery(1, 5, 6, id=3), budget, trace) is None
    assert trace == [(2, Decision.CONTINUE)]
    assert tree.counters.checks == 1


def test_find_returns_largest_feasible():
    tree = DroneTree()
    tree.insert(1, 3, 0)
    tree.insert(2, 8, 0)
    tree.insert(3, 8, 0)
    found = find_feasible(tree, delivery(3, 5, 6, id=4), ProbeBudget(4))
    assert found.index == 3


def _linear_scan(nodes, j, budget):
    """Reference: the same decisions over a sorted list."""
    for node in sorted(nodes, key=lambda n: (n.key, n.index), reverse=True):
        if budget == 0:
            return None
        if node.key < j.cost:
            return None
        if node.data < j.launch:
            return node.index
        budget -= 1
        if budget == 0:
            return None
    return None


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), max_size=200),
    st.integers(0, 12),
    st.integers(0, 12),
    st.integers(1, 10),
)
def test_find_matches_linear_scan(entries, cost, launch, probes):
    tree = DroneTree(audit=True)
    for index, (key, data) in enumerate(entries, start=1):
        tree.insert(index, key, data)
    j = delivery(max(cost, 1), launch, launch + 1, id=999)
    found = find_feasible(tree, j, ProbeBudget(probes))
    nodes = [tree.node(i) for i in range(1, len(entries) + 1)]
    expected = _linear_scan(nodes, j, probes)
    assert (found.index if found else None) == expected
    assert tree.counters.checks <= probes + 1


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), max_size=40), st.integers(1, 12))
def test_unbounded_find_is_complete(entries, cost):
    """With a probe budget above the tree size the search misses no feasible drone."""
    tree = DroneTree()
    for index, (key, data) in enumerate(entries, start=1):
        tree.insert(index, key, data)
    j = delivery(cost, 6, 7, id=999)
    found = find_feasible(tree, j, ProbeBudget(len(entries) + 1))
    feasible = [(key, i) for i, (key, data) in enumerate(entries, start=1) if key >= cost and data < 6]
    if feasible:
        assert found is not None and (found.key, found.index) == max(feasible)
    else:
        assert found is None


# ===== find_max_key =====

def test_find_max_key_examples():
    tree = ClassTree(audit=True)
    for index, key in enumerate([4, 7, 2], start=1):
        tree.insert(index, key)
    assert find_max_key(tree, 5).key == 7

    small = ClassTree()
    small.insert(1, 4)
    small.insert(2, 2)
    assert find_max_key(small, 5) is None
    assert find_max_key(ClassTree(), 1) is None


def test_class_tree_under_random_updates():
    rng = random.Random(7)
    tree = ClassTree(audit=True)
    keys = {}
    for index in range(1, 200):
        if keys and rng.random() < 0.6:
            pick = rng.choice(sorted(keys))
            keys[pick] = rng.randint(0, keys[pick])
            tree.update(tree.node(pick), keys[pick])
        else:
            keys[index] = rng.randint(0, 50)
            tree.insert(index, keys[index])
    top = find_max_key(tree, 0)
    assert (top.key, top.index) == max((k, i) for i, k in keys.items())
