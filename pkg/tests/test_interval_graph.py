"""
Tests for the interval conflict graph: edges, degrees, clique number and
the clique_number-color sweep coloring. networkx is the independent oracle.
"""
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from app.core.errors import SolverInvariantError
from app.core.instance import intervals_conflict
from app.solvers.interval_graph import build_graph, clique_number, color_intervals
from conftest import brute_conflict, instances, make_instance


def nx_graph(inst):
    g = nx.Graph()
    g.add_nodes_from(inst.ids)
    g.add_edges_from(
        (a.id, b.id) for a, b in combinations(inst.deliveries, 2) if brute_conflict(a, b)
    )
    return g


def test_fixture_a_graph(fixture_a):
    g = build_graph(fixture_a)
    assert sorted(g.edges()) == [(1, 2), (3, 4)]
    assert g.max_degree == 1
    assert g.edge_count == 2
    assert g.degrees == {1: 1, 2: 1, 3: 1, 4: 1}
    assert g.clique_number == 2


def test_disjoint_intervals_are_edgeless():
    inst = make_instance(10, [(2 * j, 2 * j + 1, 1) for j in range(1, 8)])
    g = build_graph(inst)
    assert g.edge_count == 0
    assert g.max_degree == 0
    assert clique_number(inst) == 1


def test_identical_intervals_form_complete_graph():
    n = 6
    inst = make_instance(10, [(0, 1, 1)] * n)
    g = build_graph(inst)
    assert g.max_degree == n - 1
    assert g.edge_count == n * (n - 1) // 2
    assert g.clique_number == n
    coloring = color_intervals(inst, g)
    assert sorted(len(c) for c in coloring.classes) == [1] * n


def test_clique_number_counts_touching_endpoints():
    inst = make_instance(10, [(0, 2, 1), (1, 3, 1), (2, 4, 1)])
    assert clique_number(inst) == 3


def test_empty_instance_graph():
    inst = make_instance(10, [])
    g = build_graph(inst)
    assert (g.n, g.edge_count, g.max_degree, g.clique_number) == (0, 0, 0, 0)
    assert color_intervals(inst, g).classes == ()


def test_fixture_a_coloring(fixture_a):
    g = build_graph(fixture_a)
    coloring = color_intervals(fixture_a, g)
    assert coloring.colors == 2
    assert sorted(j for c in coloring.classes for j in c) == [1, 2, 3, 4]
    for cls in coloring.classes:
        for a, b in combinations(cls, 2):
            assert not intervals_conflict(fixture_a.get(a), fixture_a.get(b))


def test_edgeless_coloring_is_one_class():
    inst = make_instance(10, [(3 * j, 3 * j + 1, 2) for j in range(5)])
    coloring = color_intervals(inst, build_graph(inst))
    assert coloring.classes == ((1, 2, 3, 4, 5),)


@settings(max_examples=200)
@given(instances(max_n=10))
def test_clique_number_matches_max_clique(inst):
    g = nx_graph(inst)
    expected = max((len(c) for c in nx.find_cliques(g)), default=0)
    assert clique_number(inst) == expected


@settings(max_examples=100)
@given(instances(max_n=60, horizon=200, max_len=40))
def test_build_graph_matches_all_pairs(inst):
    g = build_graph(inst)
    expected = nx_graph(inst)
    assert set(g.edges()) == {tuple(sorted(e)) for e in expected.edges()}
    assert g.degrees == dict(expected.degree())
    assert g.edge_count == expected.number_of_edges()
    assert g.max_degree == max((deg for _, deg in expected.degree()), default=0)


def test_build_graph_matches_all_pairs_at_200():
    inst = make_instance(
        50, [((7 * j) % 311, (7 * j) % 311 + (j % 13), 1 + j % 9) for j in range(200)]
    )
    g = build_graph(inst)
    expected = nx_graph(inst)
    assert set(g.edges()) == {tuple(sorted(e)) for e in expected.edges()}


@settings(max_examples=200)
@given(instances(max_n=25, horizon=60))
def test_coloring_is_proper_partition_with_omega_colors(inst):
    g = build_graph(inst)
    coloring = color_intervals(inst, g)
    assert coloring.colors == g.clique_number
    assert sorted(j for c in coloring.classes for j in c) == sorted(inst.ids)
    for j, nbrs in g.adjacency.items():
        for k in nbrs:
            assert coloring.color_of[j] != coloring.color_of[k]
    for color, cls in enumerate(coloring.classes, start=1):
        assert all(coloring.color_of[j] == color for j in cls)


@given(instances(max_n=25))
def test_clique_number_at_most_max_degree_plus_one(inst):
    g = build_graph(inst)
    assert g.clique_number <= g.max_degree + 1


def test_coloring_against_wrong_graph_is_an_internal_error(fixture_a):
    """Color count must equal the clique number of the graph it is given."""
    disjoint = make_instance(10, [(3 * j, 3 * j + 1, 1) for j in range(4)])
    with pytest.raises(SolverInvariantError, match="clique number is 2"):
        color_intervals(disjoint, build_graph(fixture_a))
