import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrlab.graphs import (Graph, are_isomorphic, diameter, diameter_bound, export_dot, graph_properties,
                           is_bipartite, local_connectivity, triangle_partition, triangles, valency_stats,
                           vertex_connectivity)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vcount))
    h.add_edges_from(g.edges)
    return h


def permuted(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.vcount))
    rng.shuffle(perm)
    return Graph.from_edges(g.vcount, [(perm[i], perm[j]) for i, j in g.edges])


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_diameter_and_bipartite_match_networkx(g):
    h = to_nx(g)
    expected = nx.diameter(h) if nx.is_connected(h) else math.inf
    assert diameter(g) == expected
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert len(list(triangles(g))) == sum(nx.triangles(h).values()) // 3


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_diameter_bound_for_connected_graphs(g):
    k = vertex_connectivity(g)
    if k >= 1:
        assert diameter(g) <= diameter_bound(g.vcount, k)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(0, 2**32))
def test_isomorphism_under_random_relabelling(g, seed):
    h = permuted(g, random.Random(seed))
    phi = are_isomorphic(g, h)
    assert phi is not None
    assert sorted(tuple(sorted((phi[i], phi[j]))) for i, j in g.edges) == list(h.edges)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    assert (are_isomorphic(g, h) is not None) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_local_connectivity_menger():
    g = Graph.complete_bipartite(3, 4)
    assert local_connectivity(g, 0, 1) == 4
    assert local_connectivity(g, 0, 1, cutoff=2) == 2
    with pytest.raises(ValueError):
        local_connectivity(g, 0, 3)


def test_named_graphs():
    assert vertex_connectivity(Graph.complete(5)) == 4
    assert vertex_connectivity(Graph.path(4)) == 1
    assert vertex_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0
    assert diameter(Graph.from_edges(3, [(0, 1)])) == math.inf
    with pytest.raises(ValueError):
        vertex_connectivity(Graph(1, ()))


def test_valency_stats_and_properties():
    g = Graph.complete_bipartite(2, 3)
    assert tuple(valency_stats(g)) == (2, 3, False)
    assert tuple(graph_properties(g)) == (True, True, 6)


def test_triangle_partition():
    two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert triangle_partition(two) == [(0, 1, 2), (3, 4, 5)]
    assert triangle_partition(Graph.complete(4)) is None
    assert triangle_partition(Graph.complete_bipartite(3, 3)) is None


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, ((1, 0),))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, (), ("a",))


def test_json_roundtrip_and_labels():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], ["a", "b", "c"])
    assert Graph.from_json(g.to_json()) == g
    assert g.index("c") == 2 and g.label(0) == "a"


def test_dot_export_quotes_labels():
    g = Graph.from_edges(2, [(0, 1)], ['l1(1,2)', 'say "hi"'])
    dot = export_dot(g)
    assert dot.startswith("graph {") and dot.rstrip().endswith("}")
    assert '"l1(1,2)" -- "say \\"hi\\"";' in dot
