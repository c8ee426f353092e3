import itertools

import networkx as nx
import pytest

from arrlab import families as fam
from arrlab.casalg import arrangement_ideal
from arrlab.exactfield import Field
from arrlab.graphs import Graph, vertex_connectivity
from arrlab.oracles import (all_graphs, connectivity_by_cuts, connectivity_mismatches, graph_to_masks,
                            masks_to_graph, zero_set_mismatches)


@pytest.fixture
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv("ARRLAB_CACHE", str(tmp_path))
    return tmp_path


def test_graph_counts_match_known_sequence(cache):
    # unlabelled graphs on n vertices
    assert [len(all_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert (cache / "graphs7.pkl.gz").exists()
    assert len(all_graphs(7)) == 1044


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vcount))
    h.add_edges_from(g.edges)
    return h


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_generated_graphs_match_the_graph_atlas(cache, n):
    ours = [_nx(masks_to_graph(m)) for m in all_graphs(n)]
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    unmatched = list(atlas)
    for g in ours:
        hit = next(k for k, h in enumerate(unmatched) if nx.is_isomorphic(g, h))
        unmatched.pop(hit)
    assert unmatched == []


def test_cut_enumeration_on_named_graphs():
    assert connectivity_by_cuts(graph_to_masks(Graph.complete(5))) == 4
    assert connectivity_by_cuts(graph_to_masks(Graph.path(5))) == 1
    assert connectivity_by_cuts(graph_to_masks(Graph.complete_bipartite(3, 3))) == 3


def test_connectivity_has_no_mismatch_up_to_seven_vertices(cache):
    for n in range(2, 8):
        assert connectivity_mismatches(all_graphs(n)) == []


def test_masks_roundtrip():
    g = Graph.complete_bipartite(2, 3)
    assert masks_to_graph(graph_to_masks(g)) == g
    assert vertex_connectivity(g) == connectivity_by_cuts(graph_to_masks(g))


def test_zero_set_oracle_detects_wrong_ideals():
    f = Field.finite(3)
    a = fam.two_rulings(2, 2, f)
    ideal = arrangement_ideal(a)
    assert list(zero_set_mismatches(ideal, a.lines, f)) == []
    # dropping one line from the arrangement leaves extra zeros
    assert list(zero_set_mismatches(ideal, a.lines[1:], f))
