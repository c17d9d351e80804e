import pytest
from hypothesis import given
from hypothesis import strategies as st

from kchordal import graph as G
from kchordal.graph import BipartiteGraph, Graph, GraphError, two_color

from conftest import FIG2


@st.composite
def bipartite_graphs(draw, max_part=5):
    x = draw(st.integers(0, max_part))
    y = draw(st.integers(0, max_part))
    pairs = [(i, j) for i in range(x) for j in range(y)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return BipartiteGraph.from_parts(x, y, edges)


def test_from_parts_c4():
    c4 = G.from_parts(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert c4 == G.cycle(4)
    assert c4.vertex_count == 4 and c4.edge_count == 4


def test_from_parts_empty_and_star():
    b = G.from_parts(0, 0, [])
    assert b.vertex_count == 0 and b.edge_count == 0
    star = G.from_parts(1, 3, [(0, 0), (0, 1), (0, 2)])
    assert star == G.star(3)


def test_from_parts_dedups():
    assert G.from_parts(1, 1, [(0, 0), (0, 0)]).edge_count == 1


@pytest.mark.parametrize("pair", [(2, 0), (0, 2), (-1, 0)])
def test_from_parts_out_of_range_names_pair(pair):
    with pytest.raises(GraphError, match=rf"\({pair[0]}, {pair[1]}\)"):
        G.from_parts(2, 2, [(0, 0), pair])


def test_delete_edge():
    c4 = G.cycle(4)
    p4 = G.delete_edge(c4, (0, 0))
    assert (p4.x_count, p4.y_count, p4.edge_count) == (2, 2, 3)
    assert c4.edge_count == 4
    k12 = G.delete_edge(G.star(3), (0, 2))
    assert k12.y_count == 3 and k12.edges == {(0, 0), (0, 1)}
    with pytest.raises(GraphError):
        G.delete_edge(c4, (0, 0)).delete_edge((0, 0))


def test_glue_clique_counts():
    c4 = G.cycle(4)
    g = G.glue_clique(c4, "x")
    assert g.vertex_count == 4 and g.edge_count == 5
    assert g.has_edge(0, 1) and not g.has_edge(2, 3)
    assert G.glue_clique(G.star(3), "x") == G.star(3).underlying()
    assert G.glue_clique(G.cycle(6), "x").edge_count == 9
    with pytest.raises(GraphError):
        G.glue_clique(c4, "z")


def test_delete_vertex():
    k3 = Graph.complete(3)
    for v in range(3):
        h = G.delete_vertex(k3, v)
        assert h == Graph(Graph.complete(2).adjacency, h.labels)
    p3 = G.delete_vertex(Graph.cycle(4), 0)
    assert p3.vertex_count == 3 and p3.edge_count == 2
    assert p3.labels == (1, 2, 3)
    empty = G.delete_vertex(Graph.from_edges(1, []), 0)
    assert empty.vertex_count == 0
    with pytest.raises(GraphError):
        G.delete_vertex(k3, 3)


def test_labels_compose_through_deletions():
    g = Graph.cycle(6).delete_vertex(1).delete_vertex(2)
    assert g.labels == (0, 2, 4, 5)


def test_closed_neighborhood_figure2():
    # figure labels are 1-based; FIG2 stores label L as id L-1
    assert {v + 1 for v in G.closed_neighborhood(FIG2, 0)} == {1, 2, 3, 4}
    assert {v + 1 for v in G.closed_neighborhood(FIG2, 2)} == {1, 2, 3, 4, 5}
    assert G.closed_neighborhood(Graph.from_edges(2, []), 1) == {1}


def test_two_color_examples():
    res = two_color(Graph.cycle(4))
    assert res and res.x_vertices == (0, 2) and res.y_vertices == (1, 3)
    res = two_color(Graph.complete(3))
    assert not res and len(res.odd_cycle) == 3
    res = two_color(Graph.cycle(8))
    assert res.bipartite.x_count == 4 and res.bipartite.y_count == 4


def test_odd_cycle_witness_is_a_cycle():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
    cyc = two_color(g).odd_cycle
    assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_graph_rejects_asymmetric():
    with pytest.raises(GraphError):
        Graph((frozenset({1}), frozenset()))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])


@given(bipartite_graphs())
def test_delete_then_readd_round_trip(b):
    for e in b.sorted_edges():
        assert b.delete_edge(e).add_edge(e) == b


@given(bipartite_graphs())
def test_glued_graphs_contain_cross_edges_exactly(b):
    cross = set(b.underlying().edges())
    for side, part in (("x", range(b.x_count)), ("y", range(b.x_count, b.vertex_count))):
        glued = set(b.glue_clique(side).edges())
        assert cross <= glued
        intra = {(u, v) for u, v in glued if u in part and v in part}
        assert glued - intra == cross


@given(bipartite_graphs())
def test_two_color_succeeds_on_bipartite(b):
    res = two_color(b.underlying())
    assert res.bipartite is not None
    assert res.bipartite.edge_count == b.edge_count


@given(bipartite_graphs(), st.data())
def test_delete_vertex_drops_incident_edges(b, data):
    g = b.underlying()
    if g.vertex_count == 0:
        return
    v = data.draw(st.integers(0, g.vertex_count - 1))
    h = g.delete_vertex(v)
    assert h.vertex_count == g.vertex_count - 1
    assert v not in h.labels
    assert h.edge_count == g.edge_count - g.degree(v)
