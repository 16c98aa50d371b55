import json
from itertools import combinations

import pytest

from symdefect.errors import (
    Disconnected,
    DuplicateEdge,
    EvenCycle,
    GraphSyntaxError,
    NotInduced,
    TooLarge,
)
from symdefect.graph import (
    build_graph,
    closed_nbhd_condition,
    cycle_params,
    minimal_vertex_covers,
    parse_graph,
    serialize_graph,
)
from symdefect.limits import Guards


def brute_minimal_covers(g):
    verts = g.all_vertices
    covers = [
        frozenset(sub)
        for size in range(len(verts) + 1)
        for sub in combinations(verts, size)
        if all(a in sub or b in sub for a, b in g.edges)
    ]
    return {c for c in covers if not any(o < c for o in covers)}


def test_parse_bare_cycle():
    g = parse_graph('{"n": 2, "tree_edges": []}')
    assert g.cycle_length == 5
    assert g.unicyclic
    assert cycle_params(g).l == 0


def test_cycle_edges_are_labelled_in_order(c5):
    assert c5.cycle_edges == ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))
    assert c5.cycle_edge(6) == (1, 2)
    assert c5.edge_label((1, 5)) == "e5"


def test_fig2_params(fig2):
    p = cycle_params(fig2)
    assert (p.n, p.l, p.m, p.root_degrees, p.u) == (1, 1, 1, (1,), (0,))


def test_whiskered_params(w5):
    p = cycle_params(w5)
    assert (p.n, p.l, p.m) == (2, 5, 5)
    assert p.root_degrees == (1,) * 5
    assert p.u == (5,) * 5


def test_c5_params(c5):
    p = cycle_params(c5)
    assert (p.l, p.m, p.roots) == (0, 0, ())


@pytest.mark.parametrize(
    "doc, exc",
    [
        ("{not json", GraphSyntaxError),
        ("[1, 2]", GraphSyntaxError),
        ('{"tree_edges": []}', GraphSyntaxError),
        ('{"n": 0}', GraphSyntaxError),
        ('{"n": 1, "extra": 3}', GraphSyntaxError),
        ('{"n": 1, "cycle_length": 4}', EvenCycle),
        ('{"n": 1, "cycle_length": 5}', GraphSyntaxError),
        ('{"n": 1, "tree_edges": [[1, 3]]}', NotInduced),
        ('{"n": 1, "tree_edges": [[1, 4], [4, 1]]}', DuplicateEdge),
        ('{"n": 1, "tree_edges": [[4, 4]]}', GraphSyntaxError),
        ('{"n": 1, "tree_edges": [[1, 4, 5]]}', GraphSyntaxError),
        ('{"n": 1, "tree_edges": [[4, 5]]}', Disconnected),
        ('{"n": 1, "vertices": [1, 2, 3, 9]}', Disconnected),
        ('{"n": 1, "tree_edges": [[1, 4]], "vertices": [1, 2, 3]}', GraphSyntaxError),
    ],
)
def test_parse_errors(doc, exc):
    with pytest.raises(exc):
        parse_graph(doc)


def test_extra_cycle_is_flagged():
    g = build_graph(1, [[1, 4], [2, 4]])
    assert not g.unicyclic
    assert not cycle_params(g).unicyclic


def test_serialize_round_trip(w5):
    again = parse_graph(serialize_graph(w5))
    assert again == w5
    assert json.loads(serialize_graph(w5))["n"] == 2


def test_closed_neighbourhood(graphs):
    assert closed_nbhd_condition(graphs["c5"])
    assert closed_nbhd_condition(graphs["fig2"])
    assert closed_nbhd_condition(graphs["w5"])
    for name in ("fig3_g1", "fig3_g2", "fig4_g1", "fig4_g2"):
        assert not closed_nbhd_condition(graphs[name]), name


def test_vertex_covers_triangle(c3):
    assert set(minimal_vertex_covers(c3)) == {frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})}


def test_vertex_covers_fig2(fig2):
    covers = minimal_vertex_covers(fig2)
    assert covers == (frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3, 4}))


@pytest.mark.parametrize("name", ["c5", "w5", "fig3_g1", "fig4_g2"])
def test_vertex_covers_match_brute_force(graphs, name):
    g = graphs[name]
    assert set(minimal_vertex_covers(g)) == brute_minimal_covers(g)


def test_vertex_cover_guard(w5):
    with pytest.raises(TooLarge):
        minimal_vertex_covers(w5, Guards(cover_max_vertices=5))
