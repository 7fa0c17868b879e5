import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dslq.errors import InvalidParameterError
from dslq.graph import (
    Graph,
    complement,
    complete,
    cycle,
    delete_vertices,
    disjoint_union,
    empty,
    is_connected,
    isolated_count,
    join,
    make_named,
    path,
    random_graph,
    relabel,
    star,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_named_graphs():
    k4 = make_named("complete", 4)
    assert k4.num_edges == 6
    assert list(k4.degrees()) == [3, 3, 3, 3]
    assert make_named("path", 3).edges() == [(0, 1), (1, 2)]
    c5 = make_named("cycle", 5)
    assert c5.num_edges == 5 and set(c5.degrees()) == {2}
    assert make_named("empty", 3).num_edges == 0


@pytest.mark.parametrize("n", [1, 2])
def test_short_cycle_rejected(n):
    with pytest.raises(InvalidParameterError):
        make_named("cycle", n)


def test_graph_invariants_enforced():
    with pytest.raises(InvalidParameterError):
        Graph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(InvalidParameterError):
        Graph(np.eye(2, dtype=bool))
    with pytest.raises(InvalidParameterError):
        Graph(np.zeros((0, 0), dtype=bool))


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(ValueError):
        g.adjacency[0, 2] = True
    h = g.add_edge(0, 2)
    assert not g.has_edge(0, 2) and h.has_edge(0, 2)


def test_join_examples():
    # K1 v coK2 is P3 with its middle vertex moved to label 0
    assert join(complete(1), empty(2)) == relabel(path(3), [1, 0, 2])
    g = join(complete(2), empty(3))
    assert g.n == 5 and g.num_edges == 7
    g1 = join(complete(1), disjoint_union(complete(2), empty(2)))
    assert g1.n == 5 and g1.num_edges == 5


def test_union_examples():
    g = disjoint_union(complete(2), complete(2))
    assert g.n == 4 and g.num_edges == 2 and not is_connected(g)
    assert disjoint_union(complete(1), empty(3)) == empty(4)
    assert disjoint_union(complete(2), empty(2)).edges() == [(0, 1)]


def test_join_labels_left_first():
    g = join(path(3), empty(2))
    assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)
    assert all(g.has_edge(u, v) for u in range(3) for v in (3, 4))
    assert not g.has_edge(3, 4)


def test_complement_examples():
    assert complement(complete(4)) == empty(4)
    c5c = complement(cycle(5))
    # the complement of C5 is the pentagram 0-2-4-1-3-0
    assert c5c == Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert set(c5c.degrees()) == {2} and is_connected(c5c)


def test_delete_vertices_examples():
    assert delete_vertices(star(3), [0]) == empty(3)
    assert delete_vertices(cycle(5), [0]) == path(4)
    assert delete_vertices(complete(4), [0, 1]) == complete(2)
    with pytest.raises(InvalidParameterError):
        delete_vertices(complete(3), [0, 1, 2])
    with pytest.raises(InvalidParameterError):
        delete_vertices(complete(3), [5])


def test_connectivity_and_isolated():
    assert is_connected(path(3))
    assert not is_connected(disjoint_union(complete(2), complete(2)))
    assert is_connected(empty(1))
    assert isolated_count(empty(3)) == 3
    assert isolated_count(delete_vertices(star(3), [0])) == 3
    assert isolated_count(cycle(5)) == 0


@settings(max_examples=60, deadline=None)
@given(graphs(), graphs())
def test_join_edge_count(g1, g2):
    assert join(g1, g2).num_edges == g1.num_edges + g2.num_edges + g1.n * g2.n
    assert disjoint_union(g1, g2).num_edges == g1.num_edges + g2.num_edges


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_complement_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert not (c.adjacency & g.adjacency).any()
    assert c.num_edges + g.num_edges == g.n * (g.n - 1) // 2


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (4, 2)])
def test_join_of_empties_is_complete_bipartite(a, b):
    assert join(empty(a), empty(b)).num_edges == a * b


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.data())
def test_isolated_after_deletion_matches_neighbourhood_scan(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n - 1))
    expected = sum(
        1 for v in range(g.n) if v not in s and set(g.neighbors(v)) <= s
    )
    assert isolated_count(delete_vertices(g, s)) == expected


def test_random_graph_connected_option(rng):
    for _ in range(30):
        n = int(rng.integers(1, 15))
        assert is_connected(random_graph(n, 0.05, rng, connected=True))
