import pytest
from hypothesis import given, settings

from lexsmd import oracles
from lexsmd.constructions import complete, complete_multipartite, cycle, empty, lexicographic_product, path, union
from lexsmd.corpus import all_graphs, random_graph
from lexsmd.cover import (
    clique_number,
    independence_number,
    maximum_clique,
    maximum_independent_set,
    vertex_cover,
)
from lexsmd.graph import build_graph

from .conftest import graphs


@pytest.mark.parametrize("g, alpha", [(path(4), 2), (complete(5), 4), (cycle(5), 3), (empty(3), 0)])
def test_vertex_cover_examples(g, alpha):
    assert vertex_cover(g).size == alpha


@pytest.mark.parametrize(
    "g, beta", [(cycle(5), 2), (empty(4), 4), (complete_multipartite([3, 3]), 3), (build_graph(0, []), 0)]
)
def test_independence_examples(g, beta):
    assert independence_number(g) == beta


@pytest.mark.parametrize("g, omega", [(complete(4), 4), (cycle(5), 2), (path(4), 2), (empty(3), 1)])
def test_clique_examples(g, omega):
    assert clique_number(g) == omega


def _check_witnesses(g):
    res = vertex_cover(g)
    cover = set(res.witness)
    assert len(cover) == res.size == len(res.witness)
    assert all(u in cover or v in cover for u, v in g.edges)
    ind = maximum_independent_set(g)
    assert not any(g.has_edge(u, v) for u in ind for v in ind if u < v)
    clique = maximum_clique(g)
    assert all(g.has_edge(u, v) for u in clique for v in clique if u < v)
    assert len(clique) == clique_number(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_cover_matches_enumeration(g):
    assert vertex_cover(g).size == oracles.min_vertex_cover_size(g)
    assert independence_number(g) == oracles.max_independent_set_size(g)
    _check_witnesses(g)


def test_cover_matches_enumeration_dense_and_sparse(rng):
    for p in (0.1, 0.3, 0.5, 0.7, 0.9):
        for _ in range(6):
            g = random_graph(rng, int(rng.integers(8, 13)), p)
            assert vertex_cover(g).size == oracles.min_vertex_cover_size(g)
            assert clique_number(g) == oracles.max_clique_size(g)
            _check_witnesses(g)


def test_gallai_on_corpus():
    for n in range(0, 7):
        for g in all_graphs(n):
            assert vertex_cover(g).size + oracles.max_independent_set_size(g) == n


def test_geller_on_random_pairs(rng):
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(2, 6)), 0.5)
        h = random_graph(rng, int(rng.integers(2, 6)), 0.5)
        ag, ah = vertex_cover(g).size, vertex_cover(h).size
        got = vertex_cover(lexicographic_product(g, h)).size
        assert got == g.n * ah + h.n * ag - ag * ah


def test_cover_deterministic_and_large():
    g = union(*[cycle(5)] * 12)
    first = vertex_cover(g)
    assert first.size == 36 and vertex_cover(g) == first
    # past 64 vertices, still exact
    assert vertex_cover(union(path(40), path(41))).size == 40
