import random

import pytest
from hypothesis import given, settings

from edgetrans.constructions import (
    complete,
    complete_bipartite,
    cube,
    cycle,
    grid,
    halin,
    star,
    wheel,
)
from edgetrans.corpus import random_chordless, random_outerplanar, random_series_parallel
from edgetrans.edge_coloring import chromatic_index, find_proper_coloring
from edgetrans.errors import PreconditionError
from edgetrans.graph_core import Graph, block_decomposition, girth
from edgetrans.recognizers import (
    ClassCertificate,
    certificates,
    fournier_condition,
    in_A_q,
    is_bipartite,
    is_chordless,
    is_class1,
    is_outerplanar,
    is_planar,
    is_series_parallel,
    is_wheel,
    line_perfect_blocks,
    maximal_bounded_subgraphs,
)

import oracles
from test_graph_core import simple_graphs


def girth7_k4_subdivision() -> Graph:
    """K4 on 0..3 with edge 01 kept and the other five subdivided into paths of length 3."""
    pairs = [(0, 1)]
    nxt = 4
    for a, b in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
        pairs += [(a, nxt), (nxt, nxt + 1), (nxt + 1, b)]
        nxt += 2
    return Graph.from_pairs(pairs, vertices=nxt)


def test_bipartite_examples():
    assert is_bipartite(cycle(6))
    v = is_bipartite(cycle(5))
    assert not v and sorted(v.odd_cycle) == [0, 1, 2, 3, 4]
    q3 = cube()
    v = is_bipartite(q3)
    assert v and all(v.sides[u] != v.sides[w] for _, u, w in q3.edges)


@given(simple_graphs())
def test_odd_cycle_refutation_is_a_closed_walk(g):
    v = is_bipartite(g)
    if v:
        assert all(v.sides[a] != v.sides[b] for _, a, b in g.edges)
    else:
        cyc = v.odd_cycle
        assert len(cyc) % 2 == 1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.edges_between(a, b)


def test_chordless_examples():
    assert all(is_chordless(cycle(n)) for n in range(3, 10))
    assert not is_chordless(complete(4))
    rng = random.Random(5)
    for _ in range(20):
        g = random_chordless(rng.randint(4, 6), rng.randint(5, 9), rng)
        assert is_chordless(g)
        # every 2-connected block with a cycle of at least four vertices has two non-adjacent degree-2 vertices
        for b in block_decomposition(g).blocks:
            if len(b) < 4:
                continue
            h = g.edge_subgraph(b, keep_vertices=False)
            low = [x for x in h.vertices if h.degree(x) == 2]
            assert any(not h.edges_between(x, y) for x in low for y in low if x < y)


def test_series_parallel_examples():
    assert not is_series_parallel(complete(4))
    rng = random.Random(2)
    for _ in range(25):
        g = random_outerplanar(rng.randint(4, 11), rng)
        assert is_outerplanar(g) and is_series_parallel(g)
    for _ in range(25):
        g = random_series_parallel(rng.randint(6, 25), rng)
        assert is_series_parallel(g)
        if g.max_degree >= 3:
            assert min(g.degree(x) for x in g.vertices) <= 2


@settings(max_examples=150)
@given(simple_graphs())
def test_series_parallel_agrees_with_minor_search(g):
    assert bool(is_series_parallel(g)) == (not oracles.has_k4_minor(g.vertices, oracles.pairs_of(g)))


@settings(max_examples=150)
@given(simple_graphs())
def test_chordless_agrees_with_cycle_enumeration(g):
    assert is_chordless(g) == oracles.chordless(g.vertices, oracles.pairs_of(g))


def test_wheel_examples():
    assert is_wheel(wheel(5)) == 0
    assert is_wheel(cycle(6)) is None
    assert is_wheel(complete(4)) == 0
    k4 = complete(4)
    for hub in k4.vertices:  # every choice meets the definition
        rim = k4.vertex_induced(x for x in k4.vertices if x != hub)
        assert k4.degree(hub) == 3 and all(rim.degree(x) == 2 for x in rim.vertices)


def test_planarity_examples():
    assert not is_planar(complete(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(wheel(8))
    rng = random.Random(9)
    for _ in range(40):
        g = random_chordless(rng.randint(4, 6), rng.randint(5, 10), rng, odd_prob=0.9)
        if is_planar(g) and girth(g) >= 6 and g.max_degree == 3:
            assert min(g.degree(x) for x in g.vertices) <= 2


def test_class1_examples():
    assert is_class1(cycle(4))
    assert not is_class1(complete(3))
    g = Graph.from_pairs([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)], vertices=6)
    assert fournier_condition(g) and is_class1(g)
    assert chromatic_index(g)[0] == g.max_degree


def test_chordless_graphs_of_degree_three_are_class1():
    rng = random.Random(11)
    for _ in range(30):
        g = random_chordless(rng.randint(4, 7), rng.randint(5, 12), rng)
        if g.max_degree >= 3:
            assert is_class1(g)


def test_A_q_examples():
    assert in_A_q(wheel(6), 3).verdict == "certified_by_class"
    for g in (cube(), grid(3, 4), complete_bipartite(3, 4)):
        assert in_A_q(g, 3).verdict == "certified_by_class"
    assert "planar_girth_ge7" in in_A_q(girth7_k4_subdivision(), 3).block_reasons
    with pytest.raises(PreconditionError):
        in_A_q(cycle(4), 1)


def test_halin_witness_is_refuted_for_q3():
    w, _ = halin(star(4))
    verdict = in_A_q(w, 3)
    assert verdict.verdict == "refuted_with_witness"
    h = verdict.witness
    assert h.max_degree == 3 and find_proper_coloring(h, 3) is None
    assert chromatic_index(h)[0] == 4
    assert in_A_q(w, 4, hints=["halin_constructed"]).verdict == "certified_by_class"


def test_certified_members_survive_brute_force():
    rng = random.Random(4)
    graphs = [wheel(5), wheel(6), girth7_k4_subdivision()] + [
        random_outerplanar(rng.randint(5, 8), rng) for _ in range(5)]
    for g in graphs:
        assert in_A_q(g, 3).member
        for edge_set in maximal_bounded_subgraphs(g, 3):
            assert find_proper_coloring(g.edge_subgraph(edge_set), 3) is not None


def test_line_perfect_blocks_examples():
    assert line_perfect_blocks(grid(3, 3))
    assert line_perfect_blocks(complete(4))
    assert not line_perfect_blocks(cycle(5))


def test_certificates_reverify():
    for g in (cube(), cycle(7), wheel(6), complete(4), girth7_k4_subdivision(), complete(3)):
        certs = certificates(g)
        assert certs and all(c.verify(g) for c in certs)
    assert ClassCertificate("unknown").verify(complete(5))
