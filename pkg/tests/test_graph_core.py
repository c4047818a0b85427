import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgetrans.constructions import complete, cycle, path, petersen, prism
from edgetrans.errors import GraphFormatError, PreconditionError, UnknownIdError
from edgetrans.graph_core import (
    Graph,
    block_decomposition,
    complement,
    degeneracy,
    girth,
)

import oracles


@st.composite
def simple_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_pairs(sorted(chosen), vertices=n)


@st.composite
def multigraphs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                          .filter(lambda p: p[0] != p[1]), max_size=12))
    return Graph.from_pairs(pairs, vertices=n, multigraph=True)


def test_rejects_loops_duplicates_and_unknown_endpoints():
    with pytest.raises(GraphFormatError):
        Graph.from_pairs([(0, 0)], vertices=1)
    with pytest.raises(GraphFormatError):
        Graph.from_pairs([(0, 1), (1, 0)], vertices=2)
    with pytest.raises(GraphFormatError):
        Graph((0, 1), ((0, 0, 2),))
    with pytest.raises(GraphFormatError):
        Graph((0, 1, 2), ((0, 0, 1), (0, 1, 2)))
    assert Graph.from_pairs([(0, 1), (1, 0)], vertices=2, multigraph=True).num_edges == 2


def test_json_round_trip_and_exact_format():
    g = path(3)
    text = g.to_json()
    assert text == '{"vertices":[0,1,2],"edges":[{"id":0,"u":0,"v":1},{"id":1,"u":1,"v":2}],"multigraph":false}'
    assert Graph.from_json(text) == g
    with pytest.raises(GraphFormatError):
        Graph.from_dict({**json.loads(text), "colour": 1})
    with pytest.raises(GraphFormatError):
        Graph.from_json("{")


def test_unknown_ids():
    g = path(3)
    with pytest.raises(UnknownIdError):
        g.endpoints(7)
    with pytest.raises(UnknownIdError):
        g.edge_subgraph([9])
    with pytest.raises(UnknownIdError):
        g.vertex_induced([0, 42])


def test_blocks_of_path_cycle_and_bowtie():
    bd = block_decomposition(path(4))
    assert len(bd.blocks) == 3 and len(bd.cutvertices) == 2
    bd = block_decomposition(cycle(5))
    assert len(bd.blocks) == 1 and not bd.cutvertices
    bowtie = Graph.from_pairs([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)], vertices=5)
    bd = block_decomposition(bowtie)
    assert sorted(map(sorted, bd.blocks)) == [[0, 1, 2], [3, 4, 5]]
    assert bd.cutvertices == {2}
    assert [set(b) for b in bd.blocks] == oracles.edge_blocks(bowtie.vertices, oracles.edges_of(bowtie))


@given(simple_graphs())
def test_blocks_match_cycle_oracle(g):
    bd = block_decomposition(g)
    assert sorted(map(set, bd.blocks), key=min) == oracles.edge_blocks(g.vertices, oracles.edges_of(g))
    covered = [e for b in bd.blocks for e in b]
    assert sorted(covered) == list(g.edge_ids)
    vsets = [bd.block_vertices(g, i) for i in range(len(bd.blocks))]
    for i in range(len(vsets)):
        for j in range(i + 1, len(vsets)):
            assert len(vsets[i] & vsets[j]) <= 1


@given(multigraphs())
def test_blocks_of_multigraphs(g):
    bd = block_decomposition(g)
    assert sorted(map(set, bd.blocks), key=min) == oracles.edge_blocks(g.vertices, oracles.edges_of(g))


def test_girth_examples():
    assert girth(cycle(7)) == 7
    assert girth(path(5)) == math.inf
    assert girth(petersen()) == 5
    p = petersen()
    assert oracles.girth(p.vertices, oracles.pairs_of(p)) == 5
    assert girth(Graph.from_pairs([(0, 1), (0, 1), (1, 2)], vertices=3, multigraph=True)) == 2


@given(simple_graphs())
def test_girth_matches_cycle_enumeration(g):
    assert girth(g) == oracles.girth(g.vertices, oracles.pairs_of(g))


def test_degeneracy_examples():
    assert degeneracy(path(6)) == 1
    assert degeneracy(complete(5)) == 4
    assert degeneracy(prism(4)) <= 5


@given(simple_graphs(), st.data())
def test_degeneracy_monotone_under_subgraphs(g, data):
    d = degeneracy(g)
    assert d <= g.max_degree
    keep = data.draw(st.lists(st.sampled_from(g.edge_ids), unique=True) if g.num_edges else st.just([]))
    assert degeneracy(g.edge_subgraph(keep)) <= d


def test_complement_examples():
    assert complement(complete(4)).num_edges == 0
    c = complement(cycle(6))
    p = prism(3)
    assert oracles.isomorphic(c.vertices, oracles.pairs_of(c), p.vertices, oracles.pairs_of(p))
    with pytest.raises(PreconditionError):
        complement(Graph.from_pairs([(0, 1), (0, 1)], vertices=2, multigraph=True))


@given(simple_graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


def test_subgraphs_keep_ids():
    g = complete(4)
    assert g.edge_subgraph(g.edge_ids) == g
    assert g.edge_subgraph([]).num_edges == 0
    k3 = g.vertex_induced([0, 1, 2])
    assert k3.num_edges == 3 and set(k3.edge_ids) <= set(g.edge_ids)
    assert g.without_edges([0]).edge_ids == g.edge_ids[1:]
