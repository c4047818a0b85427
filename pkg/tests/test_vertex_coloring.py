import pytest
from hypothesis import given

from edgetrans.constructions import H_blocks, build_H, complete, cycle, path, prism, star
from edgetrans.errors import GraphFormatError, PreconditionError
from edgetrans.graph_core import Graph, complement
from edgetrans.vertex_coloring import (
    VertexPartition,
    chromatic_number,
    enumerate_partitions,
    global_transformation_required,
)

import oracles
from test_graph_core import simple_graphs

DESK_SCALE = [(p, n) for p in range(1, 8) for n in range(3, 8) if 2 * p * n <= 14]


def cone_over_prism() -> Graph:
    """Prism plus a vertex adjacent to all six: two 4-partitions, both containing {6}."""
    pairs = [(a, b) for _, a, b in prism(3).edges] + [(x, 6) for x in range(6)]
    return Graph.from_pairs(pairs, vertices=7)


def test_chromatic_number_examples():
    assert chromatic_number(cycle(6))[0] == 2
    assert chromatic_number(cycle(5))[0] == 3
    k, part = chromatic_number(prism(3))
    assert k == 3 and part.is_proper(prism(3))
    assert not enumerate_partitions(prism(3), 2)
    assert chromatic_number(complete(5))[0] == 5


@pytest.mark.parametrize("p,n", DESK_SCALE)
def test_complement_of_H_has_two_disjoint_partitions(p, n):
    hc = complement(build_H(p, n))
    assert chromatic_number(hc)[0] == n
    parts = enumerate_partitions(hc, n)
    assert len(parts) == 2
    assert global_transformation_required(hc, n)
    blocks = H_blocks(p, n)
    cols = VertexPartition.of(blocks[2 * i] + blocks[2 * i + 1] for i in range(n))
    rows = VertexPartition.of([blocks[-1] + blocks[0]] + [blocks[2 * i - 1] + blocks[2 * i] for i in range(1, n)])
    assert set(parts) == {cols, rows}
    h = build_H(p, n)
    adj = oracles.adjacency(h.vertices, oracles.pairs_of(h))
    for part in parts:
        for cls in part.classes:
            assert len(cls) == 2 * p and all(b in adj[a] for a in cls for b in cls if a != b)


def test_shared_class_means_no_global_transformation():
    g = cone_over_prism()
    parts = enumerate_partitions(g, 4)
    assert len(parts) == 2 and all((6,) in p.classes for p in parts)
    assert not global_transformation_required(g, 4)
    with pytest.raises(PreconditionError):
        global_transformation_required(cycle(6), 3)


def test_trees_have_one_bipartition():
    for t in (path(6), star(4)):
        assert len(enumerate_partitions(t, 2)) == 1


@given(simple_graphs(max_n=6))
def test_partitions_are_proper_and_distinct(g):
    k = chromatic_number(g)[0]
    parts = enumerate_partitions(g, k)
    assert parts and len(set(parts)) == len(parts)
    assert all(p.is_proper(g) for p in parts)
    if k > 1:
        assert not enumerate_partitions(g, k - 1)


def test_partition_json():
    p = VertexPartition.of([[5, 0], [2, 1]])
    assert p.to_json() == '{"classes":[[0,5],[1,2]]}'
    assert VertexPartition.from_dict({"classes": [[1, 2], [0, 5]]}) == p
    with pytest.raises(GraphFormatError):
        VertexPartition.from_dict({"classes": [], "k": 2})
