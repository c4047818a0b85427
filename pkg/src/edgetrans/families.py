"""Deterministic candidate streams for witness searches.

Every stream yields ``(label, graph)`` pairs, smallest graphs first, and
skips graphs isomorphic to one already yielded.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

import networkx as nx

from .constructions import halin
from .errors import PreconditionError
from .graph_core import Graph, is_connected
from .recognizers import is_bipartite, is_planar


class _Dedup:
    def __init__(self) -> None:
        self.seen: dict[str, list[nx.Graph]] = {}

    def fresh(self, g: Graph) -> bool:
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from((u, v) for _, u, v in g.edges)
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = self.seen.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            return False
        bucket.append(h)
        return True


def _tree_graph(t: nx.Graph) -> Graph:
    return Graph.from_pairs(sorted((min(u, v), max(u, v)) for u, v in t.edges()), vertices=t.number_of_nodes())


def _leaf_orders(tree: Graph) -> Iterator[list[int]]:
    """Leaf sequences of all plane embeddings, rooted at the lowest internal vertex.

    The root's cyclic order fixes its first neighbour; every other vertex
    permutes its children freely.
    """
    root = min(x for x in tree.vertices if tree.degree(x) > 1)
    parent = {root: None}
    order = [root]
    for x in order:
        for y in tree.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
    children = {x: sorted(y for y in tree.neighbors(x) if parent.get(y) == x) for x in tree.vertices}
    internal = [x for x in tree.vertices if children[x]]

    def arrangements(x: int) -> list[tuple[int, ...]]:
        ch = children[x]
        if x == root:
            return [(ch[0],) + p for p in itertools.permutations(ch[1:])]
        return list(itertools.permutations(ch))

    for choice in itertools.product(*(arrangements(x) for x in internal)):
        rot = dict(zip(internal, choice))
        leaves: list[int] = []
        stack = [root]
        while stack:
            x = stack.pop()
            if x not in rot:
                leaves.append(x)
            else:
                stack.extend(reversed(rot[x]))
        yield leaves


def halin_candidates(max_vertices: int, internal_degrees: tuple[int, ...] = (3, 4),
                     max_degree: int = 4) -> Iterator[tuple[str, Graph]]:
    """Halin graphs whose tree has internal degrees in ``internal_degrees`` and
    maximum degree exactly ``max_degree``, by vertex count."""
    dedup = _Dedup()
    for n in range(4, max_vertices + 1):
        for k, t in enumerate(nx.nonisomorphic_trees(n)):
            degs = [d for _, d in t.degree()]
            internal = [d for d in degs if d > 1]
            if any(d not in internal_degrees for d in internal) or max(degs) != max_degree:
                continue
            tree = _tree_graph(t)
            for j, leaves in enumerate(_leaf_orders(tree)):
                g, _ = halin(tree, leaves)
                if dedup.fresh(g):
                    yield f"halin n={n} tree={k} embedding={j}", g


def _dissections(n: int, max_degree: int) -> Iterator[list[tuple[int, int]]]:
    """Sets of non-crossing chords of the n-gon 0..n-1, keeping every degree <= max_degree."""
    chords = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]

    def crosses(c: tuple[int, int], d: tuple[int, int]) -> bool:
        (a, b), (x, y) = c, d
        return (a < x < b < y) or (x < a < y < b)

    deg = [2] * n
    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[list[tuple[int, int]]]:
        if i == len(chords):
            yield list(chosen)
            return
        a, b = chords[i]
        if deg[a] < max_degree and deg[b] < max_degree and not any(crosses(chords[i], c) for c in chosen):
            chosen.append(chords[i])
            deg[a] += 1
            deg[b] += 1
            yield from rec(i + 1)
            deg[a] -= 1
            deg[b] -= 1
            chosen.pop()
        yield from rec(i + 1)

    yield from rec(0)


def outerplanar_candidates(max_vertices: int, max_degree: int = 4,
                           min_vertices: int = 4) -> Iterator[tuple[str, Graph]]:
    """2-connected outerplanar graphs (polygon dissections) with maximum degree exactly
    ``max_degree``, by vertex count and then by number of chords (descending)."""
    dedup = _Dedup()
    for n in range(min_vertices, max_vertices + 1):
        cyc = [(i, (i + 1) % n) for i in range(n)]
        found = [d for d in _dissections(n, max_degree)]
        found.sort(key=lambda d: (-len(d), d))
        for j, chords in enumerate(found):
            g = Graph.from_pairs(cyc + chords, vertices=n)
            if g.max_degree == max_degree and dedup.fresh(g):
                yield f"outerplanar n={n} dissection={j}", g


def atlas_graphs(max_vertices: int = 7) -> Iterator[tuple[str, Graph]]:
    """All graphs on at most 7 vertices in networkx atlas order (vertex count,
    then edge count, then degree sequence); the atlas lists each isomorphism
    class exactly once."""
    if max_vertices > 7:
        raise PreconditionError("the atlas stops at 7 vertices")
    for i, h in enumerate(nx.graph_atlas_g()):
        if h.number_of_nodes() <= max_vertices:
            yield f"atlas #{i}", Graph.from_pairs(sorted(h.edges()), vertices=h.number_of_nodes())


def planar_bipartite_candidates(max_vertices: int = 7, max_degree: int = 3) -> Iterator[tuple[str, Graph]]:
    """Connected planar bipartite graphs with maximum degree exactly ``max_degree``, atlas order."""
    for label, g in atlas_graphs(max_vertices):
        if g.num_edges and g.max_degree == max_degree and is_connected(g) and is_bipartite(g) and is_planar(g):
            yield label, g
