"""Seeded random graphs and coloring pairs for tests and benchmarks.

Every generator takes a :class:`random.Random` so a corpus is reproducible
from one integer seed.
"""

from __future__ import annotations

import random
from collections.abc import Iterator

from .constructions import glue_at, grid, wheel
from .edge_coloring import EdgeColoring, find_proper_coloring, kempe_chain, kempe_interchange
from .graph_core import Graph


def random_series_parallel(num_edges: int, rng: random.Random, hub_bias: float = 0.6) -> Graph:
    """2-connected simple series-parallel graph grown from one edge.

    Each step either subdivides an edge or adds a path of length two parallel
    to it.  With probability ``hub_bias`` the edge is taken at a vertex of
    currently maximum degree, which yields vertices of large degree.
    """
    edges = [(0, 1)]
    nxt = 2
    deg = {0: 1, 1: 1}
    while len(edges) < num_edges:
        if rng.random() < hub_bias:
            top = max(deg.values())
            hubs = [x for x, d in deg.items() if d == top]
            h = rng.choice(hubs)
            i = rng.choice([k for k, (u, v) in enumerate(edges) if h in (u, v)])
        else:
            i = rng.randrange(len(edges))
        u, v = edges[i]
        w = nxt
        nxt += 1
        if rng.random() < 0.35:
            edges[i] = (u, w)
            edges.append((w, v))
            deg[w] = 2
        else:
            edges += [(u, w), (w, v)]
            deg[w] = 2
            deg[u] += 1
            deg[v] += 1
    return Graph.from_pairs(edges, vertices=nxt)


def random_outerplanar(n: int, rng: random.Random, chord_prob: float = 0.6) -> Graph:
    """Polygon 0..n-1 plus a random set of non-crossing chords."""
    edges = [(i, (i + 1) % n) for i in range(n)]

    def split(poly: list[int]) -> None:
        if len(poly) < 4 or rng.random() > chord_prob:
            return
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = sorted((i, j))
        edges.append((poly[a], poly[b]))
        split(poly[a:b + 1])
        split(poly[b:] + poly[:a + 1])

    split(list(range(n)))
    return Graph.from_pairs([(min(u, v), max(u, v)) for u, v in edges], vertices=n)


def random_chordless(n: int, m: int, rng: random.Random, odd_prob: float = 0.3) -> Graph:
    """Subdivision of a random simple graph on n vertices and m edges.

    Every edge gets one or (with ``odd_prob``) two subdivision vertices, so
    vertices of degree at least 3 are pairwise non-adjacent and no cycle
    has a chord.
    """
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    chosen = pairs[:m]
    edges = []
    nxt = n
    for a, b in sorted(chosen):
        k = 2 if rng.random() < odd_prob else 1
        chain = [a] + list(range(nxt, nxt + k)) + [b]
        nxt += k
        edges += list(zip(chain, chain[1:]))
    return Graph.from_pairs(edges, vertices=nxt)


def random_bipartite_multigraph(a: int, b: int, m: int, rng: random.Random) -> Graph:
    """m random edges between sides 0..a-1 and a..a+b-1; parallel edges allowed."""
    pairs = [(rng.randrange(a), a + rng.randrange(b)) for _ in range(m)]
    return Graph.from_pairs(pairs, vertices=a + b, multigraph=True)


def glued_pair(rng: random.Random) -> Graph:
    """Two random blocks sharing one vertex."""
    host = random_series_parallel(rng.randint(8, 16), rng)
    guest = random_outerplanar(rng.randint(5, 8), rng)
    hv = max(host.vertices, key=lambda x: (host.degree(x), -x))
    return glue_at(host, hv, guest, 0)


def random_coloring(g: Graph, t: int, rng: random.Random, kempe_steps: int = 80) -> EdgeColoring | None:
    """A proper t-coloring scrambled by a color permutation and random Kempe changes."""
    f = find_proper_coloring(g, t)
    if f is None:
        return None
    perm = list(range(1, t + 1))
    rng.shuffle(perm)
    f = f.recolored({e: perm[c - 1] for e, c in f.items()})
    if not g.vertices:
        return f
    for _ in range(kempe_steps):
        x = rng.choice(g.vertices)
        c, d = rng.sample(range(1, t + 1), 2)
        chain = kempe_chain(g, f, x, c, d)
        if not chain.is_trivial:
            f = kempe_interchange(g, f, chain)
    return f


def coloring_pair(g: Graph, rng: random.Random, t: int | None = None
                  ) -> tuple[EdgeColoring, EdgeColoring] | None:
    t = g.max_degree if t is None else t
    f = random_coloring(g, t, rng)
    if f is None:
        return None
    return f, random_coloring(g, t, rng)


def engine_corpus(seed: int, per_family: int = 10) -> Iterator[tuple[str, Graph]]:
    """Graphs for the transformation engine: wheels, series-parallel,
    outerplanar, chordless, grids, glued blocks and bipartite multigraphs."""
    rng = random.Random(seed)
    for n in range(5, 10):
        yield f"wheel {n}", wheel(n)
    for i in range(per_family):
        yield f"series-parallel {i}", random_series_parallel(rng.randint(10, 30), rng)
        yield f"outerplanar {i}", random_outerplanar(rng.randint(6, 12), rng)
        yield f"chordless {i}", random_chordless(rng.randint(4, 7), rng.randint(5, 12), rng)
        yield f"glued {i}", glued_pair(rng)
        yield f"bipartite multigraph {i}", random_bipartite_multigraph(
            rng.randint(2, 4), rng.randint(2, 4), rng.randint(4, 14), rng)
    for r, c in ((2, 3), (3, 3), (3, 4)):
        yield f"grid {r}x{c}", grid(r, c)
