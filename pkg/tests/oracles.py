"""Brute-force reference implementations.

Nothing here imports the package's algorithms: every oracle works on plain
vertex/edge lists so that an engine bug cannot be mirrored by the check.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator


def adjacency(vertices, pairs) -> dict[int, set[int]]:
    adj = {x: set() for x in vertices}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def pairs_of(g) -> list[tuple[int, int]]:
    return [(d["u"], d["v"]) for d in g.to_dict()["edges"]]


def edges_of(g) -> list[tuple[int, int, int]]:
    return [(d["id"], d["u"], d["v"]) for d in g.to_dict()["edges"]]


def simple_cycles(vertices, pairs) -> Iterator[list[int]]:
    """Every cycle of a simple graph exactly once, as a vertex list starting at its
    smallest vertex, second vertex smaller than the last."""
    adj = adjacency(vertices, pairs)
    for s in sorted(adj):
        path = [s]
        on = {s}

        def dfs(x: int) -> Iterator[list[int]]:
            for y in sorted(adj[x]):
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    yield list(path)
                elif y > s and y not in on:
                    path.append(y)
                    on.add(y)
                    yield from dfs(y)
                    on.discard(y)
                    path.pop()

        yield from dfs(s)


def girth(vertices, pairs) -> float:
    seen = set()
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            return 2
        seen.add(key)
    return min((len(c) for c in simple_cycles(vertices, pairs)), default=math.inf)


def chordless(vertices, pairs) -> bool:
    adj = adjacency(vertices, pairs)
    for cyc in simple_cycles(vertices, pairs):
        k = len(cyc)
        for i, j in itertools.combinations(range(k), 2):
            if (j - i) % k not in (1, k - 1) and cyc[j] in adj[cyc[i]]:
                return False
    return True


def has_k4_minor(vertices, pairs) -> bool:
    """Four disjoint connected branch sets, pairwise joined by an edge."""
    vs = sorted(vertices)
    idx = {x: i for i, x in enumerate(vs)}
    nb = [0] * len(vs)
    for u, v in pairs:
        nb[idx[u]] |= 1 << idx[v]
        nb[idx[v]] |= 1 << idx[u]

    def connected(mask: int) -> bool:
        start = mask & -mask
        seen, frontier = start, start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = nb[low.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    sets = []
    for mask in range(1, 1 << len(vs)):
        if connected(mask):
            reach = 0
            m = mask
            while m:
                low = m & -m
                m ^= low
                reach |= nb[low.bit_length() - 1]
            sets.append((mask, reach & ~mask))
    sets.sort(key=lambda s: (bin(s[0]).count("1"), s[0]))

    def search(chosen: list[tuple[int, int]], start: int) -> bool:
        if len(chosen) == 4:
            return True
        used = 0
        for m, _ in chosen:
            used |= m
        for i in range(start, len(sets)):
            m, r = sets[i]
            if m & used:
                continue
            if all(r & cm for cm, _ in chosen):
                chosen.append(sets[i])
                if search(chosen, i + 1):
                    return True
                chosen.pop()
        return False

    return search([], 0)


def edge_blocks(vertices, edges) -> list[set[int]]:
    """Blocks as edge-id sets: two edges share a block iff some cycle contains both.

    ``edges`` is a list of (id, u, v); parallel edges form cycles of length 2.
    """
    ids = [e for e, _, _ in edges]
    parent = {e: e for e in ids}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    by_pair: dict[tuple[int, int], list[int]] = {}
    for e, u, v in edges:
        by_pair.setdefault((min(u, v), max(u, v)), []).append(e)
    for group in by_pair.values():
        for e in group[1:]:
            parent[find(e)] = find(group[0])
    for cyc in simple_cycles(vertices, list(by_pair)):
        cyc_edges = [by_pair[(min(a, b), max(a, b))][0] for a, b in zip(cyc, cyc[1:] + cyc[:1])]
        for e in cyc_edges[1:]:
            parent[find(e)] = find(cyc_edges[0])
    groups: dict[int, set[int]] = {}
    for e in ids:
        groups.setdefault(find(e), set()).add(e)
    return sorted(groups.values(), key=min)


def is_proper(edges, colors: dict[int, int]) -> bool:
    seen = set()
    for e, u, v in edges:
        for x in (u, v):
            key = (x, colors[e])
            if key in seen:
                return False
            seen.add(key)
    return True


def count_colorings(edges, t: int) -> int:
    """Proper t-colorings by plain product enumeration (tiny graphs only)."""
    ids = [e for e, _, _ in edges]
    return sum(is_proper(edges, dict(zip(ids, combo)))
               for combo in itertools.product(range(1, t + 1), repeat=len(ids)))


def changed_classes(a: dict[int, int], b: dict[int, int], t: int) -> set[int]:
    return {j for j in range(1, t + 1)
            if {e for e, c in a.items() if c == j} != {e for e, c in b.items() if c == j}}


def isomorphic(va, pa, vb, pb) -> bool:
    """Brute force over bijections (at most 8 vertices)."""
    va, vb = sorted(va), sorted(vb)
    if len(va) != len(vb) or len(pa) != len(pb):
        return False
    ea = {frozenset(p) for p in pa}
    eb = {frozenset(p) for p in pb}
    da = sorted(sum(x in p for p in ea) for x in va)
    db = sorted(sum(x in p for p in eb) for x in vb)
    if da != db:
        return False
    for perm in itertools.permutations(vb):
        m = dict(zip(va, perm))
        if all(frozenset(m[x] for x in p) in eb for p in ea):
            return True
    return False


def max_clique(vertices, pairs) -> int:
    adj = adjacency(vertices, pairs)
    best = 0
    vs = sorted(adj)
    for k in range(1, len(vs) + 1):
        if any(all(b in adj[a] for a, b in itertools.combinations(c, 2))
               for c in itertools.combinations(vs, k)):
            best = k
        else:
            break
    return best


def index_by_bfs(colorings: list[dict[int, int]], t: int) -> int:
    """Least n >= 2 making the 'differ in at most n classes' graph connected."""
    for n in range(2, max(t, 2) + 1):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(len(colorings)):
                if j not in seen and len(changed_classes(colorings[i], colorings[j], t)) <= n:
                    seen.add(j)
                    stack.append(j)
        if len(seen) == len(colorings):
            return n
    return max(t, 2)


def all_colorings(edges, t: int) -> list[dict[int, int]]:
    """Every proper t-coloring, by edge-at-a-time backtracking."""
    out = []
    used: dict[int, set[int]] = {}
    cur: dict[int, int] = {}

    def rec(i: int) -> None:
        if i == len(edges):
            out.append(dict(cur))
            return
        e, u, v = edges[i]
        for c in range(1, t + 1):
            if c in used.setdefault(u, set()) or c in used.setdefault(v, set()):
                continue
            used[u].add(c)
            used[v].add(c)
            cur[e] = c
            rec(i + 1)
            used[u].discard(c)
            used[v].discard(c)
        cur.pop(e, None)

    rec(0)
    return out


def unique_partition(edges, palette) -> bool:
    """True iff the edges split into len(palette) matchings in exactly one way."""
    k = len(palette)
    parts = {frozenset(frozenset(e for e, c in col.items() if c == j) for j in range(1, k + 1))
             for col in all_colorings(edges, k)}
    return len(parts) == 1
