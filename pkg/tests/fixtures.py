"""Graph and coloring fixtures that force the cycle moves of the engine."""

from __future__ import annotations

import random

from edgetrans.edge_coloring import DiffComponent, EdgeColoring, violations
from edgetrans.graph_core import Graph


def necklace(k: int, t: int, three_paths: int = 0, pendants: tuple[int, ...] = ()) -> Graph:
    """Even cycle 0..2k-1 thickened by internally disjoint paths between
    consecutive cycle vertices so that every cycle vertex has degree t.

    ``three_paths`` of the thickening paths per cycle edge have length three,
    the rest length two.  Every vertex in ``pendants`` trades one thickening
    path for a pendant edge (so it becomes a cutvertex); pendants must come in
    adjacent pairs (i, i+1).
    """
    n = 2 * k
    pairs = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    lost = {i: 0 for i in range(n)}
    for i in pendants:
        lost[i] += 1
    for i in range(n):
        j = (i + 1) % n
        base = (t - 2) // 2 + (1 if t % 2 and i % 2 else 0)
        cnt = base - (1 if i in pendants and j in pendants else 0)
        for r in range(cnt):
            if r < three_paths:
                pairs += [(i, nxt), (nxt, nxt + 1), (nxt + 1, j)]
                nxt += 2
            else:
                pairs += [(i, nxt), (nxt, j)]
                nxt += 1
    for i in pendants:
        pairs.append((i, nxt))
        nxt += 1
    return Graph.from_pairs([(min(a, b), max(a, b)) for a, b in pairs], vertices=nxt)


def complete_coloring(g: Graph, fixed: dict[int, int], t: int, rng: random.Random,
                      tries: int = 200) -> EdgeColoring | None:
    """Random proper extension of a partial coloring by randomized backtracking."""
    free = [e for e in g.edge_ids if e not in fixed]
    for _ in range(tries):
        col = dict(fixed)
        order = free[:]
        rng.shuffle(order)
        ok = True
        for e in order:
            u, v = g.endpoints(e)
            used = {col[d] for x in (u, v) for d in g.incident(x) if d in col}
            options = [c for c in range(1, t + 1) if c not in used]
            if not options:
                ok = False
                break
            col[e] = rng.choice(options)
        if ok:
            f = EdgeColoring(t, col)
            if not violations(g, f):
                return f
    return None


def alternating_necklace_coloring(g: Graph, k: int, t: int, rng: random.Random) -> EdgeColoring | None:
    """Coloring in which the main cycle alternates t with colors 1, 2, 3, ..."""
    n = 2 * k
    cyc = {}
    for i in range(n):
        e = next(d for d in g.incident(i) if set(g.endpoints(d)) == {i, (i + 1) % n})
        cyc[e] = t if i % 2 == 0 else (i // 2) % (t - 1) + 1
    return complete_coloring(g, cyc, t, rng)


def main_cycle(g: Graph, k: int) -> DiffComponent:
    n = 2 * k
    edges = tuple(next(d for d in g.incident(i) if set(g.endpoints(d)) == {i, (i + 1) % n})
                  for i in range(n))
    return DiffComponent("cycle", tuple(range(n)), edges)


def flipped_goal(g: Graph, f: EdgeColoring, comp: DiffComponent, rng: random.Random) -> EdgeColoring | None:
    """A proper coloring whose class t is that of f flipped along the component."""
    t = f.t
    target = set(f.color_class(t)) ^ set(comp.edges)
    return complete_coloring(g, {e: t for e in target}, t, rng) if target else None
