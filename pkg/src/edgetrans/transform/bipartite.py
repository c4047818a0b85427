"""Raising the overlap of the t-classes with moves of width at most 3.

Used for bipartite graphs (multigraphs included), where any two proper
Δ-colorings are 3-equivalent, so a coloring 3-equivalent to f sharing more
t-edges with the goal exists whenever the t-classes differ.  The search is
breadth-first over single moves: recolor one component of the edges colored
from a 3-set S.  These moves generate 3-equivalence.  At every visited
coloring it first tries, for each S containing t, the recoloring of each
component that shares the most t-edges with the goal.
"""

from __future__ import annotations

import itertools
from collections import deque

from ..edge_coloring import (
    ColoringSearch,
    EdgeColoring,
    _edge_components,
    connected_edge_order,
)
from ..errors import BudgetExceeded, PreconditionError
from ..graph_core import Graph
from ..trace import TransformationTrace

DEFAULT_STATES = 20_000
DEFAULT_COMPONENT_CAP = 2_000


def overlap(f: EdgeColoring, goal: EdgeColoring, t: int) -> int:
    return len(f.color_class(t) & goal.color_class(t))


def progress(f: EdgeColoring, goal: EdgeColoring, t: int) -> tuple[int, int]:
    """Shared t-edges, then (negated) t-edges of f the goal lacks; larger is better.

    In a regular graph both class t's are perfect matchings and the second
    entry is determined by the first.
    """
    mine, theirs = f.color_class(t), goal.color_class(t)
    return len(mine & theirs), -len(mine - theirs)


def _best_on_set(g: Graph, f: EdgeColoring, goal: EdgeColoring, S: tuple[int, ...], t: int,
                 cap: int) -> EdgeColoring | None:
    target = goal.color_class(t)
    d_edges = [e for e in g.edge_ids if f[e] in S]
    changes: dict[int, int] = {}
    for comp in _edge_components(g, d_edges):
        base = (sum(1 for e in comp if f[e] == t and e in target),
                -sum(1 for e in comp if f[e] == t and e not in target))
        order = connected_edge_order(g, comp)
        search = ColoringSearch(g, order, S, None)
        best, best_key = None, None
        for n, sol in enumerate(search.solutions()):
            if n >= cap:
                break
            gain = (sum(1 for e, c in zip(order, sol) if c == t and e in target),
                    -sum(1 for e, c in zip(order, sol) if c == t and e not in target))
            moved = sum(1 for e, c in zip(order, sol) if c != f[e])
            key = (-gain[0], -gain[1], moved, tuple(sol))
            if best_key is None or key < best_key:
                best, best_key = sol, key
        if best is not None and (-best_key[0], -best_key[1]) > base:
            changes.update(zip(order, best))
    return f.recolored(changes) if changes else None


def _component_moves(g: Graph, f: EdgeColoring, sets: list[tuple[int, ...]], cap: int):
    """Colorings differing from f on one component of the edges colored from some set S."""
    for S in sets:
        d_edges = [e for e in g.edge_ids if f[e] in S]
        for comp in _edge_components(g, d_edges):
            order = connected_edge_order(g, comp)
            current = [f[e] for e in order]
            for n, sol in enumerate(ColoringSearch(g, order, S, None).solutions()):
                if n >= cap:
                    break
                if sol != current:
                    yield f.recolored(dict(zip(order, sol)))


def improve_toward(g: Graph, f: EdgeColoring, goal: EdgeColoring, q: int = 3,
                   budget: int = DEFAULT_STATES, t: int | None = None,
                   component_cap: int = DEFAULT_COMPONENT_CAP) -> TransformationTrace:
    """Trace from f, each step changing at most q classes, ending at h with
    progress(h) > progress(f).  For regular graphs this means strictly more
    t-edges shared with the goal.

    Raises :class:`BudgetExceeded` after ``budget`` visited colorings.
    """
    t = f.t if t is None else t
    if f.color_class(t) == goal.color_class(t):
        raise PreconditionError("the t-classes already agree")
    start = progress(f, goal, t)
    size = min(q, f.t)
    sets = [S for S in itertools.combinations(range(1, f.t + 1), size) if t in S]
    all_sets = list(itertools.combinations(range(1, f.t + 1), size))
    parent: dict[EdgeColoring, EdgeColoring | None] = {f: None}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        for S in sets:
            better = _best_on_set(g, h, goal, S, t, component_cap)
            if better is not None and progress(better, goal, t) > start:
                path = [better]
                node: EdgeColoring | None = h
                while node is not None:
                    path.append(node)
                    node = parent[node]
                return TransformationTrace(g, path[::-1], width=size)
        for nb in _component_moves(g, h, all_sets, component_cap):
            if nb not in parent:
                if len(parent) >= budget:
                    raise BudgetExceeded(f"no improving {size}-transformation within {budget} colorings")
                parent[nb] = h
                queue.append(nb)
    raise BudgetExceeded(f"{size}-equivalence class exhausted without improvement")
