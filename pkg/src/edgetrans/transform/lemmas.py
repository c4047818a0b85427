"""Single-component moves: each flips color t along one component of the
difference graph G(f, g, t) using steps that change at most q + 1 classes."""

from __future__ import annotations

from collections.abc import Sequence

from ..edge_coloring import DiffComponent, EdgeColoring, correction, missing_colors, violations
from ..errors import InvariantViolation, PreconditionError
from ..graph_core import Graph, block_decomposition
from ..trace import TransformationTrace
from .runner import Trail, TrailRunner, fill_colors


def _trace(g: Graph, cols: Sequence[EdgeColoring], q: int) -> TransformationTrace:
    tr = TransformationTrace(g, cols, width=q + 1)
    tr.check()
    return tr


def _check_flip(f: EdgeColoring, last: EdgeColoring, edges: Sequence[int], what: str) -> None:
    t = f.t
    if set(last.color_class(t)) != set(f.color_class(t)) ^ set(edges):
        raise InvariantViolation(f"{what}: class t was not flipped exactly along the component")


def _path_order(g: Graph, f: EdgeColoring, comp: DiffComponent, first_t: bool):
    verts, edges = list(comp.vertices), list(comp.edges)
    if (f[edges[0]] == f.t) != first_t:
        verts.reverse()
        edges.reverse()
    return verts, edges


def _low_missing(g: Graph, f: EdgeColoring, x: int) -> int:
    free = sorted(c for c in missing_colors(g, f, x) if c != f.t)
    if not free:
        raise PreconditionError(f"no color below t is missing at vertex {x}")
    return free[0]


def transform_even_path(g: Graph, f: EdgeColoring, goal: EdgeColoring, comp: DiffComponent,
                        q: int) -> TransformationTrace:
    """Flip t along an even path component; f side only."""
    if comp.kind != "path-even":
        raise PreconditionError("expected an even path component")
    t = f.t
    verts, edges = _path_order(g, f, comp, True)
    v0 = verts[0]
    s0 = f[edges[1]]
    c0 = _low_missing(g, f, v0)
    if {f[e] for e in edges} == {t, s0}:
        h = f.recolored({e: (s0 if f[e] == t else t) for e in edges})
        if s0 in missing_colors(g, f, v0):
            cols = [f, h]
        else:
            R = fill_colors({c0}, q - 1, t, exclude={s0})
            cols = [f, correction(g, h, R | {s0})]
    else:
        cols = TrailRunner(g, f, Trail(tuple(verts), tuple(edges)), q, c0).run()
    _check_flip(f, cols[-1], edges, "even path")
    return _trace(g, cols, q)


def _odd_path_one_side(g: Graph, f: EdgeColoring, comp: DiffComponent, q: int) -> TransformationTrace:
    t = f.t
    verts, edges = _path_order(g, f, comp, False)
    e0 = edges[0]
    c0 = f[e0]
    if len(edges) == 1:
        cols = [f, f.recolored({e0: t})]
    else:
        s0 = f[edges[2]]
        rest = edges[1:]
        if {f[e] for e in rest} == {t, s0} and c0 == s0:
            # shift every color one edge towards the start and cap the far end with t
            changes = {}
            for i in range(0, len(edges) - 1, 2):
                changes[edges[i]] = f[edges[i + 1]]
                changes[edges[i + 1]] = f[edges[i]]
            changes[edges[-1]] = t
            cols = [f, f.recolored(changes)]
        else:
            runner = TrailRunner(g, f, Trail(tuple(verts[1:]), tuple(rest)), q, c0, prerecolor={e0: t})
            cols = runner.run()
    _check_flip(f, cols[-1], edges, "odd path")
    return _trace(g, cols, q)


def transform_odd_path(g: Graph, f: EdgeColoring, goal: EdgeColoring, comp: DiffComponent,
                       q: int) -> tuple[TransformationTrace, TransformationTrace]:
    """Flip t along an odd path component.

    Returns (trace from f, trace from goal); exactly one of them is trivial.
    The side whose coloring does not use t on the end edges does the work.
    """
    if comp.kind != "path-odd":
        raise PreconditionError("expected an odd path component")
    if f[comp.edges[0]] == f.t:
        return TransformationTrace(g, [f], q + 1), _odd_path_one_side(g, goal, comp, q)
    return _odd_path_one_side(g, f, comp, q), TransformationTrace(g, [goal], q + 1)


def _cycle_from(comp: DiffComponent, f: EdgeColoring, start: int) -> tuple[list[int], list[int]]:
    """Cycle as a closed vertex list starting and ending at ``start``, first edge colored t."""
    n = len(comp.edges)
    i = comp.vertices.index(start)
    verts = [comp.vertices[(i + k) % n] for k in range(n)]
    edges = [comp.edges[(i + k) % n] for k in range(n)]
    if f[edges[0]] != f.t:
        verts = [verts[0]] + verts[1:][::-1]
        edges = edges[::-1]
    return verts + [start], edges


def cycle_colors(f: EdgeColoring, comp: DiffComponent) -> set[int]:
    return {f[e] for e in comp.edges}


def transform_cycle_simple(g: Graph, f: EdgeColoring, goal: EdgeColoring, comp: DiffComponent,
                           q: int) -> TransformationTrace:
    """Flip t along a cycle that has few colors or a vertex of degree below t."""
    if comp.kind != "cycle":
        raise PreconditionError("expected a cycle component")
    t = f.t
    colors = cycle_colors(f, comp)
    if len(colors) <= q + 1:
        verts, edges = _cycle_from(comp, f, comp.vertices[0])
        changes = {}
        for i in range(0, len(edges), 2):
            changes[edges[i]], changes[edges[i + 1]] = f[edges[i + 1]], f[edges[i]]
        h = f.recolored(changes)
        R = fill_colors(colors - {t}, q, t)
        cols = [f, correction(g, h, R)]
    else:
        low = [x for x in comp.vertices if g.degree(x) < t]
        if not low:
            raise PreconditionError("cycle has more than q + 1 colors and no vertex of degree below t")
        verts, edges = _cycle_from(comp, f, min(low))
        cols = TrailRunner(g, f, Trail(tuple(verts), tuple(edges)), q).run()
    _check_flip(f, cols[-1], comp.edges, "cycle")
    return _trace(g, cols, q)


def transform_cycle_with_tail(g: Graph, f: EdgeColoring, goal: EdgeColoring, comp: DiffComponent,
                              tail_vertices: Sequence[int], tail_edges: Sequence[int],
                              q: int) -> TransformationTrace:
    """Flip t along a cycle using a t-alternating tail path that ends on it.

    The tail runs from an origin of degree below t to a cycle vertex, where
    its last edge is not colored t.  The trail walks the tail, the cycle and
    the tail backwards.  If the tail starts with a non-t edge, the origin
    misses t and a pendant t-edge is attached there for the duration of the
    run.
    """
    t = f.t
    u0, v0 = tail_vertices[0], tail_vertices[-1]
    if v0 not in comp.vertices or any(x in comp.vertices for x in tail_vertices[:-1]):
        raise PreconditionError("tail must meet the cycle exactly at its last vertex")
    if len(set(tail_vertices)) != len(tail_vertices):
        raise PreconditionError("tail must be a path")
    if g.degree(u0) >= t:
        raise PreconditionError("tail origin must have degree below t")
    if f[tail_edges[-1]] == t:
        raise PreconditionError("tail's last edge must not be colored t")
    for k in range(len(tail_edges) - 1):
        if (f[tail_edges[k]] == t) == (f[tail_edges[k + 1]] == t):
            raise PreconditionError("tail is not t-alternating")
    cverts, cedges = _cycle_from(comp, f, v0)
    tv, te = list(tail_vertices), list(tail_edges)
    wv = tv + cverts[1:] + tv[::-1][1:]
    we = te + cedges + te[::-1]
    if f[te[0]] == t:
        cols = TrailRunner(g, f, Trail(tuple(wv), tuple(we)), q).run()
    else:
        if t not in missing_colors(g, f, u0):
            raise PreconditionError("odd tail needs color t missing at its origin")
        a0 = max(g.vertices) + 1
        ea = max(g.edge_ids, default=-1) + 1
        big = Graph(g.vertices + (a0,), g.edges + ((ea, a0, u0),), g.multigraph)
        fb = EdgeColoring(t, {**f.as_dict(), ea: t})
        trail = Trail(tuple([a0] + wv + [a0]), tuple([ea] + we + [ea]))
        full = TrailRunner(big, fb, trail, q).run()
        cols = [h.restricted(g.edge_ids) for h in full]
    _check_flip(f, cols[-1], comp.edges, "cycle with tail")
    return _trace(g, cols, q)


def cutvertex_tail(g: Graph, f: EdgeColoring, comp: DiffComponent) -> tuple[list[int], list[int]]:
    """A tail for a cycle through a cutvertex.

    At the lowest cutvertex v0 on the cycle some color c0 < t is missing among
    the edges of the cycle's block but present in G; the maximal (c0, t)-path
    leaving v0 along that edge, reversed, is the tail.
    """
    t = f.t
    bd = block_decomposition(g)
    cut = sorted(x for x in comp.vertices if x in bd.cutvertices)
    if not cut:
        raise PreconditionError("cycle contains no cutvertex")
    v0 = cut[0]
    block = set(bd.blocks[bd.block_of_edge(comp.edges[0])])
    in_block = {f[e] for e in g.incident(v0) if e in block}
    c0 = min(c for c in range(1, t) if c not in in_block)
    first = next((e for e in g.incident(v0) if f[e] == c0), None)
    if first is None:
        raise PreconditionError(f"color {c0} is missing at cutvertex {v0}; the cycle has a low-degree vertex")
    verts, edges = [v0], []
    x, e = v0, first
    while e is not None:
        edges.append(e)
        x = g.other_end(e, x)
        if x in verts:
            raise InvariantViolation("the (c0, t)-path from the cutvertex returned to itself")
        verts.append(x)
        want = t if f[e] == c0 else c0
        e = next((d for d in g.incident(x) if d != e and f[d] == want), None)
    return verts[::-1], edges[::-1]


def transform_cycle_cutvertex(g: Graph, f: EdgeColoring, goal: EdgeColoring, comp: DiffComponent,
                              q: int) -> TransformationTrace:
    tv, te = cutvertex_tail(g, f, comp)
    return transform_cycle_with_tail(g, f, goal, comp, tv, te, q)


def assert_proper(g: Graph, f: EdgeColoring) -> None:
    bad = violations(g, f)
    if bad:
        raise PreconditionError(f"coloring is improper at {bad[:3]}")
