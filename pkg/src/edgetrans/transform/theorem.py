"""Top-level transformation between two proper Δ-colorings.

Level by level from t = Δ downwards: make the t-classes agree by flipping
one component of the difference graph at a time (each move strictly raises
the number of shared t-edges, or on non-regular bipartite graphs may instead
drop a surplus t-edge), then drop that class and recurse with t - 1.
Below q + 2 colors a single step finishes.  Bipartite inputs use q = 2.  The result is

    f -> ... -> f*  (t-classes agree)  -> lifted recursion ->  g* -> ... -> goal
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from ..edge_coloring import DiffComponent, EdgeColoring, difference_graph, violations
from ..errors import HypothesisRefuted, InvariantViolation, PreconditionError
from ..graph_core import Graph, block_decomposition, connected_components, degeneracy
from ..recognizers import block_graphs, in_A_q, is_bipartite
from ..trace import TransformationTrace
from .bipartite import improve_toward, progress
from .ears import find_ear_subgraph, tail_from_ears
from .lemmas import (
    cycle_colors,
    transform_cycle_cutvertex,
    transform_cycle_simple,
    transform_cycle_with_tail,
    transform_even_path,
    transform_odd_path,
)


@dataclass(frozen=True)
class Move:
    level: int
    kind: str
    handler: str
    steps: int


@dataclass
class TransformReport:
    trace: TransformationTrace
    mode: str  # "lemmas" | "bipartite" | "trivial"
    moves: list[Move] = field(default_factory=list)


def check_inputs(g: Graph, f: EdgeColoring, goal: EdgeColoring, q: int,
                 hints: Iterable[str] = (), certify: bool = True) -> str:
    """Validate the colorings and the graph class; return the engine mode."""
    f.check_total(g)
    goal.check_total(g)
    if f.t != goal.t:
        raise PreconditionError("colorings use different palettes")
    for name, h in (("start", f), ("goal", goal)):
        bad = violations(g, h)
        if bad:
            raise PreconditionError(f"{name} coloring is improper at vertex {bad[0][0]}")
    if g.num_edges == 0:
        return "trivial"
    if f.t != g.max_degree:
        raise PreconditionError(f"palette {f.t} differs from the maximum degree {g.max_degree}")
    if is_bipartite(g):
        return "bipartite"
    if g.multigraph:
        raise PreconditionError("non-bipartite multigraphs are not supported")
    if q < 3:
        raise PreconditionError("q must be at least 3")
    if certify:
        for b in block_graphs(g):
            if is_bipartite(b):
                continue
            if degeneracy(b) > q + 1:
                raise PreconditionError(f"a block is not {q + 1}-degenerate")
            verdict = in_A_q(b, q, hints=hints)
            if not verdict.member:
                raise HypothesisRefuted(f"a block is not in A({q})", witness=verdict.witness)
    return "lemmas"


def _choose(components: tuple[DiffComponent, ...]) -> DiffComponent:
    return min(components, key=lambda c: (not c.is_path, min(c.edges)))


def _component_of(g: Graph, x: int) -> Graph:
    comp = next(vs for vs in connected_components(g) if x in vs)
    keep = set(comp)
    return g.edge_subgraph((e for e, u, _ in g.edges if u in keep), keep_vertices=False)


def _improve_on_component(g: Graph, f: EdgeColoring, goal: EdgeColoring, x: int, t: int
                          ) -> list[EdgeColoring]:
    sub = _component_of(g, x)
    ids = sub.edge_ids
    tr = improve_toward(sub, f.restricted(ids), goal.restricted(ids), 3, t=t)
    return [f.recolored(h.as_dict()) for h in tr.colorings]


class _Engine:
    def __init__(self, q: int, mode: str) -> None:
        self.q = q
        self.mode = mode
        self.moves: list[Move] = []

    def base_width(self) -> int:
        return self.q + 1

    def step(self, g: Graph, fc: EdgeColoring, gc: EdgeColoring, t: int
             ) -> tuple[list[EdgeColoring], list[EdgeColoring]]:
        """One improving move: (colorings from fc, colorings from gc)."""
        q = self.q
        comp = _choose(difference_graph(g, fc, gc, t).components)
        if comp.kind == "path-even":
            tr = transform_even_path(g, fc, gc, comp, q)
            return self._log(t, comp, "even_path", tr.colorings), [gc]
        if comp.kind == "path-odd":
            tf, tg = transform_odd_path(g, fc, gc, comp, q)
            self._log(t, comp, "odd_path", tf.colorings + tg.colorings[1:])
            return tf.colorings, tg.colorings
        if len(cycle_colors(fc, comp)) <= q + 1 or any(g.degree(x) < t for x in comp.vertices):
            tr = transform_cycle_simple(g, fc, gc, comp, q)
            return self._log(t, comp, "cycle_simple", tr.colorings), [gc]
        bd = block_decomposition(g)
        if any(x in bd.cutvertices for x in comp.vertices):
            tr = transform_cycle_cutvertex(g, fc, gc, comp, q)
            return self._log(t, comp, "cycle_cutvertex", tr.colorings), [gc]
        block = g.edge_subgraph(bd.blocks[bd.block_of_edge(comp.edges[0])], keep_vertices=False)
        if is_bipartite(block) and block.is_regular() and block.max_degree == t:
            cols = _improve_on_component(g, fc, gc, comp.vertices[0], t)
            return self._log(t, comp, "improve_toward", cols), [gc]
        sub = find_ear_subgraph(g, fc, comp)
        sub.validate(g, fc)
        tv, te = tail_from_ears(g, fc, sub)
        tr = transform_cycle_with_tail(g, fc, gc, comp, tv, te, q)
        return self._log(t, comp, f"cycle_with_tail ({sub.case}, {len(sub.ears)} ears)", tr.colorings), [gc]

    def _log(self, t: int, comp: DiffComponent, handler: str, cols: list[EdgeColoring]
             ) -> list[EdgeColoring]:
        self.moves.append(Move(t, comp.kind, handler, max(len(cols) - 1, 0)))
        return cols

    def solve(self, g: Graph, f: EdgeColoring, goal: EdgeColoring) -> list[EdgeColoring]:
        t = f.t
        if f == goal:
            return [f]
        if t <= self.base_width() or g.num_edges == 0:
            self.moves.append(Move(t, "base", "direct", 1))
            return [f, goal]
        a, b = [f], [goal]
        while a[-1].color_class(t) != b[-1].color_class(t):
            before = progress(a[-1], b[-1], t)
            fa, fb = self.step(g, a[-1], b[-1], t)
            a += fa[1:]
            b += fb[1:]
            if progress(a[-1], b[-1], t) <= before:
                raise InvariantViolation(f"move at level {t} made no progress on class t")
        fstar, gstar = a[-1], b[-1]
        tclass = fstar.color_class(t)
        sub = g.without_edges(tclass)
        down = lambda h: EdgeColoring(t - 1, {e: h[e] for e in sub.edge_ids})  # noqa: E731
        mid = self.solve(sub, down(fstar), down(gstar))
        lift = [EdgeColoring(t, {**h.as_dict(), **{e: t for e in tclass}}) for h in mid]
        return a + lift[1:] + b[::-1][1:]


def transform_report(g: Graph, f: EdgeColoring, goal: EdgeColoring, q: int = 3,
                     hints: Iterable[str] = (), certify: bool = True) -> TransformReport:
    mode = check_inputs(g, f, goal, q, hints, certify)
    eng = _Engine(2 if mode == "bipartite" else q, mode)
    cols = [f] if mode == "trivial" else eng.solve(g, f, goal)
    trace = TransformationTrace(g, cols, width=eng.base_width())
    trace.check()
    if trace.first != f or trace.last != goal:
        raise InvariantViolation("trace does not connect the two colorings")
    return TransformReport(trace, mode, eng.moves)


def transform(g: Graph, f: EdgeColoring, goal: EdgeColoring, q: int = 3,
              hints: Iterable[str] = (), certify: bool = True) -> TransformationTrace:
    """A trace from f to goal; every step changes at most q + 1 classes.

    Bipartite graphs (multigraphs included) run the same moves with two-color
    corrections, so their steps change at most 3 classes.
    """
    return transform_report(g, f, goal, q, hints, certify).trace
