"""Growing a cycle by two-colored ears until a vertex of low degree shows up.

Start from a t-alternating cycle C whose vertices all have degree t.  Every
vertex of the growing subgraph H keeps its t-edge inside H, so an edge e
leaving H has some color c < t, and the maximal (c, t)-path from e either
returns to H (an ear) or stops at a vertex missing one of the two colors,
which therefore has degree below t.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..edge_coloring import DiffComponent, EdgeColoring
from ..errors import InvariantViolation, PreconditionError
from ..graph_core import Graph


@dataclass(frozen=True)
class Ear:
    color: int
    vertices: tuple[int, ...]  # both ends already in the subgraph
    edges: tuple[int, ...]


@dataclass
class EarSubgraph:
    cycle: DiffComponent
    ears: list[Ear] = field(default_factory=list)
    # the low-degree vertex: inside H (case "inside") or at the end of ``exit_path``
    low_vertex: int | None = None
    case: str = ""
    exit_path: Ear | None = None  # starts in H, ends at low_vertex outside H

    @property
    def vertices(self) -> set[int]:
        out = set(self.cycle.vertices)
        for ear in self.ears:
            out.update(ear.vertices)
        return out

    @property
    def edges(self) -> set[int]:
        out = set(self.cycle.edges)
        for ear in self.ears:
            out.update(ear.edges)
        return out

    def validate(self, g: Graph, f: EdgeColoring) -> None:
        t = f.t
        seen_v = set(self.cycle.vertices)
        for ear in self.ears + ([self.exit_path] if self.exit_path else []):
            vs, es = ear.vertices, ear.edges
            if vs[0] not in seen_v:
                raise InvariantViolation("ear does not start in the subgraph")
            inner = vs[1:-1] if ear is not self.exit_path else vs[1:]
            if any(x in seen_v for x in inner):
                raise InvariantViolation("ear interior meets the subgraph")
            if ear is not self.exit_path and vs[-1] not in seen_v:
                raise InvariantViolation("ear does not end in the subgraph")
            for k, e in enumerate(es):
                want = ear.color if k % 2 == 0 else t
                if f[e] != want or set(g.endpoints(e)) != {vs[k], vs[k + 1]}:
                    raise InvariantViolation("ear is not a (c, t)-alternating path")
            if ear is not self.exit_path:
                seen_v.update(vs)


def find_ear_subgraph(g: Graph, f: EdgeColoring, cycle: DiffComponent) -> EarSubgraph:
    """Grow ears greedily (lowest vertex, then lowest edge) until a vertex of
    degree below t is found inside the subgraph or at the end of an exit path.

    Raises :class:`PreconditionError` when the whole component is t-regular.
    """
    t = f.t
    if any(g.degree(x) < t for x in cycle.vertices):
        raise PreconditionError("cycle already has a vertex of degree below t")
    out = EarSubgraph(cycle)
    hv, he = set(cycle.vertices), set(cycle.edges)
    while True:
        grown = False
        for v in sorted(hv):
            for e in g.incident(v):
                if e in he:
                    continue
                c = f[e]
                if c == t:
                    raise InvariantViolation(f"vertex {v} of the subgraph has its t-edge outside")
                verts, edges = [v], []
                x, cur = v, e
                while True:
                    edges.append(cur)
                    x = g.other_end(cur, x)
                    if x in verts:
                        raise InvariantViolation("two-colored path revisits a vertex")
                    verts.append(x)
                    if x in hv:
                        break
                    want = t if f[cur] == c else c
                    cur = next((d for d in g.incident(x) if d != cur and f[d] == want), None)
                    if cur is None:
                        out.exit_path = Ear(c, tuple(verts), tuple(edges))
                        out.low_vertex = x
                        out.case = "exit"
                        return out
                ear = Ear(c, tuple(verts), tuple(edges))
                out.ears.append(ear)
                hv.update(verts)
                he.update(edges)
                low = sorted(y for y in verts[1:-1] if g.degree(y) < t)
                if low:
                    out.low_vertex = low[0]
                    out.case = "inside"
                    return out
                grown = True
                break
            if grown:
                break
        if not grown:
            raise PreconditionError("the component of the cycle is t-regular; no low-degree vertex to start from")


def find_alternating_Cv_path(g: Graph, f: EdgeColoring, sub: EarSubgraph, v: int
                             ) -> tuple[list[int], list[int]]:
    """A t-alternating path from a cycle vertex to ``v`` inside the ear subgraph,
    ending with the t-edge at ``v`` and starting with a non-t edge."""
    t = f.t
    if v in sub.cycle.vertices:
        return [v], []
    for k, ear in enumerate(sub.ears):
        if v in ear.vertices[1:-1]:
            break
    else:
        raise PreconditionError(f"vertex {v} is not inside any ear")
    i = ear.vertices.index(v)
    # the half of the ear holding v's t-edge
    if f[ear.edges[i - 1]] == t:
        verts, edges = list(ear.vertices[: i + 1]), list(ear.edges[:i])
    else:
        verts, edges = list(ear.vertices[i:])[::-1], list(ear.edges[i:])[::-1]
    z = verts[0]
    if z in sub.cycle.vertices:
        return verts, edges
    qv, qe = find_alternating_Cv_path(g, f, EarSubgraph(sub.cycle, sub.ears[:k]), z)
    return qv + verts[1:], qe + edges


def tail_from_ears(g: Graph, f: EdgeColoring, sub: EarSubgraph) -> tuple[list[int], list[int]]:
    """Tail path for the cycle: origin at the low-degree vertex, end on the cycle."""
    if sub.case == "inside":
        vs, es = find_alternating_Cv_path(g, f, sub, sub.low_vertex)
    elif sub.case == "exit":
        y = sub.exit_path.vertices[0]
        qv, qe = find_alternating_Cv_path(g, f, sub, y)
        vs = qv + list(sub.exit_path.vertices[1:])
        es = qe + list(sub.exit_path.edges)
    else:
        raise PreconditionError("ear subgraph has no low-degree vertex")
    return vs[::-1], es[::-1]
