"""Graph families with fixed, documented id layouts.

Layouts:

* ``wheel(n)``: hub 0, rim 1..n; spoke 0-i has id i-1, rim edge i-(i+1) has id
  n+i-1 (the closing edge n-1 has id 2n-1).
* ``build_H(p, n)``: vertex block V_i = {(i-1)p, ..., ip-1} for i = 1..2n.
* ``build_F_G``: original vertices keep their ids; gadget i (for the i-th edge
  in ascending id order) occupies ``base + 2ti .. base + 2ti + 2t - 1`` with
  u_e(s) first and v_e(l) after, where ``base = max vertex + 1``.
* ``glued_family``: grid vertices first (row-major), then the witness.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from .edge_coloring import EdgeColoring, chromatic_index, find_proper_coloring, is_proper
from .errors import InvariantViolation, PreconditionError
from .graph_core import Graph
from .recognizers import ClassCertificate

# -- standard graphs --------------------------------------------------------------


def path(n: int) -> Graph:
    return Graph.from_pairs([(i, i + 1) for i in range(n - 1)], vertices=n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a simple cycle needs at least 3 vertices")
    return Graph.from_pairs([(i, (i + 1) % n) for i in range(n)], vertices=n)


def complete(n: int) -> Graph:
    return Graph.from_pairs(itertools.combinations(range(n), 2), vertices=n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_pairs([(i, a + j) for i in range(a) for j in range(b)], vertices=a + b)


def star(k: int) -> Graph:
    return Graph.from_pairs([(0, i) for i in range(1, k + 1)], vertices=k + 1)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_pairs(outer + spokes + inner, vertices=10)


def cube() -> Graph:
    """The 3-cube Q3 on vertices 0..7 (adjacent iff ids differ in one bit)."""
    return Graph.from_pairs([(a, a ^ (1 << k)) for a in range(8) for k in range(3) if a < a ^ (1 << k)],
                            vertices=8)


def prism(n: int = 3) -> Graph:
    """C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1."""
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + 1) % n) for i in range(n)]
    return Graph.from_pairs(outer + inner + [(i, n + i) for i in range(n)], vertices=2 * n)


def grid(rows: int, cols: int) -> Graph:
    """Row-major vertex ids r * cols + c."""
    pairs = []
    for r in range(rows):
        for c in range(cols):
            x = r * cols + c
            if c + 1 < cols:
                pairs.append((x, x + 1))
            if r + 1 < rows:
                pairs.append((x, x + cols))
    return Graph.from_pairs(pairs, vertices=rows * cols)


def parallel_edges(k: int) -> Graph:
    """Two vertices joined by k parallel edges."""
    return Graph.from_pairs([(0, 1)] * k, vertices=2, multigraph=True)


# -- wheels -----------------------------------------------------------------------------


def wheel(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a wheel needs a rim of at least 3 vertices")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph.from_pairs(spokes + rim, vertices=n + 1)


def wheel_edge(n: int, a: int, b: int) -> int:
    """Edge id of v_a v_b in ``wheel(n)``."""
    a, b = min(a, b), max(a, b)
    if a == 0:
        return b - 1
    if b == a + 1:
        return n + a - 1
    if (a, b) == (1, n):
        return 2 * n - 1
    raise PreconditionError(f"v{a}v{b} is not an edge of W_{n}")


def wheel_formula_coloring(n: int, s: int) -> dict[int, int]:
    """Closed-form 3-coloring of the rim plus the spokes to v1, v2, vs.

    Returned verbatim with no repair, so callers must check propriety.
    Case 1 is s = 3, case 2 is 3 < s < n.
    """
    if n < 5 or not 3 <= s < n:
        raise PreconditionError("formula needs n >= 5 and 3 <= s < n")
    e = lambda a, b: wheel_edge(n, a, b)  # noqa: E731
    f: dict[int, int] = {e(0, 1): 1, e(0, 2): 2, e(0, s): 3, e(1, 2): 3}
    if n % 2 == 1:
        k = (n - 1) // 2
        f[e(1, n)] = 2 if s == 3 else 3
        for i in range(1, k + 1):
            f[e(2 * i, 2 * i + 1)] = 1
        for i in range(1, k):
            f[e(2 * i + 1, 2 * i + 2)] = 2
    else:
        k = n // 2
        f[e(1, n)] = 2
        f[e(n - 1, n)] = 3
        for i in range(1, k):
            f[e(2 * i, 2 * i + 1)] = 1
        for i in range(2, k):
            f[e(2 * i - 1, 2 * i)] = 2
    return f


@dataclass(frozen=True)
class WheelColoring:
    coloring: EdgeColoring
    formula_status: str  # "consistent" | "inconsistent" | "not_applicable"


def wheel_subgraph_3coloring(n: int, edge_ids: Sequence[int]) -> WheelColoring:
    """A proper 3-coloring of the subgraph of W_n on ``edge_ids`` (max degree <= 3).

    Found by the solver.  When the subgraph is the full rim plus three spokes
    in the normal form v1, v2, vs, the closed form is evaluated as well
    and its status reported.
    """
    w = wheel(n)
    h = w.edge_subgraph(edge_ids)
    if h.max_degree > 3:
        raise PreconditionError("subgraph has a vertex of degree above 3")
    f = find_proper_coloring(h, 3)
    if f is None:
        raise InvariantViolation(f"a subgraph of W_{n} with max degree 3 has no proper 3-coloring")
    status = "not_applicable"
    spokes = sorted(b for e in edge_ids for a, b in [w.endpoints(e)] if a == 0)
    rim = {wheel_edge(n, i, i % n + 1) for i in range(1, n + 1)}
    if n >= 5 and len(spokes) == 3 and spokes[:2] == [1, 2] and rim <= set(edge_ids) and spokes[2] < n:
        formula = wheel_formula_coloring(n, spokes[2])
        if set(formula) == set(h.edge_ids):
            ok = is_proper(h, EdgeColoring(3, formula)).ok
            status = "consistent" if ok else "inconsistent"
    return WheelColoring(f, status)


# -- Halin graphs ------------------------------------------------------------------------------


def _dfs_leaf_order(tree: Graph) -> list[int]:
    root = min((x for x in tree.vertices if tree.degree(x) > 1), default=tree.vertices[0])
    order, stack, seen = [], [root], {root}
    while stack:
        x = stack.pop()
        if tree.degree(x) == 1:
            order.append(x)
        for y in sorted(tree.neighbors(x), reverse=True):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return order


def halin(tree: Graph, leaf_order: Sequence[int] | None = None) -> tuple[Graph, ClassCertificate]:
    """Tree plus the cycle through its leaves in the given planar cyclic order.

    Without ``leaf_order`` the leaves are taken in depth-first order with
    children visited by ascending id, which is planar for that embedding.
    Tree edges keep their ids; cycle edges follow.
    """
    if tree.num_vertices < 4:
        raise PreconditionError("a Halin graph needs a tree on at least 4 vertices")
    if tree.num_edges != tree.num_vertices - 1 or tree.multigraph:
        raise PreconditionError("input is not a tree")
    if any(tree.degree(x) == 2 for x in tree.vertices):
        raise PreconditionError("the tree has a vertex of degree 2")
    leaves = [x for x in tree.vertices if tree.degree(x) == 1]
    order = list(leaf_order) if leaf_order is not None else _dfs_leaf_order(tree)
    if sorted(order) != sorted(leaves):
        raise PreconditionError("leaf order must list every leaf once")
    base = max(tree.edge_ids) + 1
    cyc = [(base + i, order[i], order[(i + 1) % len(order)]) for i in range(len(order))]
    g = Graph(tree.vertices, tree.edges + tuple(cyc))
    cert = ClassCertificate("halin_constructed", {"tree_edges": list(tree.edge_ids), "leaf_order": order})
    return g, cert


# -- the Class-1 gadget --------------------------------------------------------------------------


@dataclass(frozen=True)
class GadgetMap:
    t: int
    original_vertices: tuple[int, ...]
    # original edge id -> (pendant at its u end, pendant at its v end)
    pendants: dict[int, tuple[int, int]]
    # original edge id -> (u_e(0..t-1), v_e(0..t-1))
    gadget_vertices: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]
    # original edge id -> {(s, l): edge id of u_e(s) v_e(l)}
    inner_edges: dict[int, dict[tuple[int, int], int]]

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "pendants": {str(e): list(p) for e, p in sorted(self.pendants.items())},
            "gadget_vertices": {str(e): [list(u), list(v)] for e, (u, v) in sorted(self.gadget_vertices.items())},
        }


def build_F_G(g: Graph, t: int | None = None) -> tuple[Graph, GadgetMap]:
    """The simple graph replacing every edge u_i v_i by a K_{t,t} minus one edge.

    u_i is joined to v_e(0) and v_i to u_e(0); then F_G has maximum degree t and
    every proper t-coloring gives both pendants of a gadget the same color.
    With ``t`` omitted the chromatic index of ``g`` is computed.
    """
    if t is None:
        t = chromatic_index(g)[0]
    if t < 2:
        raise PreconditionError("the gadget needs t >= 2")
    base = max(g.vertices, default=-1) + 1
    verts = list(g.vertices)
    edges: list[tuple[int, int, int]] = []
    pendants, gverts, inner = {}, {}, {}
    for i, (e, a, b) in enumerate(g.edges):
        off = base + 2 * t * i
        us = tuple(range(off, off + t))
        vs = tuple(range(off + t, off + 2 * t))
        verts += us + vs
        p1, p2 = len(edges), len(edges) + 1
        edges += [(p1, a, vs[0]), (p2, b, us[0])]
        pendants[e] = (p1, p2)
        gverts[e] = (us, vs)
        ids = {}
        for s in range(t):
            for l in range(t):
                if (s, l) != (0, 0):
                    ids[(s, l)] = len(edges)
                    edges.append((len(edges), us[s], vs[l]))
        inner[e] = ids
    return Graph(tuple(verts), tuple(edges)), GadgetMap(t, g.vertices, pendants, gverts, inner)


def lift_coloring(f: EdgeColoring, gmap: GadgetMap) -> EdgeColoring:
    """Extend a proper t-coloring of G to F_G: u_e(s) v_e(l) gets ((s+l+c-1) mod t) + 1."""
    t = gmap.t
    if f.t != t:
        raise PreconditionError("palette differs from the gadget's t")
    out: dict[int, int] = {}
    for e, (p1, p2) in gmap.pendants.items():
        c = f[e]
        out[p1] = out[p2] = c
        for (s, l), eid in gmap.inner_edges[e].items():
            out[eid] = (s + l + c - 1) % t + 1
    return EdgeColoring(t, out)


def project_coloring(fp: EdgeColoring, gmap: GadgetMap) -> EdgeColoring:
    """Read f(e_i) off the pendant at u_i, after checking that both pendants agree."""
    out = {}
    for e, (p1, p2) in gmap.pendants.items():
        if fp[p1] != fp[p2]:
            raise InvariantViolation(f"pendant pair of edge {e} has colors {fp[p1]} and {fp[p2]}")
        out[e] = fp[p1]
    return EdgeColoring(gmap.t, out)


# -- H(p, n) ------------------------------------------------------------------------------------


def build_H(p: int, n: int) -> Graph:
    """Vertices in 2n blocks of size p, cyclically; two vertices are adjacent iff they
    lie in one block or in two cyclically consecutive blocks."""
    if p < 1 or n < 3:
        raise PreconditionError("need p >= 1 and n >= 3")
    blocks = [list(range(i * p, (i + 1) * p)) for i in range(2 * n)]
    pairs = set()
    for i in range(2 * n):
        union = blocks[i] + blocks[(i + 1) % (2 * n)]
        for a, b in itertools.combinations(union, 2):
            pairs.add((min(a, b), max(a, b)))
    return Graph.from_pairs(sorted(pairs), vertices=2 * p * n)


def H_blocks(p: int, n: int) -> list[list[int]]:
    """V_1..V_{2n} as vertex lists."""
    return [list(range(i * p, (i + 1) * p)) for i in range(2 * n)]


# -- gluing ----------------------------------------------------------------------------------------


def glue_at(host: Graph, host_vertex: int, guest: Graph, guest_vertex: int) -> Graph:
    """Disjoint union with ``guest_vertex`` identified with ``host_vertex``.

    Guest vertices and edges are shifted above the host's ids.
    """
    vshift = max(host.vertices) + 1
    eshift = max(host.edge_ids, default=-1) + 1
    others = [x for x in guest.vertices if x != guest_vertex]
    vmap = {x: vshift + i for i, x in enumerate(others)}
    vmap[guest_vertex] = host_vertex
    verts = host.vertices + tuple(vmap[x] for x in others)
    edges = host.edges + tuple((eshift + i, vmap[u], vmap[v]) for i, (_, u, v) in enumerate(guest.edges))
    return Graph(verts, edges, host.multigraph or guest.multigraph)


def _degree2(g: Graph) -> list[int]:
    return [x for x in g.vertices if g.degree(x) == 2]


def glued_family(rows: int, cols: int, witness: Graph) -> Graph:
    """A rows x cols grid with the witness glued at a degree-2 vertex (grid corner 0,
    witness's lowest-id degree-2 vertex)."""
    if rows < 3 or cols < 3:
        raise PreconditionError("grid must be at least 3 x 3")
    d2 = _degree2(witness)
    if not d2:
        raise PreconditionError("witness has no vertex of degree 2")
    return glue_at(grid(rows, cols), 0, witness, d2[0])


def chained_family(witness: Graph, k: int) -> Graph:
    """H_0 = witness; H_{j+1} glues a fresh copy onto the highest-id degree-2 vertex of H_j."""
    d2 = _degree2(witness)
    if not d2:
        raise PreconditionError("witness has no vertex of degree 2")
    h = witness
    for _ in range(k):
        h = glue_at(h, _degree2(h)[-1], witness, d2[0])
    return h

