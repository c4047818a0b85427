"""Edge colorings: propriety, exact solving, Kempe chains, the difference graph
of two colorings and the correction primitive.

Improper colorings are ordinary values here.  Propriety is a checked
predicate, because the transformation engine manipulates improper scratch
colorings between its proper checkpoints.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import BudgetExceeded, GraphFormatError, HypothesisRefuted, PreconditionError
from .graph_core import Graph

DEFAULT_NODE_BUDGET = 10**7


class EdgeColoring:
    """A total map edge id -> color in ``1..t``.  Treated as immutable."""

    __slots__ = ("t", "_colors", "_key")

    def __init__(self, t: int, colors: Mapping[int, int]) -> None:
        if t < 1:
            raise PreconditionError("palette size must be positive")
        self.t = int(t)
        self._colors = dict(colors)
        for e, c in self._colors.items():
            if not 1 <= c <= self.t:
                raise GraphFormatError(f"edge {e} has color {c} outside 1..{self.t}")
        self._key: tuple | None = None

    def __getitem__(self, e: int) -> int:
        return self._colors[e]

    def __contains__(self, e: int) -> bool:
        return e in self._colors

    def __len__(self) -> int:
        return len(self._colors)

    def get(self, e: int, default: int | None = None) -> int | None:
        return self._colors.get(e, default)

    def items(self):
        return self._colors.items()

    def as_dict(self) -> dict[int, int]:
        return dict(self._colors)

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.t, tuple(sorted(self._colors.items())))
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeColoring) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"EdgeColoring(t={self.t}, {dict(sorted(self._colors.items()))})"

    def recolored(self, changes: Mapping[int, int]) -> EdgeColoring:
        colors = dict(self._colors)
        colors.update(changes)
        return EdgeColoring(self.t, colors)

    def restricted(self, edge_ids: Iterable[int], t: int | None = None) -> EdgeColoring:
        return EdgeColoring(self.t if t is None else t, {e: self._colors[e] for e in edge_ids})

    def color_class(self, j: int) -> frozenset[int]:
        """The edge set M(f, j)."""
        return frozenset(e for e, c in self._colors.items() if c == j)

    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {j: set() for j in range(1, self.t + 1)}
        for e, c in self._colors.items():
            out[c].add(e)
        return {j: frozenset(s) for j, s in out.items()}

    def check_total(self, g: Graph) -> None:
        missing = [e for e in g.edge_ids if e not in self._colors]
        extra = [e for e in self._colors if not g.has_edge_id(e)]
        if missing or extra:
            raise PreconditionError(
                f"coloring is not total on the graph (missing {missing[:5]}, extra {extra[:5]})"
            )

    # JSON: {"t":4,"colors":{"0":1,...}}
    def to_dict(self) -> dict:
        return {"t": self.t, "colors": {str(e): c for e, c in sorted(self._colors.items())}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> EdgeColoring:
        if not isinstance(data, Mapping) or set(data) != {"t", "colors"}:
            raise GraphFormatError("coloring JSON must have exactly the fields t and colors")
        t = data["t"]
        if isinstance(t, bool) or not isinstance(t, int):
            raise GraphFormatError("t must be an integer")
        colors = {}
        try:
            for k, c in data["colors"].items():
                if isinstance(c, bool) or not isinstance(c, int):
                    raise GraphFormatError(f"color of edge {k} is not an integer")
                colors[int(k)] = c
        except (AttributeError, ValueError) as exc:
            raise GraphFormatError(f"malformed colors map: {exc}") from None
        return cls(t, colors)

    @classmethod
    def from_json(cls, text: str) -> EdgeColoring:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None


# -- propriety ----------------------------------------------------------------


@dataclass(frozen=True)
class Propriety:
    ok: bool
    vertex: int | None = None
    color: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_proper(g: Graph, f: EdgeColoring) -> Propriety:
    """Check that no two edges at a vertex share a color.

    On failure reports the lowest-id violating vertex and its lowest repeated
    color.
    """
    f.check_total(g)
    for x in g.vertices:
        seen: set[int] = set()
        repeated = []
        for e in g.incident(x):
            c = f[e]
            if c in seen:
                repeated.append(c)
            seen.add(c)
        if repeated:
            return Propriety(False, x, min(repeated))
    return Propriety(True)


def violations(g: Graph, f: EdgeColoring, edge_ids: Iterable[int] | None = None) -> list[tuple[int, int]]:
    """All (vertex, color) pairs with two or more edges of that color at the vertex.

    With ``edge_ids`` only those edges are taken into account.
    """
    allowed = None if edge_ids is None else set(edge_ids)
    out = []
    for x in g.vertices:
        counts: dict[int, int] = {}
        for e in g.incident(x):
            if allowed is None or e in allowed:
                counts[f[e]] = counts.get(f[e], 0) + 1
        out += [(x, c) for c, k in sorted(counts.items()) if k > 1]
    return out


def missing_colors(g: Graph, f: EdgeColoring, x: int) -> set[int]:
    return set(range(1, f.t + 1)) - {f[e] for e in g.incident(x)}


def class_difference(f: EdgeColoring, h: EdgeColoring) -> set[int]:
    """Colors j with M(f, j) != M(h, j)."""
    if f.t != h.t:
        raise PreconditionError("colorings have different palettes")
    if set(e for e, _ in f.items()) != set(e for e, _ in h.items()):
        raise PreconditionError("colorings are defined on different edge sets")
    out: set[int] = set()
    for e, c in f.items():
        d = h[e]
        if c != d:
            out.add(c)
            out.add(d)
    return out


# -- backtracking core ----------------------------------------------------------


class ColoringSearch:
    """Iterative backtracking over a fixed edge order with forward checking.

    Used for existence (with color-symmetry breaking), lexicographically least
    solutions and full enumeration.  Only the edges in ``order`` are colored;
    callers guarantee that no other edge can conflict with the palette.
    """

    def __init__(self, g: Graph, order: list[int], palette: Iterable[int], budget: int | None):
        self.order = order
        self.palette = sorted(palette)
        self.budget = budget
        self.nodes = 0
        local = {}
        ends = []
        for e in order:
            u, v = g.endpoints(e)
            for x in (u, v):
                if x not in local:
                    local[x] = len(local)
            ends.append((local[u], local[v]))
        self.ends = ends
        self.nv = len(local)
        pos = {e: i for i, e in enumerate(order)}
        later: list[list[int]] = []
        for i, e in enumerate(order):
            u, v = g.endpoints(e)
            js = {pos[d] for x in (u, v) for d in g.incident(x) if d in pos and pos[d] > i}
            later.append(sorted(js))
        self.later = later
        self.pal_mask = 0
        for c in self.palette:
            self.pal_mask |= 1 << c

    def solutions(self, symmetric: bool = False) -> Iterator[list[int]]:
        """Yield color lists aligned with ``order``.

        ``symmetric`` restricts edge i to colors at most one above the largest
        color used so far, which is sound only when all palette colors are
        interchangeable and only existence matters.
        """
        n = len(self.order)
        if n == 0:
            yield []
            return
        pal = self.palette
        k = len(pal)
        rank = {c: r for r, c in enumerate(pal)}
        ends, later, pal_mask = self.ends, self.later, self.pal_mask
        used = [0] * self.nv
        assign = [0] * n
        top = [-1] * (n + 1)  # highest palette rank used among edges < i
        idx = [0] * n
        budget = self.budget
        i = 0
        while True:
            if i == n:
                yield list(assign)
                i -= 1
                u, v = ends[i]
                bit = ~(1 << assign[i])
                used[u] &= bit
                used[v] &= bit
                continue
            u, v = ends[i]
            forbidden = used[u] | used[v]
            limit = min(k, top[i] + 2) if symmetric else k
            placed = False
            while idx[i] < limit:
                c = pal[idx[i]]
                idx[i] += 1
                bit = 1 << c
                if forbidden & bit:
                    continue
                self.nodes += 1
                if budget is not None and self.nodes > budget:
                    raise BudgetExceeded(f"edge-coloring search exceeded {budget} nodes")
                used[u] |= bit
                used[v] |= bit
                ok = True
                for j in later[i]:
                    a, b = ends[j]
                    if (used[a] | used[b]) & pal_mask == pal_mask:
                        ok = False
                        break
                if not ok:
                    used[u] &= ~bit
                    used[v] &= ~bit
                    continue
                assign[i] = c
                placed = True
                break
            if placed:
                top[i + 1] = max(top[i], rank[assign[i]])
                i += 1
                if i < n:
                    idx[i] = 0
            else:
                i -= 1
                if i < 0:
                    return
                u, v = ends[i]
                bit = ~(1 << assign[i])
                used[u] &= bit
                used[v] &= bit


def connected_edge_order(g: Graph, edge_ids: Iterable[int]) -> list[int]:
    """Greedy static order: most already-ordered neighbours, then larger degree sum, then id."""
    remaining = set(edge_ids)
    degsum = {e: sum(g.degree(x) for x in g.endpoints(e)) for e in remaining}
    touched: dict[int, int] = {e: 0 for e in remaining}
    order = []
    while remaining:
        e = min(remaining, key=lambda d: (-touched[d], -degsum[d], d))
        remaining.remove(e)
        order.append(e)
        for x in g.endpoints(e):
            for d in g.incident(x):
                if d in remaining:
                    touched[d] += 1
    return order


def _edge_components(g: Graph, edge_ids: Iterable[int]) -> list[list[int]]:
    """Connected components of an edge set, each sorted, ordered by smallest id."""
    edges = sorted(set(edge_ids))
    parent = {e: e for e in edges}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    at_vertex: dict[int, int] = {}
    for e in edges:
        for x in g.endpoints(e):
            if x in at_vertex:
                ra, rb = find(e), find(at_vertex[x])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                at_vertex[x] = e
    groups: dict[int, list[int]] = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values(), key=lambda c: c[0])


# -- solving ------------------------------------------------------------------------


def find_proper_coloring(
    g: Graph,
    t: int,
    budget: int | None = DEFAULT_NODE_BUDGET,
    edge_ids: Iterable[int] | None = None,
) -> EdgeColoring | None:
    """A proper t-coloring of ``g`` (or of the given edge subset), or None if none exists.

    None is returned only after the search space is exhausted; running out of
    ``budget`` raises :class:`BudgetExceeded` instead.
    """
    edges = g.edge_ids if edge_ids is None else sorted(set(edge_ids))
    if t < 1:
        return None if edges else EdgeColoring(1, {})
    colors: dict[int, int] = {}
    spent = 0
    for comp in _edge_components(g, edges):
        search = ColoringSearch(g, connected_edge_order(g, comp), range(1, t + 1),
                         None if budget is None else budget - spent)
        sol = next(search.solutions(symmetric=True), None)
        spent += search.nodes
        if sol is None:
            return None
        colors.update(zip(search.order, sol))
    return EdgeColoring(max(t, 1), colors)


def chromatic_index(g: Graph, budget: int | None = DEFAULT_NODE_BUDGET) -> tuple[int, EdgeColoring]:
    """Exact chromatic index with a witness; tries t = Delta and then Delta + 1."""
    delta = g.max_degree
    if delta == 0:
        return 0, EdgeColoring(1, {})
    upper = delta + 1 if not g.multigraph else delta + max(
        (len(g.edges_between(u, v)) for _, u, v in g.edges), default=1)
    for t in range(delta, upper + 1):
        f = find_proper_coloring(g, t, budget)
        if f is not None:
            return t, f
    raise PreconditionError("no proper coloring within the Vizing bound")  # unreachable


def iter_proper_colorings(
    g: Graph, t: int, budget: int | None = None, edge_ids: Iterable[int] | None = None,
) -> Iterator[EdgeColoring]:
    """All proper t-colorings (labeled), lazily."""
    edges = g.edge_ids if edge_ids is None else sorted(set(edge_ids))
    search = ColoringSearch(g, connected_edge_order(g, edges), range(1, t + 1), budget)
    for sol in search.solutions():
        yield EdgeColoring(t, dict(zip(search.order, sol)))


def lex_least_coloring(
    g: Graph, edge_ids: Iterable[int], palette: Iterable[int], budget: int | None = DEFAULT_NODE_BUDGET,
) -> dict[int, int] | None:
    """Lexicographically least proper coloring of the edges (ascending id, ascending color)."""
    palette = sorted(palette)
    out: dict[int, int] = {}
    spent = 0
    for comp in _edge_components(g, edge_ids):
        search = ColoringSearch(g, comp, palette, None if budget is None else budget - spent)
        sol = next(search.solutions(), None)
        spent += search.nodes
        if sol is None:
            return None
        out.update(zip(comp, sol))
    return out


def correction(
    g: Graph, h: EdgeColoring, colors: Iterable[int], budget: int | None = DEFAULT_NODE_BUDGET,
) -> EdgeColoring:
    """Recolor the edges whose color lies in ``colors`` so that they form a proper coloring.

    Edges with other colors are never touched.  If the edges colored from the
    set are already proper the input is returned unchanged; otherwise the
    lexicographically least proper recoloring is used.  Raises
    :class:`HypothesisRefuted` (witness: the offending edge set) when no
    proper recoloring exists.
    """
    q = set(colors)
    d_edges = [e for e in g.edge_ids if h[e] in q]
    if not violations(g, h, d_edges):
        return h
    sol = lex_least_coloring(g, d_edges, q, budget)
    if sol is None:
        raise HypothesisRefuted(
            f"edges colored from {sorted(q)} admit no proper {len(q)}-coloring",
            witness=frozenset(d_edges),
        )
    return h.recolored(sol)


# -- Kempe chains ------------------------------------------------------------------


@dataclass(frozen=True)
class KempeChain:
    colors: tuple[int, int]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    closed: bool

    @property
    def is_trivial(self) -> bool:
        return not self.edges


def _color_edge_at(g: Graph, f: EdgeColoring, x: int, c: int, skip: int | None = None) -> int | None:
    found = None
    for e in g.incident(x):
        if e != skip and f[e] == c:
            if found is not None:
                raise PreconditionError(f"color {c} appears twice at vertex {x}")
            found = e
    return found


def _half_walk(g: Graph, f: EdgeColoring, start: int, first: int, c: int, d: int,
               ) -> tuple[list[int], list[int], bool]:
    verts, edges = [], []
    x, e = start, first
    while e is not None:
        edges.append(e)
        x = g.other_end(e, x)
        if x == start:
            return verts, edges, True
        verts.append(x)
        nxt = d if f[e] == c else c
        e = _color_edge_at(g, f, x, nxt, skip=e)
    return verts, edges, False


def kempe_chain(g: Graph, f: EdgeColoring, x: int, c: int, d: int) -> KempeChain:
    """The maximal (c, d)-colored path or cycle through vertex ``x``.

    A path is listed from the end reached through the d-edge at ``x`` towards
    the end reached through the c-edge; a cycle starts at ``x`` along its
    c-edge.  Only colors c and d need to be proper at the visited vertices.
    """
    if c == d:
        raise PreconditionError("a Kempe chain needs two distinct colors")
    ec = _color_edge_at(g, f, x, c)
    ed = _color_edge_at(g, f, x, d)
    if ec is None and ed is None:
        return KempeChain((c, d), (x,), (), False)
    if ec is not None:
        vc, es_c, closed = _half_walk(g, f, x, ec, c, d)
        if closed:
            return KempeChain((c, d), (x, *vc), tuple(es_c), True)
    else:
        vc, es_c = [], []
    if ed is not None:
        vd, es_d, _ = _half_walk(g, f, x, ed, c, d)
    else:
        vd, es_d = [], []
    verts = list(reversed(vd)) + [x] + vc
    edges = list(reversed(es_d)) + es_c
    return KempeChain((c, d), tuple(verts), tuple(edges), False)


def kempe_interchange(g: Graph, f: EdgeColoring, chain: KempeChain) -> EdgeColoring:
    """Swap the two colors along a maximal chain."""
    c, d = chain.colors
    if chain.edges:
        again = kempe_chain(g, f, chain.vertices[0], c, d)
        if set(again.edges) != set(chain.edges):
            raise PreconditionError("chain is not a maximal (c, d)-chain of this coloring")
    elif _color_edge_at(g, f, chain.vertices[0], c) or _color_edge_at(g, f, chain.vertices[0], d):
        raise PreconditionError("trivial chain at a vertex where a chain color appears")
    return f.recolored({e: (d if f[e] == c else c) for e in chain.edges})


# -- difference graph -------------------------------------------------------------


@dataclass(frozen=True)
class DiffComponent:
    kind: str  # "path-even" | "path-odd" | "cycle"
    vertices: tuple[int, ...]  # for a cycle the first vertex is not repeated at the end
    edges: tuple[int, ...]

    @property
    def is_path(self) -> bool:
        return self.kind != "cycle"


@dataclass(frozen=True)
class DifferenceGraph:
    t: int
    edges: frozenset[int]
    display: dict[int, int]  # edge -> color under the first coloring
    components: tuple[DiffComponent, ...]


def difference_graph(g: Graph, f: EdgeColoring, h: EdgeColoring, t: int | None = None) -> DifferenceGraph:
    """The colored subgraph on M(f,t) symmetric-difference M(h,t), split into paths and cycles.

    Components are ordered by smallest edge id.  Paths run from their
    lower-id endpoint; cycles start at their lowest vertex, continuing along
    its lower-id incident edge.
    """
    if f.t != h.t:
        raise PreconditionError("palette mismatch")
    t = f.t if t is None else t
    diff = f.color_class(t) ^ h.color_class(t)
    inc: dict[int, list[int]] = {}
    for e in sorted(diff):
        for x in g.endpoints(e):
            inc.setdefault(x, []).append(e)
    if any(len(es) > 2 for es in inc.values()):
        raise PreconditionError("difference graph has a vertex of degree > 2 (improper input)")
    seen: set[int] = set()
    comps = []
    for e0 in sorted(diff):
        if e0 in seen:
            continue
        # collect the component
        stack, comp = [e0], set()
        while stack:
            e = stack.pop()
            if e in comp:
                continue
            comp.add(e)
            for x in g.endpoints(e):
                stack.extend(d for d in inc[x] if d not in comp)
        seen |= comp
        cverts = {x for e in comp for x in g.endpoints(e)}
        ends = sorted(x for x in cverts if len(inc[x]) == 1)
        if ends:
            start = ends[0]
        else:
            start = min(cverts)
        verts, edges = [start], []
        x = start
        prev = None
        while True:
            nxt = [d for d in inc[x] if d != prev and d not in edges]
            if not nxt:
                break
            e = min(nxt)
            y = g.other_end(e, x)
            edges.append(e)
            if y == start:
                break
            verts.append(y)
            prev, x = e, y
        if ends:
            kind = "path-even" if len(edges) % 2 == 0 else "path-odd"
        else:
            kind = "cycle"
        comps.append(DiffComponent(kind, tuple(verts), tuple(edges)))
    comps.sort(key=lambda c: min(c.edges))
    return DifferenceGraph(t, frozenset(diff), {e: f[e] for e in diff}, tuple(comps))
