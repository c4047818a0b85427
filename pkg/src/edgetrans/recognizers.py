"""Graph-class recognizers and certificates for the classes A(q).

A(q) is the class of graphs in which every subgraph of maximum degree at
most q has a proper q-edge-coloring.  Membership is closed under gluing
blocks at cutvertices, so certificates are issued block by block.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx

from .edge_coloring import DEFAULT_NODE_BUDGET, find_proper_coloring
from .errors import BudgetExceeded, PreconditionError
from .graph_core import Graph, block_decomposition, connected_components, girth

# -- bipartite ------------------------------------------------------------------------


@dataclass(frozen=True)
class BipartiteVerdict:
    ok: bool
    sides: dict[int, int] | None = None  # vertex -> 0/1
    odd_cycle: tuple[int, ...] | None = None  # closed walk, first vertex not repeated

    def __bool__(self) -> bool:
        return self.ok


def is_bipartite(g: Graph) -> BipartiteVerdict:
    side: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return BipartiteVerdict(False, odd_cycle=_odd_cycle(parent, x, y))
    return BipartiteVerdict(True, sides=side)


def _odd_cycle(parent: dict[int, int | None], x: int, y: int) -> tuple[int, ...]:
    def root_path(a: int) -> list[int]:
        out = [a]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    px, py = root_path(x), root_path(y)
    common = set(px) & set(py)
    lca = next(a for a in px if a in common)
    left = px[: px.index(lca) + 1]
    right = py[: py.index(lca)]
    return tuple(left + list(reversed(right)))


# -- chordless ----------------------------------------------------------------------


def _connected_without(adj: dict[int, set[int]], u: int, v: int, banned: int | None) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for y in adj[x]:
            if y != banned and y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def is_chordless(g: Graph) -> bool:
    """No edge uv is a chord of a cycle.

    Equivalently, for every adjacent pair u, v the graph without the u-v
    edges has no two internally disjoint u-v paths (Menger: connected and
    no single separating vertex).
    """
    adj = {x: set(g.neighbors(x)) for x in g.vertices}
    for u, v in {(min(a, b), max(a, b)) for _, a, b in g.edges}:
        adj[u].discard(v)
        adj[v].discard(u)
        try:
            if not _connected_without(adj, u, v, None):
                continue
            if all(_connected_without(adj, u, v, w) for w in g.vertices if w not in (u, v)):
                return False
        finally:
            adj[u].add(v)
            adj[v].add(u)
    return True


# -- series-parallel -----------------------------------------------------------------


@dataclass(frozen=True)
class SeriesParallelVerdict:
    ok: bool
    log: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _reduce(edges: list[tuple[int, int]], log: list[str]) -> bool:
    """Delete loops and degree <= 1 vertices, merge parallels, suppress degree 2.

    Returns True iff everything disappears (no K4 minor).
    """
    mult: dict[tuple[int, int], int] = {}
    for u, v in edges:
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    for key, k in list(mult.items()):
        if k > 1:
            log.append(f"merge {k} parallel edges {key[0]}-{key[1]}")
            mult[key] = 1
    adj: dict[int, set[int]] = {}
    for u, v in mult:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    work = deque(sorted(adj))
    while work:
        x = work.popleft()
        if x not in adj:
            continue
        nb = adj[x]
        if len(nb) <= 1:
            log.append(f"delete vertex {x} of degree {len(nb)}")
            for y in nb:
                adj[y].discard(x)
                work.append(y)
            del adj[x]
        elif len(nb) == 2:
            a, b = sorted(nb)
            log.append(f"suppress vertex {x} between {a} and {b}")
            adj[a].discard(x)
            adj[b].discard(x)
            del adj[x]
            if b in adj[a]:
                log.append(f"merge parallel edges {a}-{b}")
            adj[a].add(b)
            adj[b].add(a)
            work.extend((a, b))
    return not adj


def is_series_parallel(g: Graph) -> SeriesParallelVerdict:
    """K4-minor-freeness by reduction, run block by block."""
    bd = block_decomposition(g)
    log: list[str] = []
    for i, block in enumerate(bd.blocks):
        log.append(f"block {i}")
        edges = [g.endpoints(e) for e in sorted(block)]
        if not _reduce(edges, log):
            log.append(f"block {i} is irreducible")
            return SeriesParallelVerdict(False, tuple(log))
    return SeriesParallelVerdict(True, tuple(log))


# -- wheels, planarity ------------------------------------------------------------------


def is_wheel(g: Graph) -> int | None:
    """The hub (lowest id that works) if ``g`` is W_n for some n >= 3, else None."""
    n = g.num_vertices - 1
    if g.multigraph or n < 3 or g.num_edges != 2 * n:
        return None
    for hub in g.vertices:
        if g.degree(hub) != n:
            continue
        rim = g.vertex_induced(x for x in g.vertices if x != hub)
        if all(rim.degree(x) == 2 for x in rim.vertices) and len(connected_components(rim)) == 1:
            return hub
    return None


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((u, v) for _, u, v in g.edges)
    return h


def is_planar(g: Graph) -> bool:
    planar, _ = nx.check_planarity(_nx(g))
    return planar


def is_outerplanar(g: Graph) -> bool:
    """Planar after adding an apex joined to every vertex."""
    h = _nx(g)
    apex = max(g.vertices, default=-1) + 1
    h.add_edges_from((apex, x) for x in g.vertices)
    planar, _ = nx.check_planarity(h)
    return planar


# -- Class 1 -----------------------------------------------------------------------------


def fournier_condition(g: Graph) -> bool:
    """The vertices of maximum degree induce a forest (sufficient for Class 1, simple graphs)."""
    if g.multigraph:
        return False
    delta = g.max_degree
    core = g.vertex_induced(x for x in g.vertices if g.degree(x) == delta)
    return core.num_edges == core.num_vertices - len(connected_components(core))


def is_class1(g: Graph, budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    if g.num_edges == 0 or fournier_condition(g):
        return True
    return find_proper_coloring(g, g.max_degree, budget) is not None


# -- line-perfect blocks -------------------------------------------------------------------


def _is_k4(h: Graph) -> bool:
    return not h.multigraph and h.num_vertices == 4 and h.num_edges == 6


def _is_k11n(h: Graph) -> bool:
    """K_{1,1,n}, n >= 1: two adjacent apexes joined to n independent vertices."""
    n = h.num_vertices - 2
    if h.multigraph or n < 1 or h.num_edges != 2 * n + 1:
        return False
    apexes = [x for x in h.vertices if h.degree(x) == n + 1]
    for a in apexes:
        for b in apexes:
            if a < b and b in h.neighbors(a):
                rest = [x for x in h.vertices if x not in (a, b)]
                if all(set(h.neighbors(x)) == {a, b} for x in rest):
                    return True
    return False


def block_graphs(g: Graph) -> list[Graph]:
    bd = block_decomposition(g)
    return [g.edge_subgraph(b, keep_vertices=False) for b in bd.blocks]


def line_perfect_blocks(g: Graph) -> bool:
    return all(is_bipartite(b).ok or _is_k4(b) or _is_k11n(b) for b in block_graphs(g))


# -- certificates --------------------------------------------------------------------------

CLASS_TAGS = (
    "bipartite", "chordless", "series_parallel", "wheel", "planar_girth_ge7",
    "halin_constructed", "line_perfect_block", "K4", "K_{1,1,n}", "unknown",
)


@dataclass(frozen=True)
class ClassCertificate:
    class_tag: str
    evidence: object = None

    def verify(self, g: Graph) -> bool:
        """Re-derive the claim from scratch."""
        tag = self.class_tag
        if tag == "bipartite":
            sides = self.evidence
            return isinstance(sides, dict) and all(sides[u] != sides[v] for _, u, v in g.edges)
        if tag == "chordless":
            return is_chordless(g)
        if tag == "series_parallel":
            return is_series_parallel(g).ok
        if tag == "wheel":
            return is_wheel(g) is not None and g.degree(self.evidence) == g.num_vertices - 1
        if tag == "planar_girth_ge7":
            return not g.multigraph and is_planar(g) and girth(g) >= 7
        if tag == "K4":
            return _is_k4(g)
        if tag == "K_{1,1,n}":
            return _is_k11n(g)
        if tag == "line_perfect_block":
            return line_perfect_blocks(g)
        if tag == "halin_constructed":
            return self.evidence is not None
        return tag == "unknown"

    def to_dict(self) -> dict:
        ev = self.evidence
        if isinstance(ev, dict):
            ev = {str(k): v for k, v in sorted(ev.items())}
        elif isinstance(ev, tuple):
            ev = list(ev)
        return {"class": self.class_tag, "evidence": ev}


def certificates(g: Graph) -> list[ClassCertificate]:
    """Every recognizable class the whole graph belongs to."""
    out = []
    bip = is_bipartite(g)
    if bip:
        out.append(ClassCertificate("bipartite", bip.sides))
    if is_chordless(g):
        out.append(ClassCertificate("chordless"))
    sp = is_series_parallel(g)
    if sp:
        out.append(ClassCertificate("series_parallel", sp.log))
    hub = is_wheel(g)
    if hub is not None:
        out.append(ClassCertificate("wheel", hub))
    if not g.multigraph and girth(g) >= 7 and is_planar(g):
        out.append(ClassCertificate("planar_girth_ge7", girth(g)))
    if _is_k4(g):
        out.append(ClassCertificate("K4"))
    if _is_k11n(g):
        out.append(ClassCertificate("K_{1,1,n}"))
    if line_perfect_blocks(g):
        out.append(ClassCertificate("line_perfect_block"))
    return out or [ClassCertificate("unknown")]


# -- A(q) --------------------------------------------------------------------------------------


@dataclass(frozen=True)
class AqMembership:
    q: int
    verdict: str  # certified_by_class | verified_by_brute_force | refuted_with_witness
    witness: Graph | None = None
    block_reasons: tuple[str, ...] = field(default=())

    @property
    def member(self) -> bool:
        return self.verdict != "refuted_with_witness"

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "blocks": list(self.block_reasons),
        }


def _block_class_reason(b: Graph, q: int, hints: frozenset[str]) -> str | None:
    if is_bipartite(b):
        return "bipartite"
    if q == 3:
        if is_chordless(b):
            return "chordless"
        if is_series_parallel(b):
            return "series_parallel"
        hub = is_wheel(b)
        if hub is not None and b.num_vertices - 1 >= 5:
            return "wheel"
        if not b.multigraph and girth(b) >= 7 and is_planar(b):
            return "planar_girth_ge7"
    if q == 4 and "halin_constructed" in hints:
        return "halin_constructed"
    if q == 7 and not b.multigraph and is_planar(b):
        return "planar"
    return None


def maximal_bounded_subgraphs(g: Graph, q: int, cap: int = 200_000) -> Iterable[frozenset[int]]:
    """Edge-maximal edge sets with every vertex degree at most q.

    Every subgraph of maximum degree at most q lies inside one of these.
    """
    edges = list(g.edge_ids)
    ends = [g.endpoints(e) for e in edges]
    deg = {x: 0 for x in g.vertices}
    chosen: list[int] = []
    count = 0

    def rec(i: int):
        nonlocal count
        if i == len(edges):
            chosen_set = set(chosen)
            for j, e in enumerate(edges):
                if e not in chosen_set and all(deg[x] < q for x in ends[j]):
                    return
            count += 1
            if count > cap:
                raise BudgetExceeded(f"more than {cap} maximal subgraphs")
            yield frozenset(chosen)
            return
        u, v = ends[i]
        if deg[u] < q and deg[v] < q:
            deg[u] += 1
            deg[v] += 1
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        yield from rec(i + 1)

    yield from rec(0)


def _brute_force_block(b: Graph, q: int, budget: int | None) -> Graph | None:
    """A subgraph with max degree <= q and no proper q-coloring, or None."""
    checked: set[frozenset[int]] = set()
    for edge_set in maximal_bounded_subgraphs(b, q):
        h = b.edge_subgraph(edge_set, keep_vertices=False)
        for comp in connected_components(h):
            comp_edges = frozenset(e for x in comp for e in h.incident(x))
            if comp_edges in checked:
                continue
            checked.add(comp_edges)
            sub = h.edge_subgraph(comp_edges, keep_vertices=False)
            if sub.max_degree < q and not sub.multigraph:
                continue  # Vizing: max degree + 1 <= q colors suffice
            if sub.max_degree == q and fournier_condition(sub):
                continue
            if find_proper_coloring(sub, q, budget) is None:
                return sub
    return None


def in_A_q(
    g: Graph,
    q: int,
    budget: int | None = DEFAULT_NODE_BUDGET,
    hints: Iterable[str] = (),
    brute_force: bool = True,
) -> AqMembership:
    """Decide membership in A(q), preferring class certificates block by block.

    ``hints`` carries tags that cannot be recognized, e.g. ``halin_constructed``
    for graphs built by :func:`edgetrans.constructions.halin`.  Blocks with no
    certificate are verified exhaustively over their maximal subgraphs of
    maximum degree at most q.
    """
    if q < 2:
        raise PreconditionError("q must be at least 2")
    hints = frozenset(hints)
    reasons = []
    brute = False
    for b in block_graphs(g):
        reason = _block_class_reason(b, q, hints)
        if reason is None:
            if not brute_force:
                raise BudgetExceeded("no class certificate and brute force disabled")
            witness = _brute_force_block(b, q, budget)
            if witness is not None:
                return AqMembership(q, "refuted_with_witness", witness, tuple(reasons + ["refuted"]))
            reason = "brute_force"
            brute = True
        reasons.append(reason)
    verdict = "verified_by_brute_force" if brute else "certified_by_class"
    return AqMembership(q, verdict, None, tuple(reasons))
