"""Labeled (multi)graphs with stable integer ids and the structural queries used
throughout the package.

Vertex and edge ids are nonnegative integers and every iteration order is by
ascending id, so all downstream algorithms are deterministic.  Graphs are
immutable; operations that "delete" something return a new graph.
"""

from __future__ import annotations

import json
import math
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from .errors import GraphFormatError, PreconditionError, UnknownIdError

Edge = tuple[int, int, int]  # (edge_id, u, v)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    multigraph: bool = False

    def __post_init__(self) -> None:
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise GraphFormatError("duplicate vertex ids")
        edges = tuple(sorted((int(e), int(u), int(v)) for e, u, v in self.edges))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        vset = set(verts)
        seen_ids: set[int] = set()
        seen_pairs: set[tuple[int, int]] = set()
        for eid, u, v in edges:
            if eid < 0 or eid in seen_ids:
                raise GraphFormatError(f"duplicate or negative edge id {eid}")
            seen_ids.add(eid)
            if u == v:
                raise GraphFormatError(f"edge {eid} is a loop at {u}")
            if u not in vset or v not in vset:
                raise GraphFormatError(f"edge {eid} has an undeclared endpoint")
            pair = (min(u, v), max(u, v))
            if not self.multigraph and pair in seen_pairs:
                raise GraphFormatError(f"parallel edge {eid} in a simple graph")
            seen_pairs.add(pair)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple[int, int]],
        vertices: Iterable[int] | int | None = None,
        multigraph: bool = False,
    ) -> Graph:
        """Build a graph numbering edges 0, 1, ... in the order given."""
        pairs = [(int(u), int(v)) for u, v in pairs]
        if vertices is None:
            verts = sorted({x for p in pairs for x in p})
        elif isinstance(vertices, int):
            verts = list(range(vertices))
        else:
            verts = sorted(vertices)
        edges = tuple((i, u, v) for i, (u, v) in enumerate(pairs))
        return cls(tuple(verts), edges, multigraph)

    # -- cached indexes -------------------------------------------------------

    @cached_property
    def _endpoints(self) -> dict[int, tuple[int, int]]:
        return {e: (u, v) for e, u, v in self.edges}

    @cached_property
    def _incidence(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {x: [] for x in self.vertices}
        for e, u, v in self.edges:
            inc[u].append(e)
            inc[v].append(e)
        return {x: tuple(es) for x, es in inc.items()}

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e for e, _, _ in self.edges)

    @cached_property
    def max_degree(self) -> int:
        return max((len(es) for es in self._incidence.values()), default=0)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge_id(self, e: int) -> bool:
        return e in self._endpoints

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._endpoints[e]
        except KeyError:
            raise UnknownIdError(f"unknown edge id {e}") from None

    def other_end(self, e: int, x: int) -> int:
        u, v = self.endpoints(e)
        if x == u:
            return v
        if x == v:
            return u
        raise PreconditionError(f"vertex {x} is not an endpoint of edge {e}")

    def incident(self, x: int) -> tuple[int, ...]:
        try:
            return self._incidence[x]
        except KeyError:
            raise UnknownIdError(f"unknown vertex id {x}") from None

    def degree(self, x: int) -> int:
        return len(self.incident(x))

    def neighbors(self, x: int) -> list[int]:
        return sorted({self.other_end(e, x) for e in self.incident(x)})

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incident(u) if self.other_end(e, u) == v]

    def is_regular(self) -> bool:
        return len({self.degree(x) for x in self.vertices}) <= 1

    # -- derived graphs -------------------------------------------------------

    def edge_subgraph(self, edge_ids: Iterable[int], keep_vertices: bool = True) -> Graph:
        """Subgraph on the given edges, ids preserved.

        With ``keep_vertices`` all vertices stay (possibly isolated); otherwise
        only endpoints of the kept edges remain.
        """
        wanted = set(edge_ids)
        for e in wanted:
            self.endpoints(e)
        edges = tuple(t for t in self.edges if t[0] in wanted)
        if keep_vertices:
            verts = self.vertices
        else:
            verts = tuple(sorted({x for _, u, v in edges for x in (u, v)}))
        return Graph(verts, edges, self.multigraph)

    def without_edges(self, edge_ids: Iterable[int]) -> Graph:
        drop = set(edge_ids)
        return self.edge_subgraph(e for e in self.edge_ids if e not in drop)

    def vertex_induced(self, vertex_ids: Iterable[int]) -> Graph:
        keep = set(vertex_ids)
        for x in keep:
            self.incident(x)
        edges = tuple(t for t in self.edges if t[1] in keep and t[2] in keep)
        return Graph(tuple(sorted(keep)), edges, self.multigraph)

    def underlying_simple(self) -> Graph:
        """Drop all but the lowest-id edge of every parallel class."""
        seen: set[tuple[int, int]] = set()
        edges = []
        for e, u, v in self.edges:
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen.add(key)
                edges.append((e, u, v))
        return Graph(self.vertices, tuple(edges), False)

    def relabeled(self) -> Graph:
        """Copy with vertices renumbered 0..n-1 and edges 0..m-1 (ascending order kept)."""
        vmap = {x: i for i, x in enumerate(self.vertices)}
        edges = tuple((i, vmap[u], vmap[v]) for i, (_, u, v) in enumerate(self.edges))
        return Graph(tuple(range(len(vmap))), edges, self.multigraph)

    # -- JSON -----------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e, "u": u, "v": v} for e, u, v in self.edges],
            "multigraph": self.multigraph,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> Graph:
        if not isinstance(data, Mapping):
            raise GraphFormatError("graph JSON must be an object")
        extra = set(data) - {"vertices", "edges", "multigraph"}
        if extra:
            raise GraphFormatError(f"unknown graph fields: {sorted(extra)}")
        try:
            verts = tuple(_as_int(x) for x in data["vertices"])
            edges = []
            for item in data["edges"]:
                if set(item) != {"id", "u", "v"}:
                    raise GraphFormatError(f"bad edge record {item!r}")
                edges.append((_as_int(item["id"]), _as_int(item["u"]), _as_int(item["v"])))
            multi = data.get("multigraph", False)
        except (KeyError, TypeError) as exc:
            raise GraphFormatError(f"malformed graph JSON: {exc}") from None
        if not isinstance(multi, bool):
            raise GraphFormatError("multigraph must be a boolean")
        return cls(verts, tuple(edges), multi)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, edge_labels: Mapping[int, object] | None = None) -> str:
        lines = ["graph G {"]
        lines += [f"  {x};" for x in self.vertices]
        for e, u, v in self.edges:
            label = f' [label="{edge_labels[e]}"]' if edge_labels and e in edge_labels else ""
            lines.append(f"  {u} -- {v}{label};")
        lines.append("}")
        return "\n".join(lines)


def _as_int(x: object) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise GraphFormatError(f"expected an integer id, got {x!r}")
    return x


# -- structural queries -------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    isolated_vertices: tuple[int, ...] = field(default=())

    def block_vertices(self, g: Graph, index: int) -> set[int]:
        return {x for e in self.blocks[index] for x in g.endpoints(e)}

    def block_of_edge(self, e: int) -> int:
        for i, b in enumerate(self.blocks):
            if e in b:
                return i
        raise UnknownIdError(f"edge {e} is in no block")


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (as edge-id sets) and cutvertices, via an iterative Hopcroft-Tarjan DFS.

    Parallel edges are handled by tracking the tree edge id rather than the
    parent vertex.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    cut: set[int] = set()
    timer = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[int] = []
        # frame: (vertex, tree edge into it, iterator index)
        stack: list[list] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            x, via, idx = frame
            inc = g.incident(x)
            if idx < len(inc):
                frame[2] += 1
                e = inc[idx]
                if e == via:
                    continue
                y = g.other_end(e, x)
                if y not in disc:
                    edge_stack.append(e)
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append([y, e, 0])
                elif disc[y] < disc[x]:
                    edge_stack.append(e)
                    low[x] = min(low[x], disc[y])
                continue
            stack.pop()
            if not stack:
                break
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[x])
            if low[x] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                comp = []
                while True:
                    f = edge_stack.pop()
                    comp.append(f)
                    if f == via:
                        break
                blocks.append(frozenset(comp))
        if root_children > 1:
            cut.add(root)
    blocks.sort(key=min)
    isolated = tuple(x for x in g.vertices if g.degree(x) == 0)
    return BlockDecomposition(tuple(blocks), frozenset(cut), isolated)


def connected_components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests).

    A pair of parallel edges is a cycle of length 2.  BFS from every vertex; a
    non-tree edge between ``x`` and ``y`` closes a walk of length
    ``dist[x] + dist[y] + 1``, and the minimum over all roots is exact.
    """
    best = math.inf
    for root in g.vertices:
        dist = {root: 0}
        via = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for e in g.incident(x):
                if e == via[x]:
                    continue
                y = g.other_end(e, x)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    via[y] = e
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def degeneracy(g: Graph) -> int:
    """Least k such that every subgraph has a vertex of degree at most k."""
    deg = {x: g.degree(x) for x in g.vertices}
    alive = set(g.vertices)
    k = 0
    while alive:
        x = min(alive, key=lambda v: (deg[v], v))
        k = max(k, deg[x])
        alive.remove(x)
        for e in g.incident(x):
            y = g.other_end(e, x)
            if y in alive:
                deg[y] -= 1
    return k


def complement(g: Graph) -> Graph:
    if g.multigraph:
        raise PreconditionError("complement is defined for simple graphs only")
    present = {(min(u, v), max(u, v)) for _, u, v in g.edges}
    pairs = [
        (u, v)
        for i, u in enumerate(g.vertices)
        for v in g.vertices[i + 1:]
        if (u, v) not in present
    ]
    return Graph.from_pairs(pairs, vertices=g.vertices)
