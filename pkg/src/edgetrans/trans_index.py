"""Exact brute-force computation of the edge transformation index.

Two proper t-colorings are n-adjacent when they differ in at most n color
classes (labels matter).  The index is the least n >= 2 for which the
n-adjacency graph on all proper chi'-colorings is connected.

Connectivity avoids the quadratic pair scan: for n < t, colorings f and h
differ in at most n classes iff some n-set S of colors contains every
differing color, i.e. iff f and h agree on all classes outside S.  Grouping
colorings by (S, classes outside S) and uniting each group gives the
components exactly.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from .edge_coloring import (
    DEFAULT_NODE_BUDGET,
    EdgeColoring,
    connected_edge_order,
    ColoringSearch,
    chromatic_index,
    class_difference,
)
from .errors import BudgetExceeded, EdgeTransError
from .graph_core import Graph

DEFAULT_CAP = 200_000


class WitnessNotFound(EdgeTransError):
    """A witness search exhausted its candidates."""


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.count = n

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1


@dataclass
class ColoringSpace:
    graph: Graph
    t: int
    edge_order: tuple[int, ...]  # position -> edge id
    rows: list[tuple[int, ...]]  # colors aligned with edge_order

    def __len__(self) -> int:
        return len(self.rows)

    def coloring(self, i: int) -> EdgeColoring:
        return EdgeColoring(self.t, dict(zip(self.edge_order, self.rows[i])))

    def colorings(self) -> Iterator[EdgeColoring]:
        for i in range(len(self.rows)):
            yield self.coloring(i)

    def class_masks(self) -> list[tuple[int, ...]]:
        """Per coloring, per color 1..t, the bitmask of edge positions of that color."""
        out = []
        for row in self.rows:
            masks = [0] * (self.t + 1)
            for pos, c in enumerate(row):
                masks[c] |= 1 << pos
            out.append(tuple(masks[1:]))
        return out

    def components(self, n: int) -> list[int]:
        """Component representative of every coloring under n-adjacency."""
        size = len(self.rows)
        uf = _UnionFind(size)
        if n >= self.t:
            for i in range(1, size):
                uf.union(0, i)
        else:
            masks = self.class_masks()
            colors = range(self.t)
            for s in itertools.combinations(colors, n):
                rest = [j for j in colors if j not in s]
                first: dict[tuple[int, ...], int] = {}
                for i, m in enumerate(masks):
                    key = tuple(m[j] for j in rest)
                    if key in first:
                        uf.union(first[key], i)
                    else:
                        first[key] = i
        return [uf.find(i) for i in range(size)]


def enumerate_colorings(
    g: Graph, t: int, cap: int = DEFAULT_CAP, budget: int | None = DEFAULT_NODE_BUDGET,
) -> ColoringSpace:
    """All proper t-colorings (labeled), or :class:`BudgetExceeded` past ``cap``."""
    order = connected_edge_order(g, g.edge_ids)
    search = ColoringSearch(g, order, range(1, t + 1), budget)
    rows = []
    for sol in search.solutions():
        rows.append(tuple(sol))
        if len(rows) > cap:
            raise BudgetExceeded(f"more than {cap} proper {t}-colorings")
    return ColoringSpace(g, t, tuple(order), rows)


@dataclass
class IndexReport:
    chi_prime: int
    coloring_count: int
    chi_trans: int
    connectivity: dict[int, int] = field(default_factory=dict)  # n -> number of components
    kempe_class_count: int = 1
    # two colorings in different components at n = chi_trans - 1 (if that n >= 2)
    separated_pair: tuple[EdgeColoring, EdgeColoring] | None = None

    def connected(self, n: int) -> bool:
        return self.connectivity.get(n, 1) == 1

    def to_dict(self) -> dict:
        return {
            "chi_prime": self.chi_prime,
            "coloring_count": self.coloring_count,
            "chi_trans": self.chi_trans,
            "connectivity": {str(n): {"components": c, "connected": c == 1}
                             for n, c in sorted(self.connectivity.items())},
            "kempe_class_count": self.kempe_class_count,
            "separated_pair": None if self.separated_pair is None
            else [f.to_dict() for f in self.separated_pair],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def chi_trans_exact(
    g: Graph, cap: int = DEFAULT_CAP, budget: int | None = DEFAULT_NODE_BUDGET,
    space: ColoringSpace | None = None,
) -> IndexReport:
    if g.num_edges == 0:
        return IndexReport(0, 1, 2, {2: 1}, 1)
    if space is None:
        t, _ = chromatic_index(g, budget)
        space = enumerate_colorings(g, t, cap, budget)
    t = space.t
    connectivity: dict[int, int] = {}
    reps_by_n: dict[int, list[int]] = {}
    chi = None
    for n in range(2, max(t, 2) + 1):
        reps = space.components(n)
        reps_by_n[n] = reps
        connectivity[n] = len(set(reps))
        if chi is None and connectivity[n] == 1:
            chi = n
    assert chi is not None  # n = t always connects
    pair = None
    if chi > 2:
        reps = reps_by_n[chi - 1]
        j = next(i for i, r in enumerate(reps) if r != reps[0])
        pair = (space.coloring(0), space.coloring(j))
    return IndexReport(t, len(space), chi, connectivity, connectivity[2], pair)


def kempe_classes(g: Graph, t: int, cap: int = DEFAULT_CAP) -> list[list[EdgeColoring]]:
    """Partition of all proper t-colorings into Kempe (2-equivalence) classes."""
    space = enumerate_colorings(g, t, cap)
    reps = space.components(2)
    groups: dict[int, list[int]] = {}
    for i, r in enumerate(reps):
        groups.setdefault(r, []).append(i)
    return [[space.coloring(i) for i in grp] for grp in sorted(groups.values())]


def adjacency_dot(space: ColoringSpace, n: int, limit: int = 200) -> str:
    """DOT drawing of the n-adjacency meta-graph (small spaces only)."""
    if len(space) > limit:
        raise BudgetExceeded(f"meta-graph has {len(space)} nodes, limit {limit}")
    cols = list(space.colorings())
    lines = ["graph meta {"]
    lines += [f"  c{i};" for i in range(len(cols))]
    for i, j in itertools.combinations(range(len(cols)), 2):
        if len(class_difference(cols[i], cols[j])) <= n:
            lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- rigidity --------------------------------------------------------------------------


def _partitions(g: Graph, edge_ids: list[int], palette: list[int]) -> set[frozenset]:
    search = ColoringSearch(g, connected_edge_order(g, edge_ids), palette, None)
    out = set()
    for sol in search.solutions():
        classes: dict[int, set[int]] = {}
        for e, c in zip(search.order, sol):
            classes.setdefault(c, set()).add(e)
        out.add(frozenset(frozenset(s) for s in classes.values()))
        if len(out) > 1:
            break
    return out


def is_rigid(g: Graph, f: EdgeColoring, k: int) -> bool:
    """For every k-set T of colors, the edges f colors from T split into k matchings in one way only.

    Then every transformation of width at most k from f merely permutes
    labels inside T, so f's k-equivalence class consists of relabelings.
    """
    for ts in itertools.combinations(range(1, f.t + 1), k):
        edges = [e for e in g.edge_ids if f[e] in ts]
        if len(_partitions(g, edges, list(ts))) != 1:
            return False
    return True


def is_relabeling(f: EdgeColoring, h: EdgeColoring) -> bool:
    return {f.color_class(j) for j in range(1, f.t + 1)} == {h.color_class(j) for j in range(1, h.t + 1)}


@dataclass(frozen=True)
class RigidityEvidence:
    rigid: EdgeColoring
    other: EdgeColoring  # a coloring that is not a relabeling of ``rigid``
    subset_size: int


def rigidity_witness(g: Graph, space: ColoringSpace, k: int) -> RigidityEvidence | None:
    """A coloring rigid at k-subsets plus a coloring not obtainable by relabeling it.

    Such a pair certifies that the index exceeds k.
    """
    cols = list(space.colorings())
    partitions: dict[frozenset, int] = {}
    for i, f in enumerate(cols):
        key = frozenset(f.color_class(j) for j in range(1, f.t + 1))
        partitions.setdefault(key, i)
    if len(partitions) < 2:
        return None
    for key, i in partitions.items():
        f = cols[i]
        if is_rigid(g, f, k):
            other = next(cols[j] for kk, j in partitions.items() if kk != key)
            return RigidityEvidence(f, other, k)
    return None


# -- witness search -------------------------------------------------------------------


@dataclass
class WitnessResult:
    graph: Graph
    report: IndexReport
    rigidity: RigidityEvidence | None
    candidates_tried: int
    label: str = ""


def witness_search(
    candidates: Iterable[tuple[str, Graph]],
    predicate: Callable[[Graph, IndexReport], bool],
    rigidity_subset: int | None = None,
    cap: int = DEFAULT_CAP,
) -> WitnessResult:
    """First candidate (in generation order) whose report satisfies ``predicate``.

    With ``rigidity_subset`` set, a candidate must also have a rigidity witness
    at subsets of that size.  Candidates whose spaces exceed ``cap`` are
    skipped.  Raises :class:`WitnessNotFound` when the generator runs dry.
    """
    tried = 0
    for label, g in candidates:
        tried += 1
        try:
            t, _ = chromatic_index(g)
            space = enumerate_colorings(g, t, cap)
        except BudgetExceeded:
            continue
        report = chi_trans_exact(g, space=space)
        if not predicate(g, report):
            continue
        rig = None
        if rigidity_subset is not None:
            rig = rigidity_witness(g, space, rigidity_subset)
            if rig is None:
                continue
        return WitnessResult(g, report, rig, tried, label)
    raise WitnessNotFound(f"no witness among {tried} candidates")
