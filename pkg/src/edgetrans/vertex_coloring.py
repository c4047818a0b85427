"""Proper vertex colorings compared as unordered partitions into independent sets."""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .edge_coloring import DEFAULT_NODE_BUDGET
from .errors import BudgetExceeded, GraphFormatError, PreconditionError
from .graph_core import Graph


@dataclass(frozen=True)
class VertexPartition:
    classes: tuple[tuple[int, ...], ...]  # each sorted; ordered by smallest vertex

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> VertexPartition:
        cs = [tuple(sorted(c)) for c in classes if c]
        return cls(tuple(sorted(cs)))

    def is_proper(self, g: Graph) -> bool:
        where = {x: i for i, c in enumerate(self.classes) for x in c}
        if sorted(where) != list(g.vertices) or sum(map(len, self.classes)) != len(where):
            return False
        return all(where[u] != where[v] for _, u, v in g.edges)

    def to_dict(self) -> dict:
        return {"classes": [list(c) for c in self.classes]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> VertexPartition:
        if not isinstance(data, dict) or set(data) != {"classes"}:
            raise GraphFormatError("partition JSON must have exactly the field classes")
        return cls.of(data["classes"])


def _partitions(g: Graph, k: int, budget: int | None) -> Iterator[list[int]]:
    """Colorings with colors 0..k-1 where vertex i uses at most one more than the
    largest color before it; each unordered partition appears exactly once."""
    verts = list(g.vertices)
    pos = {x: i for i, x in enumerate(verts)}
    earlier = [[pos[y] for y in g.neighbors(x) if pos[y] < i] for i, x in enumerate(verts)]
    n = len(verts)
    col = [-1] * n
    nodes = 0

    def rec(i: int, top: int) -> Iterator[list[int]]:
        nonlocal nodes
        if i == n:
            yield list(col)
            return
        banned = {col[j] for j in earlier[i]}
        for c in range(min(k, top + 2)):
            if c in banned:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"vertex-coloring search exceeded {budget} nodes")
            col[i] = c
            yield from rec(i + 1, max(top, c))
        col[i] = -1

    yield from rec(0, -1)


def _as_partition(g: Graph, col: Sequence[int]) -> VertexPartition:
    classes: dict[int, list[int]] = {}
    for x, c in zip(g.vertices, col):
        classes.setdefault(c, []).append(x)
    return VertexPartition.of(classes.values())


def chromatic_number(g: Graph, budget: int | None = DEFAULT_NODE_BUDGET) -> tuple[int, VertexPartition]:
    if g.multigraph:
        g = g.underlying_simple()
    if g.num_vertices == 0:
        return 0, VertexPartition(())
    for k in range(1, g.num_vertices + 1):
        col = next(_partitions(g, k, budget), None)
        if col is not None:
            return k, _as_partition(g, col)
    raise PreconditionError("unreachable: n colors always suffice")


def enumerate_partitions(g: Graph, k: int, budget: int | None = DEFAULT_NODE_BUDGET) -> list[VertexPartition]:
    """All partitions of V into at most k independent sets, each listed once."""
    if g.multigraph:
        g = g.underlying_simple()
    return sorted((_as_partition(g, col) for col in _partitions(g, k, budget)), key=lambda p: p.classes)


def global_transformation_required(g: Graph, k: int, budget: int | None = DEFAULT_NODE_BUDGET) -> bool:
    """With exactly two proper k-partitions: True iff they share no class.

    Then every transformation between them must recolor all k classes.
    """
    parts = enumerate_partitions(g, k, budget)
    if len(parts) != 2:
        raise PreconditionError(f"expected exactly 2 partitions, found {len(parts)}")
    return not set(parts[0].classes) & set(parts[1].classes)
