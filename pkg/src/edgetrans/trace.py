"""Transformation traces: sequences of proper colorings with per-step changed classes."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping

from .edge_coloring import EdgeColoring, class_difference, is_proper
from .errors import GraphFormatError, InvariantViolation
from .graph_core import Graph


class TransformationTrace:
    """f_0, ..., f_k with declared width n.

    Consecutive duplicates are dropped on append, so every stored step
    changes at least one class.
    """

    def __init__(self, graph: Graph, colorings: Iterable[EdgeColoring] = (), width: int = 0) -> None:
        self.graph = graph
        self.width = width
        self.colorings: list[EdgeColoring] = []
        for f in colorings:
            self.append(f)

    def __len__(self) -> int:
        return len(self.colorings)

    @property
    def first(self) -> EdgeColoring:
        return self.colorings[0]

    @property
    def last(self) -> EdgeColoring:
        return self.colorings[-1]

    @property
    def num_steps(self) -> int:
        return max(len(self.colorings) - 1, 0)

    def append(self, f: EdgeColoring) -> None:
        if not self.colorings or self.colorings[-1] != f:
            self.colorings.append(f)

    def extend(self, colorings: Iterable[EdgeColoring]) -> None:
        for f in colorings:
            self.append(f)

    def changed_sets(self) -> list[set[int]]:
        return [class_difference(a, b) for a, b in zip(self.colorings, self.colorings[1:])]

    def max_step_width(self) -> int:
        return max((len(s) for s in self.changed_sets()), default=0)

    def reversed(self) -> TransformationTrace:
        return TransformationTrace(self.graph, reversed(self.colorings), self.width)

    def check(self, width: int | None = None) -> None:
        """Raise :class:`InvariantViolation` unless every coloring is proper and every
        step stays within the width."""
        w = self.width if width is None else width
        for i, f in enumerate(self.colorings):
            verdict = is_proper(self.graph, f)
            if not verdict:
                raise InvariantViolation(
                    f"step {i}: improper at vertex {verdict.vertex}, color {verdict.color}")
        for i, s in enumerate(self.changed_sets(), start=1):
            if len(s) > w:
                raise InvariantViolation(f"step {i} changes {len(s)} classes {sorted(s)} > {w}")

    # JSON: {"n":4,"steps":[{"coloring":{...},"changed":[1,4]},...]}
    def to_dict(self) -> dict:
        steps = []
        prev = None
        for f in self.colorings:
            changed = [] if prev is None else sorted(class_difference(prev, f))
            steps.append({"coloring": f.to_dict(), "changed": changed})
            prev = f
        return {"n": self.width, "steps": steps}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, graph: Graph, data: Mapping) -> TransformationTrace:
        if not isinstance(data, Mapping) or set(data) != {"n", "steps"}:
            raise GraphFormatError("trace JSON must have exactly the fields n and steps")
        tr = cls(graph, width=int(data["n"]))
        for step in data["steps"]:
            if set(step) != {"coloring", "changed"}:
                raise GraphFormatError("trace step must have exactly coloring and changed")
            tr.colorings.append(EdgeColoring.from_dict(step["coloring"]))
        return tr

    @classmethod
    def from_json(cls, graph: Graph, text: str) -> TransformationTrace:
        try:
            return cls.from_dict(graph, json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None


def concat(graph: Graph, width: int, *parts: Iterable[EdgeColoring]) -> TransformationTrace:
    """Join traces end to start; each part must begin where the previous one ended."""
    out = TransformationTrace(graph, width=width)
    for part in parts:
        cols = list(part.colorings if isinstance(part, TransformationTrace) else part)
        if out.colorings and cols and cols[0] != out.last:
            raise InvariantViolation("trace parts do not meet")
        out.extend(cols)
    return out
