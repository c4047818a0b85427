"""Stand-alone trace validator.

Deliberately self-contained: it reads plain JSON-shaped data and imports
nothing from the rest of the package, so a bug in the engine cannot hide
itself by sharing a helper with the checker.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _fail(step: int | None, reason: str) -> CheckResult:
    return CheckResult(False, step, reason)


def check_trace(graph: dict, trace: dict, width: int | None = None,
                start: dict | None = None, end: dict | None = None) -> CheckResult:
    """Validate a trace against a graph, both given as decoded JSON.

    Checks: every coloring is total with colors in 1..t and proper; every
    step's declared ``changed`` list equals the recomputed set of differing
    classes; that set has at most ``width`` colors (default: the trace's n);
    steps[0].changed is empty; optional start and end colorings match.
    """
    edges = {}
    for item in graph.get("edges", []):
        edges[str(item["id"])] = (item["u"], item["v"])
    steps = trace.get("steps")
    if not isinstance(steps, list) or not steps:
        return _fail(None, "trace has no steps")
    limit = trace.get("n") if width is None else width
    if not isinstance(limit, int):
        return _fail(None, "width is not an integer")
    prev_classes = None
    t0 = None
    for i, step in enumerate(steps):
        col = step.get("coloring", {})
        t = col.get("t")
        colors = {str(k): c for k, c in col.get("colors", {}).items()}
        if t0 is None:
            t0 = t
        if t != t0:
            return _fail(i, f"palette changes from {t0} to {t}")
        if set(colors) != set(edges):
            return _fail(i, "coloring is not total on the edge set")
        at_vertex: dict[tuple[object, int], str] = {}
        for eid, (u, v) in edges.items():
            c = colors[eid]
            if not isinstance(c, int) or not 1 <= c <= t:
                return _fail(i, f"edge {eid} has color {c} outside 1..{t}")
            for x in (u, v):
                if (x, c) in at_vertex:
                    return _fail(i, f"improper: edges {at_vertex[(x, c)]} and {eid} share color {c} at vertex {x}")
                at_vertex[(x, c)] = eid
        classes = {j: frozenset(e for e, c in colors.items() if c == j) for j in range(1, t + 1)}
        declared = sorted(step.get("changed", []))
        if prev_classes is None:
            if declared:
                return _fail(i, "first step must declare no changed classes")
        else:
            actual = sorted(j for j in classes if classes[j] != prev_classes[j])
            if actual != declared:
                return _fail(i, f"declared changed classes {declared} but actual {actual}")
            if len(actual) > limit:
                return _fail(i, f"step changes {len(actual)} classes, more than {limit}")
        prev_classes = classes
    if start is not None and _norm(start) != _norm(steps[0]["coloring"]):
        return _fail(0, "trace does not start at the given coloring")
    if end is not None and _norm(end) != _norm(steps[-1]["coloring"]):
        return _fail(len(steps) - 1, "trace does not end at the given coloring")
    return CheckResult(True)


def _norm(col: dict) -> tuple:
    return col.get("t"), tuple(sorted((str(k), c) for k, c in col.get("colors", {}).items()))
