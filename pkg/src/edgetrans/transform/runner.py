"""The trail algorithm shared by the path, cycle and tail lemmas.

A trail w_0 e_1 w_1 ... e_N w_N (N even) starts with an edge colored t and
alternates t with other colors.  The algorithm moves color t from the odd
to the even trail edges by swapping maximal (t, s)-colored runs, keeping a
single "pointer" vertex where two t-edges meet and repairing everything else
with corrections on q-sets of colors.  Between two emitted proper colorings
at most q + 1 classes change.

Edges may occur twice on a trail (a path walked out and back); the t-status
of an edge then flips on each occurrence.

With q = 2 (bipartite graphs, where every subgraph of maximum degree 2 is
2-colorable) the opening step swaps only the first run and corrects on
{s_0, c_0}; from then on every correction involves at most two colors, so
consecutive emitted colorings differ in at most three classes.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from ..edge_coloring import EdgeColoring, correction, kempe_chain, kempe_interchange, violations
from ..errors import InvariantViolation, PreconditionError
from ..graph_core import Graph


@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]  # w_0 .. w_N
    edges: tuple[int, ...]  # e_1 .. e_N

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise PreconditionError("a trail needs one more vertex than edges")

    @property
    def length(self) -> int:
        return len(self.edges)

    def w(self, k: int) -> int:
        return self.vertices[k]

    def e(self, k: int) -> int:
        """The k-th edge, 1-based."""
        return self.edges[k - 1]

    def check_on(self, g: Graph) -> None:
        for k in range(1, self.length + 1):
            if set(g.endpoints(self.e(k))) != {self.w(k - 1), self.w(k)}:
                raise PreconditionError(f"trail edge {self.e(k)} does not join w_{k-1} and w_{k}")


@dataclass
class StepState:
    """Registers of the algorithm between steps (inspectable by observers)."""

    step: int
    proper: EdgeColoring  # f_i, the last emitted proper coloring
    scratch: EdgeColoring  # the improper working coloring
    s_prev: int
    s_cur: int
    c0: int
    beta: int | None
    pos: int  # index of the pointer vertex on the trail
    R: frozenset[int]
    stage: str = ""
    extra: dict = field(default_factory=dict)


def _count(g: Graph, h: EdgeColoring, x: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for e in g.incident(x):
        out[h[e]] = out.get(h[e], 0) + 1
    return out


def fill_colors(base: Iterable[int], size: int, t: int, exclude: Iterable[int] = ()) -> frozenset[int]:
    """``base`` topped up with the smallest colors of 1..t-1 to ``size`` colors."""
    out = set(base)
    banned = set(exclude) | {t}
    if out & banned:
        raise InvariantViolation(f"base colors {sorted(out)} hit excluded colors")
    for c in range(1, t):
        if len(out) >= size:
            break
        if c not in banned:
            out.add(c)
    if len(out) != size:
        raise PreconditionError(f"cannot choose {size} colors below {t}")
    return frozenset(out)


class TrailRunner:
    """One run of the algorithm on a trail, collecting emitted proper colorings."""

    def __init__(
        self,
        g: Graph,
        f: EdgeColoring,
        trail: Trail,
        q: int,
        c0: int | None = None,
        prerecolor: Mapping[int, int] | None = None,
        observer: Callable[[StepState], None] | None = None,
        check: bool = True,
    ) -> None:
        self.g = g
        self.t = f.t
        self.q = q
        self.trail = trail
        self.f = f
        self.observer = observer
        self.check = check
        if q < 2 or self.t < q + 2:
            raise PreconditionError(f"need q >= 2 and t >= q + 2 (q={q}, t={self.t})")
        if trail.length % 2 or trail.length < 2:
            raise PreconditionError("trail length must be even and positive")
        trail.check_on(g)
        self.start = f.recolored(prerecolor) if prerecolor else f
        t = self.t
        for k in range(1, trail.length + 1):
            if (self.start[trail.e(k)] == t) != (k % 2 == 1) and trail.edges.index(trail.e(k)) == k - 1:
                raise PreconditionError(f"trail edge e_{k} breaks the t-alternation")
        if c0 is None:
            present = {f[e] for e in g.incident(trail.w(0))}
            c0 = min(c for c in range(1, t) if c not in present)
        self.c0 = c0
        self.out: list[EdgeColoring] = [f]
        self.states: list[StepState] = []

    # -- primitives -----------------------------------------------------------

    def _run(self, h: EdgeColoring, start: int, s: int) -> int:
        """End position of the maximal (t, s)-run starting at trail position ``start``.

        Stops at the trail end, where the color pattern breaks, or when the
        run closes up at its start vertex.
        """
        t, tr = self.t, self.trail
        if h[tr.e(start + 1)] != t:
            raise InvariantViolation(f"edge after the pointer (position {start + 1}) is not colored t")
        origin = tr.w(start)
        seen = {origin}
        k = start
        while k + 2 <= tr.length and h[tr.e(k + 1)] == t and h[tr.e(k + 2)] == s:
            mid, nxt = tr.w(k + 1), tr.w(k + 2)
            if mid in seen or (nxt in seen and nxt != origin):
                raise InvariantViolation(f"run from position {start} revisits a vertex")
            k += 2
            seen.update((mid, nxt))
            if nxt == origin:
                break
        if k == start:
            raise InvariantViolation(f"empty ({t},{s})-run at position {start}")
        return k

    def _swap(self, h: EdgeColoring, a: int, b: int, s: int) -> EdgeColoring:
        t, tr = self.t, self.trail
        changes = {}
        for k in range(a + 1, b + 1):
            e = tr.e(k)
            changes[e] = s if h[e] == t else t
        return h.recolored(changes)

    def _correct(self, h: EdgeColoring, colors: Iterable[int]) -> EdgeColoring:
        colors = frozenset(colors)
        for x in self.g.vertices:
            k = sum(1 for e in self.g.incident(x) if h[e] in colors)
            if k > len(colors):
                raise InvariantViolation(
                    f"vertex {x} meets {k} edges colored from {sorted(colors)}; correction impossible")
        return correction(self.g, h, colors)

    def _emit(self, h: EdgeColoring, stage: str) -> None:
        bad = violations(self.g, h)
        if bad:
            raise InvariantViolation(f"{stage}: emitted coloring is improper at {bad[:3]}")
        self.out.append(h)

    def _expected_t(self, pos: int) -> set[int]:
        cls = set(self.start.color_class(self.t))
        for k in range(1, pos + 1):
            cls ^= {self.trail.e(k)}
        return cls

    def _choose_beta(self, h: EdgeColoring, x: int, R: frozenset[int], prefer: int) -> int:
        present = {h[e] for e in self.g.incident(x)}
        free = sorted(c for c in R if c not in present)
        if not free:
            raise InvariantViolation(f"no color of {sorted(R)} is missing at pointer {x}")
        return prefer if prefer in free else free[0]

    def _kempe_to_free(self, h: EdgeColoring, x: int, s: int, beta: int) -> EdgeColoring:
        if beta == s:
            return h
        chain = kempe_chain(self.g, h, x, s, beta)
        return kempe_interchange(self.g, h, chain)

    # -- invariant checks (conditions 1a-1c, 2a-2b, 3a-3c) -------------------------

    def _check_pointer(self, h: EdgeColoring, x: int, missing: int, label: str,
                       allow_present: bool = False) -> None:
        cnt = _count(self.g, h, x)
        if cnt.get(self.t, 0) != 2:
            raise InvariantViolation(f"{label}: pointer {x} has {cnt.get(self.t, 0)} edges colored t, not 2")
        if cnt.get(missing, 0) and not allow_present:
            raise InvariantViolation(f"{label}: color {missing} is not missing at pointer {x}")
        if any(k > 1 for c, k in cnt.items() if c != self.t):
            raise InvariantViolation(f"{label}: a non-t color repeats at pointer {x}")

    def _check_elsewhere(self, h: EdgeColoring, skip: set[int], label: str) -> None:
        for x, c in violations(self.g, h):
            if x not in skip:
                raise InvariantViolation(f"{label}: color {c} repeats at vertex {x}")

    def _check_step(self, st: StepState) -> None:
        if not self.check:
            return
        h, t = st.scratch, self.t
        if not (st.s_prev in st.R and st.s_cur in st.R and len(st.R) == self.q and t not in st.R):
            raise InvariantViolation(f"register set R={sorted(st.R)} does not hold s_i and s_(i+1)")
        outside = [j for j in range(1, t + 1) if j not in st.R and j != t]
        for j in outside:
            if h.color_class(j) != st.proper.color_class(j):
                raise InvariantViolation(f"(1a) class {j} differs from the last proper coloring")
        x = self.trail.w(st.pos)
        self._check_pointer(h, x, st.s_cur, "(1b)")
        self._check_elsewhere(h, {x}, "(1c)")
        if set(h.color_class(t)) != self._expected_t(st.pos):
            raise InvariantViolation("(1c) class t is not the expected prefix flip")

    # -- the algorithm -----------------------------------------------------------------

    def run(self) -> list[EdgeColoring]:
        t, q, tr, N = self.t, self.q, self.trail, self.trail.length
        h = self.start
        s0 = h[tr.e(2)]
        end0 = self._run(h, 0, s0)
        h = self._swap(h, 0, end0, s0)
        if end0 == N:
            R0 = fill_colors({s0, self.c0}, q, t)
            self._emit(self._correct(h, R0), "step 0, single run")
            return self.out
        if q == 2:
            R0 = fill_colors({s0, self.c0}, 2, t)
            h = self._correct(h, R0)
            x = tr.w(end0)
            beta = self._choose_beta(h, x, R0, s0)
            h = self._kempe_to_free(h, x, s0, beta)
            other = next(c for c in R0 if c != s0)
            st = StepState(0, self.f, h, other, s0, self.c0, beta, end0, R0, "after step 0")
            return self._loop(st)
        s1 = h[tr.e(end0 + 2)]
        end1 = self._run(h, end0, s1)
        h = self._swap(h, end0, end1, s1)
        R0 = fill_colors({s0, s1, self.c0}, q, t)
        h = self._correct(h, R0)
        if end1 == N:
            self._emit(h, "step 0, two runs")
            return self.out
        x = tr.w(end1)
        beta = self._choose_beta(h, x, R0, s1)
        h = self._kempe_to_free(h, x, s1, beta)
        st = StepState(0, self.f, h, s0, s1, self.c0, beta, end1, R0, "after step 0")
        return self._loop(st)

    def _loop(self, st: StepState) -> list[EdgeColoring]:
        t, tr, N = self.t, self.trail, self.trail.length
        while True:
            self._check_step(st)
            if self.observer:
                self.observer(st)
            self.states.append(st)
            h, pos = st.scratch, st.pos
            proper = self._correct(h, (st.R | {t}) - {st.s_prev})
            self._emit(proper, f"step {st.step + 1} checkpoint")
            # (A) or (B)
            pos2, h2 = pos, h
            if h[tr.e(pos + 2)] == st.s_cur:
                endL = self._run(h, pos, st.s_cur)
                h2 = self._swap(h, pos, endL, st.s_cur)
                if endL == N:
                    self._emit(h2, "final run (B1)")
                    return self.out
                pos2 = endL
            x2 = tr.w(pos2)
            if self.check:
                self._check_pointer(h2, x2, st.s_cur, "(2a)")
                self._check_elsewhere(h2, {x2}, "(2b)")
            s_next = h2[tr.e(pos2 + 2)]
            endP = self._run(h2, pos2, s_next)
            h3 = self._swap(h2, pos2, endP, s_next)
            R_next = st.R if s_next in st.R else (st.R - {st.s_prev}) | {s_next}
            if endP == N:
                if violations(self.g, h3):
                    h3 = self._correct(h3, R_next)
                self._emit(h3, "final run (2.1)")
                return self.out
            x3 = tr.w(endP)
            closed = x3 == x2
            if self.check:
                self._check_pointer(h3, x3, s_next, "(3a)", allow_present=closed)
                cnt = _count(self.g, h3, x2)
                if not closed and (cnt.get(st.s_cur, 0) or cnt.get(s_next, 0) > 2
                                   or any(k > 1 for c, k in cnt.items() if c not in (t, s_next))):
                    raise InvariantViolation(f"(3b) unexpected colors at {x2}")
                self._check_elsewhere(h3, {x2, x3}, "(3c)")
            h4 = self._correct(h3, R_next)
            beta = self._choose_beta(h4, x3, R_next, s_next)
            h5 = self._kempe_to_free(h4, x3, s_next, beta)
            st = StepState(st.step + 1, proper, h5, st.s_cur, s_next, self.c0, beta, endP, R_next,
                           "closed run" if closed else "")


def run_algorithm(
    g: Graph, f: EdgeColoring, trail: Trail, q: int, c0: int | None = None,
    prerecolor: Mapping[int, int] | None = None,
    observer: Callable[[StepState], None] | None = None,
    check: bool = True,
) -> list[EdgeColoring]:
    """Proper colorings f = f_0, f_1, ..., f_k; class t of f_k is that of f flipped along the trail."""
    return TrailRunner(g, f, trail, q, c0, prerecolor, observer, check).run()


def path_trail(vertices: Sequence[int], edges: Sequence[int]) -> Trail:
    return Trail(tuple(vertices), tuple(edges))
