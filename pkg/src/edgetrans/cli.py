"""Command-line front end: ``edgetrans <subcommand> ...``.

Every result is printed as one JSON document on stdout (or written with
``-o``).  Exit codes: 0 success, 1 a verification failed, 2 hypothesis
refuted or precondition broken, 3 budget exceeded or search exhausted,
4 unreadable input or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import constructions as cons
from . import families
from .corpus import coloring_pair, engine_corpus
from .edge_coloring import EdgeColoring, chromatic_index, difference_graph
from .errors import (
    BudgetExceeded,
    EdgeTransError,
    GraphFormatError,
    HypothesisRefuted,
    PreconditionError,
)
from .graph_core import Graph, block_decomposition, complement, degeneracy, girth
from .recognizers import certificates, in_A_q, is_bipartite, is_planar
from .trans_index import (
    DEFAULT_CAP,
    WitnessNotFound,
    adjacency_dot,
    chi_trans_exact,
    enumerate_colorings,
    witness_search,
)
from .tracecheck import check_trace
from .transform import transform_report
from .vertex_coloring import chromatic_number, enumerate_partitions

EXIT_OK, EXIT_FAIL, EXIT_REFUTED, EXIT_BUDGET, EXIT_PARSE = 0, 1, 2, 3, 4
AQ_LEVELS = (3, 4, 7)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors share the parse-error code
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read_json(path: str) -> object:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON: {exc}") from None


def _graph(path: str) -> Graph:
    return Graph.from_dict(_read_json(path))


def _coloring(path: str) -> EdgeColoring:
    return EdgeColoring.from_dict(_read_json(path))


def _emit(args: argparse.Namespace, payload: object) -> None:
    text = json.dumps(payload, separators=(",", ":"), sort_keys=False)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _write_dot(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text if text.endswith("\n") else text + "\n")


# -- analyze -------------------------------------------------------------------------


def analyze(g: Graph, budget: int | None) -> dict:
    chi, _ = chromatic_index(g, budget) if g.num_edges else (0, None)
    bd = block_decomposition(g)
    gi = girth(g)
    aq = {}
    for q in AQ_LEVELS:
        try:
            aq[str(q)] = in_A_q(g, q, budget=budget).to_dict()
        except BudgetExceeded as exc:
            aq[str(q)] = {"q": q, "verdict": "budget_exceeded", "detail": str(exc)}
    return {
        "vertices": g.num_vertices,
        "edges": g.num_edges,
        "multigraph": g.multigraph,
        "max_degree": g.max_degree,
        "chi_prime": chi,
        "class": 1 if chi == g.max_degree else 2,
        "bipartite": bool(is_bipartite(g)),
        "planar": is_planar(g),
        "blocks": [sorted(b) for b in bd.blocks],
        "cutvertices": sorted(bd.cutvertices),
        "girth": None if math.isinf(gi) else int(gi),
        "degeneracy": degeneracy(g),
        "certificates": [c.to_dict() for c in certificates(g)],
        "A_q": aq,
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    _emit(args, analyze(g, args.budget))
    _write_dot(args.dot, g.to_dot())
    return EXIT_OK


# -- transform / verify -------------------------------------------------------------------


def cmd_transform(args: argparse.Namespace) -> int:
    g, f, goal = _graph(args.graph), _coloring(args.start), _coloring(args.goal)
    if args.q < 3:
        raise PreconditionError("--q must be at least 3")
    rep = transform_report(g, f, goal, args.q, hints=args.hint, certify=not args.unchecked)
    _emit(args, rep.trace.to_dict())
    if args.dot:
        t = f.t
        dg = difference_graph(g, f, goal, t) if g.num_edges else None
        labels = {e: f[e] for e in dg.edges} if dg else {}
        sub = g.edge_subgraph(dg.edges, keep_vertices=False) if dg else g
        _write_dot(args.dot, sub.to_dot(labels))
    if args.report:
        moves = [{"level": m.level, "kind": m.kind, "handler": m.handler, "steps": m.steps}
                 for m in rep.moves]
        Path(args.report).write_text(json.dumps({"mode": rep.mode, "moves": moves}) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graph, trace = _read_json(args.graph), _read_json(args.trace)
    start = _read_json(args.start) if args.start else None
    end = _read_json(args.end) if args.end else None
    res = check_trace(graph, trace, args.width, start, end)
    _emit(args, {"ok": res.ok, "step": res.step, "reason": res.reason})
    return EXIT_OK if res.ok else EXIT_FAIL


# -- index / vertex index ------------------------------------------------------------------


def cmd_index(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    if args.dot and g.num_edges:
        t, _ = chromatic_index(g)
        space = enumerate_colorings(g, t, args.cap)
        rep = chi_trans_exact(g, space=space)
        _write_dot(args.dot, adjacency_dot(space, args.dot_n or max(rep.chi_trans - 1, 2)))
    else:
        rep = chi_trans_exact(g, cap=args.cap)
    _emit(args, rep.to_dict())
    return EXIT_OK


def cmd_vertex_index(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    chi, part = chromatic_number(g)
    parts = enumerate_partitions(g, args.k)
    out = {
        "chromatic_number": chi,
        "witness": part.to_dict(),
        "k": args.k,
        "partition_count": len(parts),
        "partitions": [p.to_dict() for p in parts[: args.limit]],
        # with exactly two partitions sharing no class, every move between them recolors all k classes
        "global_transformation_required": len(parts) == 2
        and not set(parts[0].classes) & set(parts[1].classes),
    }
    _emit(args, out)
    return EXIT_OK


# -- construct -----------------------------------------------------------------------------


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise PreconditionError(f"{args.family} needs --{' --'.join(missing)}")
    return [getattr(args, n) for n in names]


def construct(args: argparse.Namespace) -> dict:
    fam = args.family
    extra: dict = {}
    if fam in ("path", "cycle", "complete", "wheel", "prism"):
        (n,) = _need(args, "n")
        g = {"path": cons.path, "cycle": cons.cycle, "complete": cons.complete,
             "wheel": cons.wheel, "prism": cons.prism}[fam](n)
    elif fam in ("star", "parallel"):
        (k,) = _need(args, "k")
        g = cons.star(k) if fam == "star" else cons.parallel_edges(k)
    elif fam == "complete-bipartite":
        g = cons.complete_bipartite(*_need(args, "a", "b"))
    elif fam == "grid":
        g = cons.grid(*_need(args, "rows", "cols"))
    elif fam == "petersen":
        g = cons.petersen()
    elif fam == "cube":
        g = cons.cube()
    elif fam == "hpn":
        p, n = _need(args, "p", "n")
        g = cons.build_H(p, n)
        extra["blocks"] = cons.H_blocks(p, n)
    elif fam == "halin":
        if not args.graph:
            raise PreconditionError("halin needs --graph TREE.json")
        order = [int(x) for x in args.leaf_order.split(",")] if args.leaf_order else None
        g, cert = cons.halin(_graph(args.graph), order)
        extra["certificate"] = cert.to_dict()
    elif fam == "fg":
        if not args.graph:
            raise PreconditionError("fg needs --graph G.json")
        g, gmap = cons.build_F_G(_graph(args.graph))
        extra["gadget"] = gmap.to_dict()
    elif fam == "glued":
        if not args.graph:
            raise PreconditionError("glued needs --graph WITNESS.json")
        g = cons.glued_family(*_need(args, "rows", "cols"), _graph(args.graph))
    else:  # argparse restricts the choices
        raise PreconditionError(f"unknown family {fam}")
    if args.complement:
        g = complement(g)
    return {"graph": g.to_dict(), **extra} if args.with_extras else g.to_dict()


def cmd_construct(args: argparse.Namespace) -> int:
    out = construct(args)
    _emit(args, out)
    g = Graph.from_dict(out["graph"] if args.with_extras else out)
    _write_dot(args.dot, g.to_dot())
    return EXIT_OK


# -- witness -------------------------------------------------------------------------------

WITNESS_CLASSES = ("halin", "outerplanar", "planar-bipartite")


def _candidates(cls: str, max_vertices: int, max_degree: int):
    if cls == "halin":
        return families.halin_candidates(max_vertices, max_degree=max_degree)
    if cls == "outerplanar":
        return families.outerplanar_candidates(max_vertices, max_degree=max_degree)
    return families.planar_bipartite_candidates(min(max_vertices, 7), max_degree=max_degree)


def _witness_predicate(cls: str, index: int) -> Callable:
    if cls == "planar-bipartite":
        return lambda g, r: r.chi_trans == index and r.kempe_class_count >= 2
    return lambda g, r: r.chi_trans == index


def _probe(job: tuple[str, int, int, str, Graph, int]):
    """Worker: test one candidate; None when it is not a witness."""
    cls, index, cap, label, g, rig = job
    try:
        return witness_search([(label, g)], _witness_predicate(cls, index), rig, cap)
    except WitnessNotFound:
        return None


def find_witness(cls: str, index: int, max_vertices: int, max_degree: int = 4,
                 jobs: int = 1, cap: int = DEFAULT_CAP):
    """First witness in generation order.  With jobs > 1 candidates are tested
    in ordered batches, so the answer does not depend on ``jobs``."""
    rig = index - 1 if index >= 3 else None
    gen = _candidates(cls, max_vertices, max_degree)
    if jobs <= 1:
        return witness_search(gen, _witness_predicate(cls, index), rig, cap)
    tried = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            batch = [(cls, index, cap, label, g, rig) for label, g in _take(gen, 4 * jobs)]
            if not batch:
                raise WitnessNotFound(f"no witness among {tried} candidates")
            for k, res in enumerate(pool.map(_probe, batch)):
                if res is not None:
                    res.candidates_tried = tried + k + 1
                    return res
            tried += len(batch)


def _take(it, n: int) -> list:
    out = []
    for item in it:
        out.append(item)
        if len(out) == n:
            break
    return out


def cmd_witness(args: argparse.Namespace) -> int:
    max_degree = args.max_degree or (3 if args.cls == "planar-bipartite" else 4)
    w = find_witness(args.cls, args.index, args.max_vertices, max_degree, args.jobs, args.cap)
    rig = None
    if w.rigidity is not None:
        rig = {"subset_size": w.rigidity.subset_size, "rigid": w.rigidity.rigid.to_dict(),
               "other": w.rigidity.other.to_dict()}
    _emit(args, {"label": w.label, "graph": w.graph.to_dict(), "report": w.report.to_dict(),
                 "rigidity": rig, "candidates_tried": w.candidates_tried})
    _write_dot(args.dot, w.graph.to_dot())
    return EXIT_OK


# -- corpus --------------------------------------------------------------------------------


def cmd_corpus(args: argparse.Namespace) -> int:
    """Write seeded graphs and coloring pairs: NAME.graph.json, NAME.f.json, NAME.g.json."""
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    names = []
    for i, (label, g) in enumerate(engine_corpus(args.seed, args.per_family)):
        pair = coloring_pair(g, rng)
        if pair is None:  # Class 2: no Δ-coloring exists
            continue
        stem = f"g{i:04d}"
        (out / f"{stem}.graph.json").write_text(g.to_json() + "\n")
        (out / f"{stem}.f.json").write_text(pair[0].to_json() + "\n")
        (out / f"{stem}.g.json").write_text(pair[1].to_json() + "\n")
        names.append({"stem": stem, "label": label})
    _emit(args, {"seed": args.seed, "items": names})
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgetrans", description="Transformations between proper edge colorings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
        return sp

    sp = add("analyze", cmd_analyze, "Degrees, chromatic index, blocks, class certificates and A(q) verdicts.")
    sp.add_argument("graph")
    sp.add_argument("--budget", type=int, default=None, help="search node budget")
    sp.add_argument("--dot", help="also write the graph as DOT")

    sp = add("transform", cmd_transform, "Trace between two proper Δ-colorings.")
    sp.add_argument("graph")
    sp.add_argument("start")
    sp.add_argument("goal")
    sp.add_argument("--q", type=int, default=3)
    sp.add_argument("--unchecked", action="store_true", help="skip certifying the graph class")
    sp.add_argument("--hint", action="append", default=[], help="class tag that cannot be recognized")
    sp.add_argument("--dot", help="write the top-level difference graph as DOT")
    sp.add_argument("--report", help="write the list of moves as JSON")

    sp = add("verify", cmd_verify, "Check a trace independently of the engine.")
    sp.add_argument("graph")
    sp.add_argument("trace")
    sp.add_argument("--width", type=int, default=None, help="default: the trace's own n")
    sp.add_argument("--start")
    sp.add_argument("--end")

    sp = add("index", cmd_index, "Exact transformation index by enumeration.")
    sp.add_argument("graph")
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="maximum number of colorings")
    sp.add_argument("--dot", help="write the n-adjacency meta-graph as DOT")
    sp.add_argument("--dot-n", type=int, default=None)

    sp = add("construct", cmd_construct, "Build a graph from a named family.")
    sp.add_argument("family", choices=["path", "cycle", "complete", "complete-bipartite", "star",
                                       "petersen", "cube", "prism", "grid", "parallel", "wheel",
                                       "halin", "hpn", "fg", "glued"])
    for name in ("n", "p", "k", "a", "b", "rows", "cols"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--graph", help="input graph (tree for halin, base graph for fg, witness for glued)")
    sp.add_argument("--leaf-order", help="comma-separated leaf order for halin")
    sp.add_argument("--complement", action="store_true")
    sp.add_argument("--with-extras", action="store_true", help="wrap the graph with family metadata")
    sp.add_argument("--dot")

    sp = add("witness", cmd_witness, "Search a family for a graph with a given index.")
    sp.add_argument("--class", dest="cls", choices=WITNESS_CLASSES, required=True)
    sp.add_argument("--index", type=int, required=True)
    sp.add_argument("--max-vertices", type=_positive, required=True)
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--dot")

    sp = add("vertex-index", cmd_vertex_index, "Proper vertex k-partitions and whether they force global moves.")
    sp.add_argument("graph")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--limit", type=int, default=10, help="partitions to print")

    sp = add("corpus", cmd_corpus, "Write a seeded corpus of graphs and coloring pairs.")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--per-family", type=_positive, default=10)
    sp.add_argument("--out", required=True)
    return p


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisRefuted, PreconditionError) as exc:
        detail = {"error": type(exc).__name__, "message": str(exc)}
        wit = getattr(exc, "witness", None)
        if isinstance(wit, Graph):
            detail["witness"] = wit.to_dict()
        print(json.dumps(detail), file=sys.stderr)
        return EXIT_REFUTED
    except (BudgetExceeded, WitnessNotFound) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EdgeTransError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
