"""``histlab`` command-line interface.

Graphs travel as graph6 lines on stdin/stdout.  Per-graph records are tab
separated; a one-line summary goes to stderr.  Exit codes: 0 success,
2 malformed input, 64 usage error.  Verdicts never change the exit code.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import constructions as cons
from .classify import Fragment, classify, is_hist_critical, is_k1_histonian, verify_fragment
from .generate import GenConstraints, generate
from .graph import Graph, Graph6Error, GraphError, from_graph6, is_planar, read_graph6_lines, to_graph6
from .search import count_hists, has_hist
from .tables import TABLES

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    command: str
    records: list[tuple[int, str, str]] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)

    def add(self, lineno: int, g6: str, value: str) -> None:
        self.records.append((lineno, g6, value))

    def tallies(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for _, _, value in self.records:
            out[value] = out.get(value, 0) + 1
        return out

    def summary(self) -> str:
        elapsed = time.perf_counter() - self.started
        parts = [f"{self.command}: {len(self.records)} graph(s)"]
        if self.command == "count":
            parts.append(f"total {sum(int(v) for _, _, v in self.records)}")
        elif self.records:
            parts.append(", ".join(f"{k}={v}" for k, v in sorted(self.tallies().items())))
        parts.append(f"{elapsed:.2f}s")
        return "; ".join(parts)


# -- per-graph workers (module level so process pools can pickle them) ---------------


def _count_one(item):
    g, exempt, stop = item
    return str(count_hists(g, [v for v in exempt if v < g.n], stop))


def _classify_one(g: Graph) -> str:
    c = classify(g)
    return f"{c.verdict.value}\tK1={'true' if c.k1_histonian else 'false'}"


def _filter_one(item) -> str:
    g, predicate, girth_min, planar, min_hists = item
    if girth_min is not None and g.girth() < girth_min:
        return ""
    if planar and not is_planar(g):
        return ""
    if predicate == "critical" and not is_hist_critical(g):
        return ""
    if predicate == "hist-free" and has_hist(g):
        return ""
    if predicate == "k1" and not is_k1_histonian(g):
        return ""
    if min_hists is not None and count_hists(g, stop_after=min_hists) < min_hists:
        return ""
    return "1"


def _parallel_map(func: Callable, items: Iterable, jobs: int) -> Iterator:
    """Order-preserving map; ``jobs <= 1`` runs in-process."""
    if jobs <= 1:
        for item in items:
            yield func(item)
        return
    items = list(items)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(func, items, chunksize=max(1, len(items) // (8 * jobs)))


# -- input handling ---------------------------------------------------------------------


def _open_input(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="ascii")


def _read_graphs(path: Optional[str]) -> list[tuple[int, Graph]]:
    """Parse the whole stream up front so a bad line aborts before any output."""
    handle = _open_input(path)
    try:
        return list(read_graph6_lines(handle))
    finally:
        if handle is not sys.stdin:
            handle.close()


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _default_jobs() -> int:
    raw = os.environ.get("HISTLAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# -- subcommands --------------------------------------------------------------------------


def _emit_records(args, report: RunReport, graphs, values) -> None:
    out = sys.stdout
    for (lineno, g), value in zip(graphs, values):
        g6 = to_graph6(g)
        report.add(lineno, g6, value.split("\t")[0])
        out.write(f"{g6}\t{value}\n")


def cmd_count(args) -> int:
    graphs = _read_graphs(args.input)
    report = RunReport("count")
    items = ((g, tuple(args.exempt), args.stop_after) for _, g in graphs)
    _emit_records(args, report, graphs, _parallel_map(_count_one, items, args.jobs))
    _finish(args, report)
    return EXIT_OK


def cmd_classify(args) -> int:
    graphs = _read_graphs(args.input)
    report = RunReport("classify")
    _emit_records(args, report, graphs, _parallel_map(_classify_one, (g for _, g in graphs), args.jobs))
    _finish(args, report)
    return EXIT_OK


def cmd_filter(args) -> int:
    graphs = _read_graphs(args.input)
    report = RunReport("filter")
    items = ((g, args.predicate, args.girth_min, args.planar, args.min_hists) for _, g in graphs)
    for (lineno, g), keep in zip(graphs, _parallel_map(_filter_one, items, args.jobs)):
        g6 = to_graph6(g)
        report.add(lineno, g6, "kept" if keep else "dropped")
        if keep:
            sys.stdout.write(g6 + "\n")
    _finish(args, report)
    return EXIT_OK


def _fragment_by_name(name: str) -> Fragment:
    makers = {"f1": cons.fragment_f1, "f2": cons.fragment_f2}
    if name not in makers:
        raise UsageError(f"unknown fragment {name!r} (choose f1 or f2)")
    return makers[name]()


def _int_params(params: Sequence[str], count: Optional[int] = None) -> list[int]:
    """Integers, with ``a-b`` expanding to the inclusive range."""
    out: list[int] = []
    for p in params:
        try:
            if "-" in p.lstrip("-"):
                a, b = p.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(p))
        except ValueError:
            raise UsageError(f"expected an integer or range, got {p!r}")
    if count is not None and len(out) != count:
        raise UsageError(f"expected {count} integer parameter(s)")
    if not out:
        raise UsageError("missing integer parameter")
    return out


def _make_graphs(family: str, params: list[str]) -> Iterator[Graph]:
    if family in ("antiprism", "gk", "hk"):
        maker = {"antiprism": cons.antiprism, "gk": cons.g_k, "hk": cons.h_k}[family]
        for k in _int_params(params):
            yield maker(k).graph
    elif family in ("f1", "f2"):
        if params:
            raise UsageError(f"{family} takes no parameters")
        f = _fragment_by_name(family)
        print(f"# terminals x={f.x} y={f.y}", file=sys.stderr)
        yield f.graph
    elif family == "chain":
        if len(params) < 2:
            raise UsageError("chain needs at least two fragment names")
        yield cons.chain([_fragment_by_name(p) for p in params])
    elif family == "glue":
        if len(params) != 6:
            raise UsageError("glue needs: G6_G XG YG G6_H XH YH")
        g, h = from_graph6(params[0]), from_graph6(params[3])
        xg, yg = _int_params(params[1:3], 2)
        xh, yh = _int_params(params[4:6], 2)
        yield cons.glue(g, xg, yg, h, xh, yh)
    elif family in ("linegraph", "truncate", "inflate-k4", "subdivide"):
        transform = {"linegraph": cons.line_graph, "truncate": cons.truncate_cubic,
                     "inflate-k4": cons.inflate_k4}.get(family)
        if family == "subdivide":
            if not params or len(params) % 2:
                raise UsageError("subdivide needs edge endpoints: U V [U V ...]")
            ends = _int_params(params)
            pairs = list(zip(ends[::2], ends[1::2]))

            def transform(g: Graph) -> Graph:
                for u, v in pairs:
                    g = g.subdivide_edge(u, v)
                return g
        elif params:
            raise UsageError(f"{family} reads graph6 from stdin and takes no parameters")
        for _, g in read_graph6_lines(sys.stdin):
            yield transform(g)
    else:
        raise UsageError(f"unknown family {family!r}")


def cmd_make(args) -> int:
    for g in _make_graphs(args.family, args.params):
        sys.stdout.write(to_graph6(g) + "\n")
    return EXIT_OK


def _fmt_edges(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(edges)) if edges else "-"


def cmd_verify_fragment(args) -> int:
    if args.graph is not None:
        g = from_graph6(args.graph)
    else:
        graphs = _read_graphs(None)
        if not graphs:
            raise UsageError("no graph given")
        g = graphs[0][1]
    f = Fragment(g, args.x, args.y)
    r = verify_fragment(f)
    out = sys.stdout
    verdict = lambda ok: "PASS" if ok else "FAIL"  # noqa: E731
    out.write(f"property1\t{verdict(r.p1)}\t{len(r.excluded_hists)} excluded HIST(s)\n")
    for t in r.excluded_hists:
        out.write(f"  tree\t{_fmt_edges(t)}\n")
    out.write(f"property2\t{verdict(r.p2)}\n")
    for name, w in zip(("minus_x", "minus_y"), r.p2_witnesses):
        out.write(f"  {name}\t{_fmt_edges(w) if w is not None else 'none'}\n")
    out.write(f"property3\t{verdict(r.p3)}\n")
    for v, w in sorted(r.p3_witnesses.items()):
        if w is None:
            out.write(f"  v={v}\tnone\n")
        else:
            out.write(f"  v={v}\t({w[0]})\t{_fmt_edges(w[1])}\n")
    out.write(f"property4\t{verdict(r.p4)}\t{len(r.p4_counterexamples)} split HISF(s)\n")
    return EXIT_OK


def cmd_tables(args) -> int:
    progress = None if args.quiet else (lambda msg: print(msg, file=sys.stderr, flush=True))
    table = TABLES[args.which](args.max_order, progress=progress)
    sys.stdout.write(table.format() + "\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    c = GenConstraints(order=args.order, min_degree=args.min_degree, max_degree=args.max_degree,
                       regular_k=args.regular, connectivity_min=args.connectivity,
                       girth_min=args.girth_min, planar_only=args.planar)
    n = 0
    started = time.perf_counter()
    for g in generate(c):
        sys.stdout.write(to_graph6(g) + "\n")
        n += 1
    if not args.quiet:
        print(f"gen: {n} graph(s); {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return EXIT_OK


def _finish(args, report: RunReport) -> None:
    sys.stdout.flush()
    if not args.quiet:
        print(report.summary(), file=sys.stderr)


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="histlab", description="Homeomorphically irreducible spanning tree toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, stream=True):
        sp.add_argument("-q", "--quiet", action="store_true", help="no summary on stderr")
        if stream:
            sp.add_argument("input", nargs="?", help="graph6 file (default stdin)")
            sp.add_argument("--jobs", type=_positive, default=_default_jobs(),
                            help="worker processes (default $HISTLAB_JOBS or 1)")

    sp = sub.add_parser("count", help="count HISTs of each input graph")
    common(sp)
    sp.add_argument("--exempt", type=_int_list, default=[], help="vertices allowed degree 2, e.g. 0,5")
    sp.add_argument("--stop-after", type=_positive, default=None)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("classify", help="HAS_HIST | HIST_FREE | HIST_CRITICAL per graph")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("filter", help="pass through graphs meeting every given predicate")
    common(sp)
    sp.add_argument("--predicate", choices=("critical", "hist-free", "k1"))
    sp.add_argument("--girth-min", type=_positive, default=None)
    sp.add_argument("--planar", action="store_true")
    sp.add_argument("--min-hists", type=_positive, default=None)
    sp.set_defaults(func=cmd_filter)

    sp = sub.add_parser("make", help="emit a constructed graph as graph6")
    sp.add_argument("family", help="antiprism, gk, hk, f1, f2, chain, glue, linegraph, truncate, "
                                   "inflate-k4, subdivide")
    sp.add_argument("params", nargs="*")
    sp.set_defaults(func=cmd_make)

    sp = sub.add_parser("verify-fragment", help="check the four fragment properties")
    sp.add_argument("graph", nargs="?", help="graph6 (default: first stdin line)")
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--y", type=int, required=True)
    sp.set_defaults(func=cmd_verify_fragment)

    sp = sub.add_parser("tables", help="recompute an enumeration table")
    sp.add_argument("which", choices=sorted(TABLES))
    sp.add_argument("--max-order", type=_positive, default=None)
    sp.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("gen", help="isomorph-free graph generation")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--min-degree", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--regular", type=int)
    sp.add_argument("--connectivity", type=int)
    sp.add_argument("--girth-min", type=int)
    sp.add_argument("--planar", action="store_true")
    sp.add_argument("-q", "--quiet", action="store_true")
    sp.set_defaults(func=cmd_gen)
    return p


_TABLE_DEFAULT_ORDER = {"t1": 9, "t2": 10, "t3": 10, "t4": 10}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "tables" and args.max_order is None:
        args.max_order = _TABLE_DEFAULT_ORDER[args.which]
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"histlab: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, GraphError, ValueError) as exc:
        print(f"histlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
