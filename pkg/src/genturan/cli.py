"""Command-line front end.

Graphs are passed as graph6 strings or ``@file`` references, hypergraphs as
files in the ``n m`` text format.  Exit codes: 0 success, 2 usage error,
3 precondition violation, 4 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass, field

from . import berge as berge_mod
from .classifier import VERDICT_HEADER, classify_linearity
from .constructions import FAMILY_KINDS, FamilySpec
from .core import count_copies
from .counting import (
    PREDICTOR_IDS,
    asymptotic_predictor,
    certified_c4_bound,
    certified_cycle_bound,
    certified_path_bound,
    count_cliques,
    count_cycles,
    count_paths,
    greedy_lower_certificates,
)
from .errors import GenTuranError, LimitExceededError, PreconditionError
from .extremal import (
    DEFAULT_LIMIT,
    LEDGER_HEADER,
    RandomConstructionParams,
    append_ledger,
    exact_extremal,
    heuristic_lower,
    random_deletion_lower,
)
from .gf import is_prime_power
from .graph import Graph
from .io import format_hypergraph, parse_hypergraph, read_graph_arg, to_dot, to_graph6

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_LIMIT = 4

FORMATS = ("csv", "text", "graph6", "dot")
COUNT_HEADER = ["formula_id", "inputs", "value", "exact_count", "ratio"]
SWEEP_FUREDI_HEADER = [
    "q", "t", "n", "k", "exact_count", "certified_bound", "greedy_certificate",
    "predictor", "count_bound_ratio", "count_predictor_ratio", "status",
]
SWEEP_EXTREMAL_HEADER = ["n", "value", "method", "witness_g6", "status"]
SANDWICH_HEADER = ["n", "r", "F_g6", "ex_Kr_F", "ex_r_berge_F", "upper", "holds"]

CSV_HELP = """CSV columns:
  count, bound:       formula_id, inputs, value, exact_count, ratio
  extremal, berge extremal: n, H_g6, F_g6, value, method, witness_g6, seed, wall_time
  classify:           k, F_g6, verdict, r0, certificate, parameters
  berge sandwich:     n, r, F_g6, ex_Kr_F, ex_r_berge_F, upper, holds
  sweep furedi:       q, t, n, k, exact_count, certified_bound, greedy_certificate,
                      predictor, count_bound_ratio, count_predictor_ratio, status
  sweep extremal:     n, value, method, witness_g6, status
"""


class UsageError(GenTuranError):
    pass


@dataclass
class RunConfig:
    command: str
    verb: str | None = None
    params: dict = field(default_factory=dict)
    seed: int = 0
    workers: int = 1
    out: str | None = None
    format: str | None = None
    limit: int | None = None


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--seed", type=int, default=0, help="64-bit seed for randomised commands (default 0)")
    p.add_argument("--workers", type=int, default=1, help="cap on worker processes")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--format", choices=FORMATS, help="output format")
    p.add_argument("--limit", type=int, help="exhaustive-search vertex limit")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="genturan",
        description="Generalized Turán numbers: constructions, counts, bounds and exact searches.",
        epilog=CSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("construct", help="build a named graph family member")
    p.add_argument("kind", choices=FAMILY_KINDS)
    for name in ("n", "k", "q", "t", "r", "a", "b", "c", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--base", help="base graph (graph6) for blowup")
    p.add_argument("--sizes", help="comma-separated part sizes for blowup")
    _common(p)

    p = sub.add_parser("count", help="count paths, cycles, cliques or copies of a graph")
    p.add_argument("pattern", choices=("path", "cycle", "clique", "graph"))
    p.add_argument("--g", required=True, help="host graph (graph6 or @file)")
    p.add_argument("--k", type=int, help="pattern size for path/cycle/clique")
    p.add_argument("--h", help="pattern graph for 'graph'")
    _common(p)

    p = sub.add_parser("bound", help="certified bounds, greedy certificates and predictors")
    p.add_argument("formula", choices=("cycle", "path", "c4", "greedy", "asymptotic"))
    for name in ("n", "e", "t", "k", "q"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--id", choices=PREDICTOR_IDS, help="predictor id for 'asymptotic'")
    p.add_argument("--g", help="host graph; supplies n, e and the exact count")
    _common(p)

    p = sub.add_parser("extremal", help="exact or heuristic ex(n, H, F)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", required=True, help="counted graph H")
    p.add_argument("--f", action="append", default=[], help="forbidden graph (repeatable)")
    p.add_argument("--method", choices=("exact", "heuristic", "random"), default="exact")
    p.add_argument("--iterations", type=int, default=2000)
    p.add_argument("--c", type=float, default=1.0, help="edge-probability constant for 'random'")
    p.add_argument("--ledger", help="append the record to this CSV ledger")
    _common(p)

    p = sub.add_parser("classify", help="linear or quadratic growth of ex(n, C_k, F)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", required=True)
    _common(p)

    p = sub.add_parser("berge", help="Berge detection, reductions and exact Berge-Turán numbers")
    p.add_argument("verb", choices=("detect", "to-graph", "from-cliques", "extremal", "sandwich"))
    p.add_argument("--hyper", help="hypergraph file ('-' for stdin)")
    p.add_argument("--g", help="graph for from-cliques")
    p.add_argument("--mode", default="all", help="'all' or a uniformity r")
    p.add_argument("--f", action="append", default=[], help="pattern graph6, or C2 (repeatable)")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--ledger", help="append the record to this CSV ledger")
    _common(p)

    p = sub.add_parser("sweep", help="tables over a parameter range")
    p.add_argument("target", choices=("furedi", "extremal"))
    p.add_argument("--q", default="", help="furedi: q values, e.g. 3,4,5,7 or 3..9")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--n", default="", help="extremal: n values, e.g. 3..8")
    p.add_argument("--h", help="extremal: counted graph")
    p.add_argument("--f", action="append", default=[], help="extremal: forbidden graph")
    _common(p)
    return parser


GLOBAL_KEYS = ("command", "seed", "workers", "out", "format", "limit")
GRAPH_KEYS = ("g", "h", "base")


def parse_range(text: str) -> list[int]:
    """'3..8' (inclusive), '3,4,7', or '' for the empty range."""
    text = text.strip()
    if not text:
        return []
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def _check_graph(name: str, value: str) -> None:
    try:
        read_graph_arg(value)
    except (PreconditionError, ValueError, OSError, IndexError) as exc:
        raise UsageError(f"--{name}: malformed graph6 ({exc})") from None


def _validate_construct(params: dict) -> None:
    kind = params["kind"]
    if kind == "furedi":
        q, t = params.get("q"), params.get("t")
        if q is None or t is None:
            raise UsageError("furedi needs --q and --t")
        if not is_prime_power(q):
            raise PreconditionError("q a prime power", f"q not a prime power: {q}")
        if t < 2 or (q - 1) % (t - 1):
            raise PreconditionError("(t-1) divides (q-1)", f"q={q}, t={t}")


def parse_args(argv) -> RunConfig:
    """Validate ``argv`` into a :class:`RunConfig`.

    Raises :class:`UsageError` for unknown commands, flags or malformed
    graph6, and :class:`PreconditionError` for parameter constraint failures.
    """
    parser = _build_parser()
    ns = parser.parse_args(list(argv))
    if ns.command is None:
        raise UsageError("missing command")
    if not 0 <= ns.seed < 2**64:
        raise UsageError("--seed must fit in 64 bits")
    if ns.workers < 1:
        raise UsageError("--workers must be >= 1")
    params = {k: v for k, v in vars(ns).items() if k not in GLOBAL_KEYS}
    for key in GRAPH_KEYS:
        if params.get(key):
            _check_graph(key, params[key])
    for value in params.get("f", []) if isinstance(params.get("f"), list) else [params.get("f")]:
        if value and not (ns.command == "berge" and value == "C2"):
            _check_graph("f", value)
    verb = None
    if ns.command == "construct":
        verb = ns.kind
        _validate_construct(params)
    elif ns.command == "berge":
        verb = ns.verb
    elif ns.command in ("count", "bound", "sweep"):
        verb = params.get("pattern") or params.get("formula") or params.get("target")
    return RunConfig(ns.command, verb, params, ns.seed, ns.workers, ns.out, ns.format, ns.limit)


# ---------------------------------------------------------------------------
# command handlers; each returns the text to emit


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _ratio(num, den) -> str:
    if num is None or den in (None, 0):
        return ""
    return f"{float(num) / float(den):.6g}"


def _inputs(d: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in d.items())


def _need(params, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join(f"--{n}" for n in missing))


def _construct(cfg: RunConfig) -> str:
    p = cfg.params
    kind = p["kind"]
    needed = {
        "turan": ("n", "k"),
        "furedi": ("q", "t"),
        "c_star": ("k", "r"),
        "c_double_star": ("k", "r"),
        "banana": ("t", "r"),
        "q_graph": ("k", "r", "t"),
        "r_graph": ("k", "r", "a", "b", "c", "d"),
        "cycle": ("k",),
    }
    if kind == "blowup":
        _need(p, "base", "sizes")
        try:
            sizes = tuple(int(x) for x in p["sizes"].split(","))
        except ValueError:
            raise UsageError("--sizes must be comma-separated integers") from None
        spec = FamilySpec("blowup", sizes, read_graph_arg(p["base"]))
    else:
        _need(p, *needed[kind])
        spec = FamilySpec(kind, tuple(p[n] for n in needed[kind]))
    g = spec.build()
    fmt = cfg.format or "graph6"
    if fmt == "dot":
        return to_dot(g, kind)
    if fmt == "text":
        return f"n={g.n} m={g.edge_count}\n" + "".join(f"{u} {v}\n" for u, v in g.edges())
    if fmt == "csv":
        return _csv(["kind", "parameters", "n", "m", "graph6"], [[kind, ",".join(map(str, spec.parameters)), g.n, g.edge_count, to_graph6(g)]])
    return to_graph6(g) + "\n"


def _count(cfg: RunConfig) -> str:
    p = cfg.params
    g = read_graph_arg(p["g"])
    pattern = p["pattern"]
    if pattern == "graph":
        _need(p, "h")
        value = count_copies(read_graph_arg(p["h"]), g).value
        inputs = {"n": g.n, "h": p["h"]}
    else:
        _need(p, "k")
        fn = {"path": count_paths, "cycle": count_cycles, "clique": count_cliques}[pattern]
        value = fn(g, p["k"]).value
        inputs = {"n": g.n, "k": p["k"]}
    if cfg.format == "text":
        return f"{value}\n"
    return _csv(COUNT_HEADER, [[f"count-{pattern}", _inputs(inputs), value, value, "1"]])


def _bound_rows(p) -> list[list]:
    formula = p["formula"]
    g = read_graph_arg(p["g"]) if p.get("g") else None
    n = g.n if g is not None else p.get("n")
    e = g.edge_count if g is not None else p.get("e")
    rows = []

    def add(report, exact):
        rows.append([report.formula_id, _inputs(report.inputs), report.value, "" if exact is None else exact, _ratio(exact, report.value)])

    if formula == "cycle":
        _need({"n": n, "t": p["t"], "k": p["k"], "e": e}, "n", "t", "k", "e")
        add(certified_cycle_bound(n, e, p["t"], p["k"]), count_cycles(g, p["k"]).value if g else None)
    elif formula == "path":
        _need({"n": n, "t": p["t"], "k": p["k"], "e": e}, "n", "t", "k", "e")
        add(certified_path_bound(n, e, p["t"], p["k"]), count_paths(g, p["k"]).value if g else None)
    elif formula == "c4":
        _need({"n": n, "t": p["t"]}, "n", "t")
        add(certified_c4_bound(n, p["t"]), count_cycles(g, 4).value if g else None)
    elif formula == "greedy":
        _need(p, "q", "t", "k")
        path_rep, cycle_rep = greedy_lower_certificates(p["q"], p["t"], p["k"])
        add(path_rep, count_paths(g, p["k"]).value if g else None)
        if cycle_rep is not None:
            add(cycle_rep, count_cycles(g, p["k"]).value if g else None)
    else:
        _need({"id": p.get("id"), "n": n, "t": p["t"]}, "id", "n", "t")
        value = asymptotic_predictor(p["id"], n, p["t"], p.get("k") or 0)
        rows.append([f"asymptotic-{p['id']}", _inputs({"n": n, "t": p["t"], "k": p.get("k")}), f"{float(value):.6f}", "", ""])
    return rows


def _bound(cfg: RunConfig) -> str:
    rows = _bound_rows(cfg.params)
    if cfg.format == "text":
        return "".join(f"{r[0]} {r[2]}\n" for r in rows)
    return _csv(COUNT_HEADER, rows)


def _extremal(cfg: RunConfig) -> str:
    p = cfg.params
    h = read_graph_arg(p["h"])
    forbidden = [read_graph_arg(x) for x in p["f"]]
    method = p["method"]
    if method == "exact":
        rec = exact_extremal(p["n"], h, forbidden, limit=cfg.limit or DEFAULT_LIMIT, workers=cfg.workers)
    elif method == "heuristic":
        rec = heuristic_lower(p["n"], h, forbidden, seed=cfg.seed, iterations=p["iterations"])
    else:
        if len(forbidden) != 1:
            raise UsageError("the random construction takes exactly one --f")
        rec = random_deletion_lower(RandomConstructionParams(p["n"], h, forbidden[0], p["c"], cfg.seed))
    if p.get("ledger"):
        append_ledger(p["ledger"], rec)
    if cfg.format == "graph6":
        return to_graph6(rec.witness) + "\n"
    if cfg.format == "text":
        return f"value={rec.value}\nmethod={rec.method}\nwitness={to_graph6(rec.witness)}\n"
    row = rec.ledger_row()
    row[-1] = ""  # wall time would break byte-identical output
    return _csv(LEDGER_HEADER, [row])


def _classify(cfg: RunConfig) -> str:
    v = classify_linearity(cfg.params["k"], read_graph_arg(cfg.params["f"]))
    if cfg.format == "csv":
        return _csv(VERDICT_HEADER, [v.csv_row()])
    return v.report() + "\n"


def _berge_pattern(text: str):
    return berge_mod.BERGE_C2 if text == "C2" else read_graph_arg(text)


def _read_hyper(path):
    if path is None:
        raise UsageError("missing --hyper")
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_hypergraph(text)


def _berge(cfg: RunConfig) -> str:
    p = cfg.params
    verb = p["verb"]
    if verb == "detect":
        h = _read_hyper(p["hyper"])
        if len(p["f"]) != 1:
            raise UsageError("detect takes exactly one --f")
        w = berge_mod.contains_berge(h, _berge_pattern(p["f"][0]))
        if w is None:
            return "absent\n"
        lines = ["present", "core=" + " ".join(f"{u}->{x}" for u, x in sorted(w.core.items()))]
        lines += [f"edge {u}-{v} -> {'-'.join(map(str, e))}" for (u, v), e in w.assignment]
        return "\n".join(lines) + "\n"
    if verb == "to-graph":
        g, assignment = berge_mod.hypergraph_to_graph(_read_hyper(p["hyper"]))
        if cfg.format == "dot":
            return to_dot(g)
        lines = [to_graph6(g)]
        lines += [a if a == berge_mod.CLIQUE else f"{a[0]}-{a[1]}" for a in assignment]
        return "\n".join(lines) + "\n"
    if verb == "from-cliques":
        _need(p, "g")
        return format_hypergraph(berge_mod.cliques_to_hypergraph(read_graph_arg(p["g"]), p["mode"]))
    _need(p, "n")
    limit = cfg.limit or berge_mod.DEFAULT_LIMIT
    if verb == "extremal":
        if not p["f"]:
            raise UsageError("extremal needs at least one --f")
        rec = berge_mod.exact_berge_extremal(p["n"], p["r"], [_berge_pattern(x) for x in p["f"]], limit=limit, workers=cfg.workers)
        if p.get("ledger"):
            append_ledger(p["ledger"], rec)
        if cfg.format == "text":
            return f"value={rec.value}\n" + format_hypergraph(rec.witness)
        row = rec.ledger_row()
        row[-1] = ""
        return _csv(LEDGER_HEADER, [row])
    if len(p["f"]) != 1 or p["f"][0] == "C2":
        raise UsageError("sandwich takes exactly one graph --f")
    f = read_graph_arg(p["f"][0])
    rep = berge_mod.berge_sandwich_check(p["n"], p["r"], f, limit=limit, workers=cfg.workers)
    return _csv(SANDWICH_HEADER, [[rep.n, rep.r, to_graph6(f), rep.lower, rep.middle, rep.upper, rep.holds]])


def run_sweep(cfg: RunConfig) -> str:
    """One CSV row per parameter point; points beyond module limits are marked skipped."""
    p = cfg.params
    if p["target"] == "furedi":
        from .constructions import furedi_graph

        t, k = p["t"], p["k"]
        rows = []
        for q in parse_range(p["q"]):
            try:
                g = furedi_graph(q, t)
            except PreconditionError as exc:
                rows.append([q, t, "", k, "", "", "", "", "", "", f"skipped: {exc.condition}"])
                continue
            if cfg.limit is not None and g.n > cfg.limit:
                rows.append([q, t, g.n, k, "", "", "", "", "", "", "skipped: limit"])
                continue
            if k == 4:
                exact = count_cycles(g, 4).value
                bound = certified_c4_bound(g.n, t).value
                pred = asymptotic_predictor("c4", g.n, t)
            else:
                exact = count_cycles(g, k).value
                bound = certified_cycle_bound(g.n, g.edge_count, t, k).value if k >= 5 else ""
                pred = asymptotic_predictor("cycle", g.n, t, k)
            try:
                _, cyc = greedy_lower_certificates(q, t, k)
                greedy = cyc.value if cyc is not None else ""
            except PreconditionError:
                greedy = ""
            rows.append([q, t, g.n, k, exact, bound, greedy, f"{float(pred):.6f}", _ratio(exact, bound or None), _ratio(exact, pred), "ok"])
        return _csv(SWEEP_FUREDI_HEADER, rows)
    ns = parse_range(p["n"])
    if ns and not p.get("h"):
        raise UsageError("sweep extremal needs --h")
    rows = []
    limit = cfg.limit or DEFAULT_LIMIT
    if ns:
        h = read_graph_arg(p["h"])
        forbidden = [read_graph_arg(x) for x in p["f"]]
    for n in ns:
        if n > limit:
            rows.append([n, "", "", "", "skipped: limit"])
            continue
        rec = exact_extremal(n, h, forbidden, limit=limit, workers=cfg.workers)
        rows.append([n, rec.value, rec.method, to_graph6(rec.witness), "ok"])
    return _csv(SWEEP_EXTREMAL_HEADER, rows)


HANDLERS = {
    "construct": _construct,
    "count": _count,
    "bound": _bound,
    "extremal": _extremal,
    "classify": _classify,
    "berge": _berge,
    "sweep": run_sweep,
}


def execute(cfg: RunConfig) -> str:
    return HANDLERS[cfg.command](cfg)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
        text = execute(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LimitExceededError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except GenTuranError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
