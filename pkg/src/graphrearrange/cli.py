"""Command-line entry point ``gr``.

Every flag may also be given in a ``key = value`` config file passed with
``--config``; flags given on the command line win.  ``GR_SEED`` supplies the
seed when neither sets it.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import io as gio
from . import render, reproduce
from .audit import AuditRangeError, HypothesisError, audit, l2_counterexample
from .graph import GraphError, WindowError
from .isoperimetry import Kind, profile
from .orderings import OrderingError, named_ordering
from .rearrange import (INF, grad_lp_norm, lp_norm, parse_p, rearrange)

BUILTIN_DEFAULTS = {
    "kind": "edge",
    "method": "oracle",
    "p": "1,2,inf",
    "nmax": 6,
    "theorems": "2,3,4",
    "graph": "grid:4",
    "suite_size": 1000,
    "out": None,
}


def parse_range(text: str) -> list[int]:
    """``"1..6"``, ``"5"`` or ``"1,3,5"``."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def load_config(path) -> dict:
    cfg = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"config line without '=': {raw!r}")
        cfg[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return cfg


def resolve_graph(spec: str):
    if spec.startswith("file:"):
        return gio.read_graph(spec[5:])
    return gio.parse_graph_spec(spec)


def resolve_ordering(g, selector: str):
    if selector.startswith("file:"):
        return gio.read_ordering(g, selector[5:])
    return named_ordering(g, selector)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


# --- subcommands ------------------------------------------------------------------

def cmd_profile(args) -> int:
    degree = args.degree
    prof = profile(args.family, args.kind, parse_range(args.n), method=args.method, box=args.box,
                   degree=degree)
    rows = [(n, value, prov) for n, value, prov in prof.rows()]
    header = ["N", "min", "provenance"]
    if args.witness:
        header.append("witness")
        rows = [(*r, " ".join(f"{c[0]}:{c[1]}" for c in prof.witnesses[r[0]].witness_coords())
                 if r[0] in prof.witnesses else "") for r in rows]
    gio.write_csv(rows, header, args.out or sys.stdout)
    return 0


def cmd_rearrange(args) -> int:
    g = resolve_graph(args.graph)
    o = resolve_ordering(g, args.ordering)
    f = gio.read_function(g, args.input)
    gio.write_function(rearrange(f, o), args.out or sys.stdout)
    return 0


def cmd_norms(args) -> int:
    g = resolve_graph(args.graph)
    f = gio.read_function(g, args.input)
    ps = [parse_p(t) for t in str(args.p).split(",")]
    fs = rearrange(f, resolve_ordering(g, args.ordering)) if args.ordering else None
    header = ["p", "norm_f", "grad_norm_f"] + (["grad_norm_fstar"] if fs else [])
    rows = []
    for p in ps:
        row = ["inf" if p == INF else str(p), _fmt(lp_norm(f, p)), _fmt(grad_lp_norm(f, p))]
        if fs:
            row.append(_fmt(grad_lp_norm(fs, p)))
        rows.append(row)
    gio.write_csv(rows, header, args.out or sys.stdout)
    return 0


def cmd_audit(args) -> int:
    g = resolve_graph(args.graph)
    o = resolve_ordering(g, args.ordering)
    theorems = parse_range(args.theorems)
    report = audit(o, int(args.nmax), theorems)
    cols = ["n", "prefix_edge", "edge_min", "prefix_vertex", "vertex_min", "containment", "theorem4"]
    print(f"ordering {report.ordering} on {report.graph}, N = 1..{report.nmax}")
    print(" ".join(f"{c:>13}" for c in cols))
    rows = []
    for row in report.rows:
        vals = ["" if getattr(row, c) is None else getattr(row, c) for c in cols]
        rows.append(vals)
        print(" ".join(f"{str(v):>13}" for v in vals))
    if 2 in theorems:
        print(f"theorem 2: alpha = {report.alpha} (beta = 0), beta = {report.beta} (alpha = 1)")
    if 3 in theorems:
        print(f"theorem 3: c = {report.c}; vertex profile non-decreasing on range: "
              f"{report.profile_monotone}")
    if 4 in theorems:
        print(f"theorem 4: holds = {report.theorem4_holds}; first failure N = "
              f"{report.theorem4_first_failure} (profile equality: "
              f"{report.theorem4_first_profile_failure}, containment: "
              f"{report.theorem4_first_containment_failure})")
    for note in report.caveats:
        print(f"caveat: {note}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        gio.write_csv(rows, cols, os.path.join(args.out, "audit.csv"))
        gio.write_csv([
            ("alpha", report.alpha), ("beta", report.beta), ("c", report.c),
            ("theorem4_holds", report.theorem4_holds),
            ("theorem4_first_failure", report.theorem4_first_failure),
        ], ["constant", "value"], os.path.join(args.out, "constants.csv"))
    return 1 if report.failed else 0


def cmd_counterexample(args) -> int:
    g = resolve_graph(args.graph)
    o = resolve_ordering(g, args.ordering)
    res = l2_counterexample(o)
    print(f"case={res.case} n={res.n} ratio^2={res.ratio_squared} ratio={res.ratio:.12g}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        gio.write_function(res.witness, os.path.join(args.out, "witness.csv"))
        gio.write_function(res.rearranged, os.path.join(args.out, "witness_rearranged.csv"))
    return 0


def cmd_reproduce(args) -> int:
    ok = reproduce.run(args.out or "reproduce-out", seed=args.seed,
                       suite_size=int(args.suite_size))
    return 0 if ok else 1


def cmd_render(args) -> int:
    g = resolve_graph(args.graph)
    if args.input:
        svg = render.heatmap_svg(gio.read_function(g, args.input), title=Path(args.input).stem)
    elif args.ordering:
        o = resolve_ordering(g, args.ordering)
        svg = render.ordering_svg(o, args.ranks, title=o.name)
    else:
        raise ValueError("render needs --in FILE or --ordering SEL")
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return 0


def cmd_export(args) -> int:
    g = resolve_graph(args.graph)
    if args.ordering:
        gio.write_ordering(resolve_ordering(g, args.ordering), args.out or sys.stdout)
    else:
        gio.write_graph(g, args.out or sys.stdout)
    return 0


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gr", description="Graph rearrangements and isoperimetry.")
    parser.add_argument("--config", default=None, help="key = value file mirroring the flags")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--config", default=argparse.SUPPRESS, help="key = value file")
        return p

    p = command("profile", cmd_profile, "isoperimetric profile table")
    p.add_argument("--family", choices=["grid", "ladder", "path", "tree"], default=None)
    p.add_argument("--kind", choices=[k.value for k in Kind], default=None)
    p.add_argument("--n", default=None, help="e.g. 1..6")
    p.add_argument("--box", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--method", choices=["oracle", "closed-form", "auto"], default=None)
    p.add_argument("--witness", action="store_true", default=None)

    for name, func, help in (("rearrange", cmd_rearrange, "rearrange a function file"),
                             ("norms", cmd_norms, "norms of a function and its gradient")):
        p = command(name, func, help)
        p.add_argument("--graph", default=None)
        p.add_argument("--ordering", default=None)
        p.add_argument("--in", dest="input", default=None)
        if name == "norms":
            p.add_argument("--p", default=None)

    p = command("audit", cmd_audit, "audit an ordering against theorems 2-4")
    p.add_argument("--graph", default=None)
    p.add_argument("--ordering", default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--theorems", default=None)

    p = command("counterexample", cmd_counterexample, "L2 counterexample for an ordering")
    p.add_argument("--graph", default=None)
    p.add_argument("--ordering", default=None)

    p = command("reproduce", cmd_reproduce, "recompute all published values")
    p.add_argument("--suite-size", type=int, default=None)

    p = command("render", cmd_render, "SVG heatmap or rank labels")
    p.add_argument("--graph", default=None)
    p.add_argument("--ordering", default=None)
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--ranks", type=int, default=None)

    p = command("export", cmd_export, "write a graph or ordering file")
    p.add_argument("--graph", default=None)
    p.add_argument("--ordering", default=None)
    return parser


def _subparser(parser, command):
    for action in parser._subparsers._group_actions:
        return action.choices[command]


def _apply_config(parser, args) -> None:
    cfg = load_config(args.config) if args.config else {}
    sub = _subparser(parser, args.command)
    types = {a.dest: a for a in sub._actions}
    for key, raw in cfg.items():
        if key == "in":
            key = "input"
        if key not in types or getattr(args, key, None) is not None:
            continue
        action = types[key]
        if isinstance(action, argparse._StoreTrueAction):
            value = raw.lower() in ("1", "true", "yes", "on")
        else:
            value = action.type(raw) if action.type else raw
        setattr(args, key, value)
    for key, value in BUILTIN_DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    if hasattr(args, "seed") and args.seed is None:
        args.seed = int(os.environ.get("GR_SEED", "0"))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(parser, args)
        return args.func(args)
    except (GraphError, WindowError, OrderingError, AuditRangeError, HypothesisError,
            ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
