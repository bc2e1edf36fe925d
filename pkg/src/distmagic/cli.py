"""Command-line front end.

Exit status: 0 for success / positive verdicts, 1 for negative verdicts
(not magic, nothing found), 2 for rejected input.  All output is
byte-deterministic for fixed inputs and flags; the only randomness is the
scramble seed, always passed explicitly.

Graph arguments accept either a generator spec or a path to an edge-list
file.  Specs: cycle:N  path:N  empty:N  kbip:A,B  kminusm:ORDER.
"""

from __future__ import annotations

import argparse
import sys

from . import constructors, magic, rearrange, search
from .errors import InputError
from .graphs import (
    Graph,
    complete_bipartite,
    complete_minus_matching,
    cycle,
    empty_graph,
    format_edge_list,
    parse_edge_list,
    path,
)
from .products import CARTESIAN, DIRECT, LEXICOGRAPHIC, product


def parse_graph_spec(spec: str) -> Graph:
    if ":" in spec:
        name, _, raw = spec.partition(":")
        if name in ("cycle", "path", "empty", "kbip", "kminusm"):
            try:
                params = [int(x) for x in raw.split(",")] if raw else []
            except ValueError:
                raise InputError(f"graph spec {spec!r}: parameters must be integers")
            if name == "cycle" and len(params) == 1:
                return cycle(params[0])
            if name == "path" and len(params) == 1:
                return path(params[0])
            if name == "empty" and len(params) == 1:
                return empty_graph(params[0])
            if name == "kbip" and len(params) == 2:
                return complete_bipartite(params[0], params[1])
            if name == "kminusm" and len(params) == 1:
                return complete_minus_matching(params[0])
            raise InputError(f"graph spec {spec!r}: wrong number of parameters")
    try:
        with open(spec, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph {spec!r}: {exc}")
    return parse_edge_list(text)


def _auto_balanced_labeling(spec: str, g: Graph) -> magic.Labeling | None:
    """Built-in balanced labeling for specs the constructors cover."""
    if ":" not in spec:
        return None
    name, _, raw = spec.partition(":")
    if name == "cycle" and raw == "4":
        return constructors.label_c4()
    if name == "empty" and g.n % 2 == 0 and g.n > 0:
        return magic.Labeling(tuple(range(1, g.n + 1)))
    if name == "kbip":
        parts = raw.split(",")
        if len(parts) == 2 and parts[0] == parts[1] and g.n % 4 == 0:
            return constructors.label_complete_bipartite(g.n // 4)
    if name == "kminusm":
        return constructors.label_complete_minus_matching(g.n // 2)
    return None


def _read(path_arg: str) -> str:
    try:
        with open(path_arg, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path_arg!r}: {exc}")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _labeling_for(args, g: Graph, spec_attr: str, file_attr: str) -> magic.Labeling:
    file_arg = getattr(args, file_attr)
    if file_arg is not None:
        return magic.parse_labeling(_read(file_arg), g.n)
    auto = _auto_balanced_labeling(getattr(args, spec_attr), g)
    if auto is None:
        raise InputError(
            f"no built-in balanced labeling for {getattr(args, spec_attr)!r}; "
            f"pass --{file_attr.replace('_', '-')}"
        )
    return auto


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "cycle-product":
        if args.m is None or args.n is None:
            raise InputError("cycle-product needs --m and --n")
        grid = constructors.label_cycle_product(args.m, args.n)
        k = constructors.cycle_product_magic_constant(args.m, args.n)
        if args.format == "list":
            _emit(magic.format_labeling(grid.to_labeling()), args.out)
        else:
            _emit(constructors.format_grid(grid, k), args.out)
        return 0
    if args.format == "grid":
        raise InputError("grid output applies to --kind cycle-product only")
    if kind == "c4":
        labeling = constructors.label_c4()
    elif kind == "complete-bipartite":
        if args.n is None:
            raise InputError("complete-bipartite needs --n (labels K_{2n,2n})")
        labeling = constructors.label_complete_bipartite(args.n)
    elif kind == "complete-minus-matching":
        if args.n is None:
            raise InputError("complete-minus-matching needs --n (labels K_{2n} minus M)")
        labeling = constructors.label_complete_minus_matching(args.n)
    elif kind in ("lexicographic", "direct"):
        if args.g is None or args.h is None:
            raise InputError(f"{kind} needs --g and --h")
        g = parse_graph_spec(args.g)
        h = parse_graph_spec(args.h)
        h_labeling = _labeling_for(args, h, "h", "h_labeling")
        build = constructors.label_lexicographic if kind == "lexicographic" else constructors.label_direct
        labeling = build(g, h, h_labeling)
    else:
        raise InputError(f"unknown construct kind {kind!r}")
    _emit(magic.format_labeling(labeling), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.grid is not None:
        grid, _ = constructors.parse_grid(_read(args.grid))
        g = product(DIRECT, cycle(grid.rows), cycle(grid.cols)).base
        labeling = grid.to_labeling()
    else:
        if args.graph is None or args.labeling is None:
            raise InputError("verify needs --graph and --labeling, or --grid")
        g = parse_graph_spec(args.graph)
        labeling = magic.parse_labeling(_read(args.labeling), g.n)
    report = magic.verify_balanced(g, labeling)
    render = magic.report_text if args.format == "text" else magic.report_kv
    _emit(render(report), args.out)
    ok = report.is_balanced if args.require == "balanced" else report.is_distance_magic
    return 0 if ok else 1


def cmd_product(args) -> int:
    g = parse_graph_spec(args.g)
    h = parse_graph_spec(args.h)
    p = product(args.kind, g, h)
    _emit(format_edge_list(p.base), args.out)
    return 0


def cmd_search(args) -> int:
    g = parse_graph_spec(args.graph)
    budget = search.SearchBudget(args.budget) if args.budget is not None else None
    outcome = search.find_distance_magic(g, budget)
    lines = [f"outcome={outcome.tag}"]
    if outcome.tag == search.FOUND:
        lines.append(f"magic_constant={outcome.magic_constant}")
        lines.append("witness=" + " ".join(str(x) for x in outcome.labeling.values))
    lines.append(f"nodes={outcome.stats.nodes}")
    lines.append(f"steps={outcome.stats.steps}")
    prunes = ",".join(f"{k}:{v}" for k, v in sorted(outcome.stats.prunes.items()))
    lines.append(f"prunes={prunes}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if outcome.tag == search.FOUND else 1


def cmd_couple(args) -> int:
    g = parse_graph_spec(args.g)
    h = parse_graph_spec(args.h)
    p = product(args.kind, g, h)
    if args.labeling is not None:
        labeling = magic.parse_labeling(_read(args.labeling), p.base.n)
    else:
        h_labeling = _labeling_for(args, h, "h", "h_labeling")
        build = (
            constructors.label_lexicographic
            if args.kind == LEXICOGRAPHIC
            else constructors.label_direct
        )
        labeling = build(g, h, h_labeling)
    bl = rearrange.make_balanced(p, labeling)
    if args.seed is not None:
        bl = rearrange.scramble_balanced(bl, args.seed)
    if args.kind == DIRECT:
        bl, outcome = rearrange.couple_layers(bl)
    else:
        outcome = rearrange.closed_h_layer_outcome(bl)
    axis, factor_labeling = rearrange.extract_factor_labeling(bl, outcome)
    lines = [f"outcome={outcome.tag}"]
    if outcome.tag == rearrange.CLOSED_H_LAYER:
        lines.append(f"closed_g={outcome.closed_g}")
    else:
        lines.append("pairs=" + ",".join(f"{a}-{b}" for a, b in outcome.pairs))
    lines.append(f"swaps={outcome.swaps}")
    lines.append(f"factor={axis}")
    text = "\n".join(lines) + "\n" + magic.format_labeling(factor_labeling)
    _emit(text, args.out)
    return 0


def cmd_classify(args) -> int:
    family = args.family
    values = args.params
    if family == "cycle":
        if len(values) != 1:
            raise InputError("classify cycle takes one cycle length")
        verdict = constructors.classify_cycle(values[0])
        print("distance_magic" if verdict else "not_distance_magic")
        return 0 if verdict else 1
    if len(values) != 2:
        raise InputError(f"classify {family} takes two cycle lengths")
    m, n = values
    if family == "direct":
        verdict = constructors.classify_cycle_direct(m, n)
        print(verdict)
        return 0 if verdict != constructors.NOT_DISTANCE_MAGIC else 1
    if family == "cartesian":
        flag = constructors.classify_cycle_cartesian(m, n)
        print("distance_magic" if flag else "not_distance_magic")
        return 0 if flag else 1
    if family == "lex":
        flag = constructors.classify_lex_cycles(m, n)
        print("distance_magic" if flag else "not_distance_magic")
        return 0 if flag else 1
    raise InputError(f"unknown family {family!r}")


def cmd_eit(args) -> int:
    g = parse_graph_spec(args.graph)
    labeling = magic.parse_labeling(_read(args.labeling), g.n)
    schedule = magic.eit_schedule(g, labeling)
    _emit(magic.format_eit(schedule), args.out)
    return 0


def cmd_table16(args) -> int:
    grid = constructors.label_cycle_product(16, 16)
    _emit(constructors.format_grid(grid, constructors.cycle_product_magic_constant(16, 16)), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distmagic",
        description="Construct, verify, rearrange, and search for distance magic labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="run a named labeling constructor")
    p.add_argument("--kind", required=True,
                   choices=["c4", "complete-bipartite", "complete-minus-matching",
                            "lexicographic", "direct", "cycle-product"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--g", help="first factor graph spec or file")
    p.add_argument("--h", help="second factor graph spec or file")
    p.add_argument("--h-labeling", dest="h_labeling", help="balanced labeling file for --h")
    p.add_argument("--format", choices=["grid", "list"])
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="verify a labeling file against a graph")
    p.add_argument("--graph")
    p.add_argument("--labeling")
    p.add_argument("--grid", help="grid file; implies the direct product of two cycles")
    p.add_argument("--require", choices=["magic", "balanced"], default="magic")
    p.add_argument("--format", choices=["kv", "text"], default="kv")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("product", help="write the edge list of a graph product")
    p.add_argument("--kind", required=True, choices=[CARTESIAN, LEXICOGRAPHIC, DIRECT])
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("search", help="exhaustive distance magic search")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, help="node cap; omitted means unlimited")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("couple", help="couple H-layers and extract a factor labeling")
    p.add_argument("--kind", required=True, choices=[DIRECT, LEXICOGRAPHIC])
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--h-labeling", dest="h_labeling")
    p.add_argument("--labeling", help="product labeling file; default is the built construction")
    p.add_argument("--seed", type=int, help="scramble the labeling first")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_couple)

    p = sub.add_parser("classify", help="closed-form verdicts for products of cycles")
    p.add_argument("family", choices=["direct", "cartesian", "lex", "cycle"])
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("eit", help="export an equalized incomplete tournament schedule")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_eit)

    p = sub.add_parser("table16", help="emit the labeled 16x16 cycle-product grid")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_table16)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
