"""Command-line front end.

Every command reads and writes the single-line JSON documents described in
jsonio; "-" stands for stdin/stdout so commands compose in pipelines, e.g.

    rainbowdom gen prism 6 | rainbowdom solve - -k 4

Exit codes: 0 success, 1 domain/file error, 2 usage error, 3 budget
exhausted (the printed result is then explicitly marked non-optimal).
"""

from __future__ import annotations

import argparse
import re
import sys

from . import jsonio
from .errors import InvalidInput, RainbowDomError
from .families import (
    classify_cubic_abelian_cayley,
    construct_kdd_function,
    construct_mobius_function,
    construct_prism_function,
    formula_cycle,
    formula_mobius,
    formula_prism,
)
from .graphs import (
    AbelianGroupSpec,
    Graph,
    cartesian_product_complete,
    cayley_abelian,
    complete_bipartite,
    cycle,
    franklin,
    hypercube,
    mobius_ladder,
    prism,
    regular_degree,
    wreath,
)
from .rainbow import (
    c_c0_bounds,
    check_counting_identities,
    coloring_stats,
    lower_bound_general,
    lower_bound_regular,
    rdr_necessary_conditions,
    verify_krdf,
    weight,
)
from .solver import (
    SearchBudget,
    SolveResult,
    exact_gamma_rk,
    exact_gamma_rk_ladder,
    gamma_rk_via_product,
    is_rdr,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str) -> Graph:
    return jsonio.graph_from_dict(jsonio.loads(_read_text(path)))


def _read_coloring(path: str):
    return jsonio.coloring_from_dict(jsonio.loads(_read_text(path)))


def _emit(doc, out_path: str | None) -> None:
    text = jsonio.dumps(doc)
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _budget(args) -> SearchBudget:
    ms = getattr(args, "budget_ms", None)
    if ms is None:
        ms = 30_000
    return SearchBudget(max_time=ms / 1000.0)


_FAMILY_NAME = re.compile(r"^(cycle|prism|mobius_ladder)\((\d+)\)$")


def _ladder_family_of(g: Graph):
    """Recognize a generated cycle/prism/Moebius graph by its name tag and
    confirm the edge set matches the canonical generator exactly."""
    if not g.name:
        return None
    match = _FAMILY_NAME.match(g.name)
    if not match:
        return None
    kind, m = match.group(1), int(match.group(2))
    gen = {"cycle": cycle, "prism": prism, "mobius_ladder": mobius_ladder}[kind]
    try:
        reference = gen(m)
    except RainbowDomError:
        return None
    if reference.n != g.n or reference.edges != g.edges:
        return None
    return ("mobius" if kind == "mobius_ladder" else kind), m


def _solve_result_doc(res: SolveResult, canonical: bool) -> dict:
    return {
        "value": res.value,
        "method": res.method,
        "witness": jsonio.coloring_to_dict(res.witness),
        "nodes": res.nodes_explored,
        "optimal": res.optimal,
        "elapsed_ms": 0 if canonical else int(res.elapsed * 1000),
    }


def _cmd_gen(args) -> int:
    fam = args.family
    p = args.params
    if fam == "cycle":
        g = cycle(int(p[0]))
    elif fam == "prism":
        g = prism(int(p[0]))
    elif fam == "mobius":
        g = mobius_ladder(int(p[0]))
    elif fam == "kdd":
        d = int(p[0])
        g = complete_bipartite(d, d)
    elif fam == "complete-bipartite":
        g = complete_bipartite(int(p[0]), int(p[1]))
    elif fam == "franklin":
        g = franklin()
    elif fam == "hypercube":
        g = hypercube(int(p[0]))
    elif fam == "wreath":
        g = wreath(int(p[0]))
    elif fam == "cayley":
        g = cayley_abelian(_group_spec(args))
    else:
        raise InvalidInput(f"unknown family {fam!r}")
    _emit(jsonio.graph_to_dict(g), args.output)
    return EXIT_OK


def _needed_params(fam: str) -> int:
    return {"franklin": 0, "cayley": 0, "complete-bipartite": 2}.get(fam, 1)


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    method = args.method
    if method == "ladder":
        fam = _ladder_family_of(g)
        if fam is None:
            raise InvalidInput(
                "the ladder method needs a generated cycle/prism/mobius graph "
                "(use `gen`, which tags the file)"
            )
        res = exact_gamma_rk_ladder(fam[0], fam[1], args.k)
    elif method == "product":
        res = gamma_rk_via_product(g, args.k, _budget(args))
    else:
        res = exact_gamma_rk(g, args.k, _budget(args), canonical=args.canonical)
    _emit(_solve_result_doc(res, args.canonical), None)
    return EXIT_OK if res.optimal else EXIT_TIMEOUT


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    f = _read_coloring(args.coloring)
    report = verify_krdf(g, f)
    _emit({
        "valid": report.valid,
        "weight": weight(f),
        "violations": [[v, sorted(missing)] for v, missing in report.violations],
    }, None)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = _read_graph(args.graph)
    k = args.k
    max_deg = max((g.degree(v) for v in range(g.n)), default=0)
    doc = {
        "n": g.n,
        "k": k,
        "max_degree": max_deg,
        "lower_general": lower_bound_general(g.n, max_deg, k) if max_deg else g.n,
    }
    d = regular_degree(g)
    doc["regular_d"] = d
    doc["lower_regular"] = lower_bound_regular(g.n, d, k) if d else None
    if args.gamma is not None and d and 0 < k < 2 * d:
        c_max, c0_min = c_c0_bounds(g.n, d, k, args.gamma)
        doc["gamma"] = args.gamma
        doc["c_max"] = c_max
        doc["c0_min"] = c0_min
    _emit(doc, None)
    return EXIT_OK


def _cmd_formula(args) -> int:
    fam, size, k = args.family, args.size, args.k
    if fam == "prism":
        res = formula_prism(size, k)
    elif fam == "mobius":
        res = formula_mobius(size, k)
    else:
        res = formula_cycle(size, k)
    _emit({"value": res.value, "case": res.case_tag, "source": res.source}, None)
    return EXIT_OK


def _cmd_construct(args) -> int:
    fam, k = args.family, args.k
    if fam == "prism":
        f = construct_prism_function(args.param, k)
    elif fam == "mobius":
        f = construct_mobius_function(args.param, k)
    else:
        f = construct_kdd_function(args.param, k)
    _emit(jsonio.coloring_to_dict(f), args.output)
    return EXIT_OK


def _cmd_rdr(args) -> int:
    g = _read_graph(args.graph)
    conds = rdr_necessary_conditions(g)
    result = is_rdr(g, _budget(args))
    doc = {
        "rdr": "unknown" if result is None else result,
        "necessary_conditions": "pass" if conds.passed else "fail",
        "regular_d": conds.regular_d,
        "divisibility": conds.divisibility,
        "bipartite": conds.bipartite,
    }
    _emit(doc, None)
    return EXIT_TIMEOUT if result is None else EXIT_OK


def _cmd_stats(args) -> int:
    g = _read_graph(args.graph)
    f = _read_coloring(args.coloring)
    st = coloring_stats(g, f)
    d = regular_degree(g)
    doc = {
        "k": st.k,
        "weight": st.weight,
        "per_color": list(st.per_color),
        "by_cardinality": list(st.by_cardinality),
        "colored": st.colored,
        "uncolored": st.uncolored,
        "edges_both_empty": st.edges_both_empty,
        "edges_one_colored": st.edges_one_colored,
        "edges_both_colored": st.edges_both_colored,
        "regular_d": d,
        "identities_ok": check_counting_identities(st, d) if d else None,
    }
    _emit(doc, None)
    return EXIT_OK


def _cmd_product(args) -> int:
    g = _read_graph(args.graph)
    _emit(jsonio.graph_to_dict(cartesian_product_complete(g, args.k)), args.output)
    return EXIT_OK


def _group_spec(args) -> AbelianGroupSpec:
    if not args.group or not args.conn:
        raise InvalidInput("--group and --conn are both required")
    factors = tuple(int(x) for x in args.group.split(",") if x != "")
    elements = []
    for chunk in args.conn.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        elements.append(tuple(int(x) for x in chunk.split(",")))
    return AbelianGroupSpec(factors, tuple(elements))


def _cmd_classify(args) -> int:
    cls = classify_cubic_abelian_cayley(_group_spec(args))
    _emit({
        "kind": cls.kind.value,
        "m": cls.m,
        "mapping": list(cls.mapping),
    }, None)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rainbowdom",
        description="exact k-rainbow domination toolkit for regular graphs",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family graph as JSON")
    p.add_argument("family", choices=["cycle", "prism", "mobius", "kdd",
                                      "complete-bipartite", "franklin",
                                      "hypercube", "wreath", "cayley"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--group", help="comma-separated moduli (cayley)")
    p.add_argument("--conn", help="semicolon-separated coordinate tuples (cayley)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="exact gamma_rk with witness")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=["bb", "ladder", "product"], default="bb")
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--canonical", action="store_true",
                   help="deterministic, byte-identical output")
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; values >= 1 accepted, search is sequential")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="print the applicable closed-form bounds")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--gamma", type=int, default=None,
                   help="known optimum, enables colored-count bounds")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("formula", help="closed-form gamma_rk of a family")
    p.add_argument("family", choices=["prism", "mobius", "cycle"])
    p.add_argument("size", type=int)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("construct", help="emit a built-in optimal coloring")
    p.add_argument("family", choices=["prism", "mobius", "kdd"])
    p.add_argument("param", type=int)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("rdr", help="certify rainbow-domination regularity")
    p.add_argument("graph")
    p.add_argument("--budget-ms", type=int, default=None)
    p.set_defaults(func=_cmd_rdr)

    p = sub.add_parser("stats", help="counting statistics of a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("product", help="cartesian product with a complete graph")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("classify", help="identify a cubic abelian Cayley graph")
    p.add_argument("--group", required=True)
    p.add_argument("--conn", required=True)
    p.set_defaults(func=_cmd_classify)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "gen":
            if args.family != "cayley" and len(args.params) != _needed_params(args.family):
                parser.error(f"gen {args.family} expects "
                             f"{_needed_params(args.family)} parameter(s)")
        if getattr(args, "threads", 1) < 1:
            parser.error("--threads must be at least 1")
        return args.func(args)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    except RainbowDomError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        path = getattr(exc, "filename", None)
        sys.stderr.write(f"error: cannot access {path or 'file'}: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
