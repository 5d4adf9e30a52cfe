"""Command-line front end.

Every command prints a single JSON run report to stdout:

    {"command": ..., "inputs": ..., "result": ..., "elapsed_ms": ...}

Exit codes: 0 on success (and when a queried property holds), 1 when a
queried property fails or nothing is found, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import classify as classify_mod
from .autiso import automorphism_group, canonical_graph6
from .graphs import (
    Graph,
    Matching,
    complete,
    complete_bipartite,
    composition,
    cycle,
    empty_graph,
    folded_hypercube,
    graph6_decode,
    graph6_encode,
    hypercube,
    join,
    matching_join,
    odd_graph,
    paley_incidence,
    paley_incidence_cliques,
    path_graph,
    petersen,
    subdivide_all,
    subdivide_matching_twice,
    subdivide_non_matching,
)
from .matchings import (
    check_group_action,
    find_matching,
    is_2arc_transitive,
    is_arc_transitive,
    matching_report,
    normalize_mode,
)
from .perms import Perm, PermGroup
from .polygonal import near_polygonal_certificate, quotient_by_partition
from .voltage import (
    derived_cover,
    lift_group,
    lift_matching_in_tree,
    spanning_tree,
    standard_assignment,
)


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read().strip()
    if not text:
        raise ValueError("empty graph file: %s" % path)
    return graph6_decode(text.splitlines()[0].strip())


def _read_group(spec: str, g: Graph) -> PermGroup:
    if spec == "auto":
        return automorphism_group(g)
    gens = []
    with open(spec, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                gens.append(Perm.parse(line, g.n))
    group = PermGroup(gens, degree=g.n)
    check_group_action(g, group)
    return group


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        a, b = part.split("-")
        edges.append((int(a), int(b)))
    return edges


def _graph_spec(token: str) -> Graph:
    """K5, Kbar4, C7, P3, a (a,b) bipartite pair like K3,3 -- or a graph6
    file path."""
    if token.startswith("Kbar"):
        return empty_graph(int(token[4:]))
    if "," in token and token.startswith("K"):
        a, b = token[1:].split(",")
        return complete_bipartite(int(a), int(b))
    if token.startswith("K") and token[1:].isdigit():
        return complete(int(token[1:]))
    if token.startswith("C") and token[1:].isdigit():
        return cycle(int(token[1:]))
    if token.startswith("P") and token[1:].isdigit():
        return path_graph(int(token[1:]))
    return _read_graph(token)


def _emit(command: str, inputs: dict, result: dict, started: float) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    }
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _graph_result(g: Graph) -> dict:
    return {
        "graph6": graph6_encode(g),
        "vertices": g.n,
        "edges": g.num_edges,
        "degree_min": min((g.degree(v) for v in range(g.n)), default=0),
        "degree_max": max((g.degree(v) for v in range(g.n)), default=0),
    }


def _cmd_gen(args: argparse.Namespace) -> int:
    started = time.monotonic()
    name = args.family
    params = list(args.params)

    def ints(k: int) -> list[int]:
        if len(params) != k:
            raise ValueError("%s expects %d parameter(s)" % (name, k))
        return [int(x) for x in params]

    extra: dict = {}
    if name == "complete":
        g = complete(*ints(1))
    elif name == "empty":
        g = empty_graph(*ints(1))
    elif name == "complete-bipartite":
        g = complete_bipartite(*ints(2))
    elif name == "cycle":
        g = cycle(*ints(1))
    elif name == "path":
        g = path_graph(*ints(1))
    elif name == "petersen":
        ints(0)
        g = petersen()
    elif name == "odd":
        g, gens = odd_graph(*ints(1))
        extra["symbol_generators"] = [p.cycle_string() for p in gens]
    elif name == "hypercube":
        g = hypercube(*ints(1))
    elif name == "folded-hypercube":
        g = folded_hypercube(*ints(1))
    elif name == "paley":
        g = paley_incidence(*ints(1))
    elif name == "paley-cliques":
        g = paley_incidence_cliques(*ints(1))
    elif name == "join":
        if len(params) != 2:
            raise ValueError("join expects two graph specs")
        g = join(_graph_spec(params[0]), _graph_spec(params[1]))
    elif name == "matching-join":
        if len(params) != 2:
            raise ValueError("matching-join expects two graph specs")
        g1, g2 = _graph_spec(params[0]), _graph_spec(params[1])
        phi = [int(x) for x in args.phi.split(",")] if args.phi else list(range(g1.n))
        g = matching_join(g1, g2, phi)
    elif name == "composition":
        if len(params) != 2:
            raise ValueError("composition expects a graph spec and a multiplier")
        g = composition(_graph_spec(params[0]), int(params[1]))
    elif name == "subdivide-all":
        if len(params) != 1:
            raise ValueError("subdivide-all expects one graph spec")
        g, vertex_map = subdivide_all(_graph_spec(params[0]))
        extra["edge_vertices"] = {"%d-%d" % e: w for e, w in sorted(vertex_map.items())}
    elif name == "subdivide-non-matching":
        if len(params) != 1:
            raise ValueError("subdivide-non-matching expects one graph spec")
        if not args.edges:
            raise ValueError("subdivide-non-matching requires --edges")
        g = subdivide_non_matching(_graph_spec(params[0]), Matching(_parse_edges(args.edges)))
    elif name == "subdivide-matching-twice":
        if len(params) != 1:
            raise ValueError("subdivide-matching-twice expects one graph spec")
        if not args.edges:
            raise ValueError("subdivide-matching-twice requires --edges")
        g = subdivide_matching_twice(_graph_spec(params[0]), Matching(_parse_edges(args.edges)))
    else:
        raise ValueError("unknown family: %s" % name)

    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(graph6_encode(g) + "\n")
    result = _graph_result(g)
    result.update(extra)
    _emit("gen", {"family": name, "params": params}, result, started)
    return 0


def _cmd_aut(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    group = automorphism_group(g)
    result = {
        "order": group.order(),
        "generators": [p.cycle_string() for p in group.generators],
        "orbits": [sorted(o) for o in group.orbits()],
        "canonical_graph6": canonical_graph6(g),
    }
    _emit("aut", {"graph": args.graph}, result, started)
    return 0


def _cmd_matching_analyze(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    group = _read_group(args.group, g)
    matching = Matching(_parse_edges(args.edges))
    report = matching_report(g, matching, group)
    result = report.to_json_dict()
    _emit("matching-analyze", {"graph": args.graph, "edges": args.edges,
                               "group": args.group}, result, started)
    if args.check:
        mode = normalize_mode(args.check)
        ok = report.permutable if mode == "permutable" else report.two_transitive
        return 0 if ok else 1
    return 0


def _cmd_matching_find(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    group = _read_group(args.group, g)
    mode = normalize_mode(args.mode)
    witness = find_matching(g, group, args.m, mode)
    result = {"found": witness is not None}
    if witness is not None:
        result["matching"] = str(witness)
        result["report"] = matching_report(g, witness, group).to_json_dict()
    _emit("matching-find", {"graph": args.graph, "m": args.m, "mode": mode,
                            "group": args.group}, result, started)
    return 0 if witness is not None else 1


def _cmd_cover(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    group = _read_group(args.group, g)
    required = _parse_edges(args.tree_contains) if args.tree_contains else []
    tree = spanning_tree(g, required)
    xi = standard_assignment(g, args.p, tree)
    cover = derived_cover(xi, max_vertices=args.max_vertices)
    lifted = lift_group(cover, group)
    result = {
        "base_vertices": g.n,
        "cover_vertices": cover.graph.n,
        "p": cover.p,
        "k": cover.k,
        "tree": sorted(list(e) for e in tree),
        "lifted_group_order": lifted.order(),
        "assignment": xi.to_json_dict(),
    }
    if args.tree_contains:
        matching = Matching(required)
        lifted_matching = lift_matching_in_tree(cover, matching)
        report = matching_report(cover.graph, lifted_matching, lifted)
        result["lifted_matching"] = str(lifted_matching)
        result["lifted_matching_report"] = report.to_json_dict()
    if args.out:
        with open(args.out + ".g6", "w", encoding="ascii") as fh:
            fh.write(graph6_encode(cover.graph) + "\n")
        with open(args.out + ".fibers.json", "w", encoding="ascii") as fh:
            json.dump(cover.to_fiber_json(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    _emit("cover", {"graph": args.graph, "p": args.p, "group": args.group,
                    "tree_contains": args.tree_contains}, result, started)
    return 0


def _cmd_near_polygonal(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    group = _read_group(args.group, g)
    system = near_polygonal_certificate(g, group)
    result = {"found": system is not None}
    if system is not None:
        result["cycle_length"] = system.length
        result["cycle_count"] = len(system.cycles)
        result["cycles"] = [list(c) for c in system.cycles]
    _emit("near-polygonal", {"graph": args.graph, "group": args.group},
          result, started)
    return 0 if system is not None else 1


def _cmd_quotient(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    with open(args.partition, "r", encoding="ascii") as fh:
        blocks = json.load(fh)
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise ValueError("partition file must hold a JSON list of vertex lists")
    group = _read_group(args.group, g) if args.group else None
    res = quotient_by_partition(g, [tuple(b) for b in blocks], group)
    _emit("quotient", {"graph": args.graph, "partition": args.partition,
                       "group": args.group}, res.to_json_dict(), started)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    started = time.monotonic()
    mode = normalize_mode(args.mode)
    report = classify_mod.classification_report(args.m, mode)
    _emit("classify", {"m": args.m, "mode": mode}, report, started)
    return 0 if report["match"] else 1


def _cmd_arc_transitivity(args: argparse.Namespace) -> int:
    started = time.monotonic()
    g = _read_graph(args.graph)
    group = _read_group(args.group, g)
    result = {
        "arc_transitive": is_arc_transitive(g, group),
        "two_arc_transitive": is_2arc_transitive(g, group),
    }
    _emit("arcs", {"graph": args.graph, "group": args.group}, result, started)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permatch",
        description="Graphs whose automorphism groups act richly on a perfect matching.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named graph as graph6")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--phi", help="comma-separated bijection for matching-join")
    p.add_argument("--edges", help="matching edges u-v,... for subdivision families")
    p.add_argument("--out", help="write graph6 to this file")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("aut", help="automorphism group of a graph6 file")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("matching", help="analyze or search matchings")
    msub = p.add_subparsers(dest="subcommand", required=True)
    pa = msub.add_parser("analyze", help="report on one matching")
    pa.add_argument("graph")
    pa.add_argument("--edges", required=True, help="matching edges u-v,...")
    pa.add_argument("--group", default="auto", help="'auto' or a generator file")
    pa.add_argument("--check", help="exit 1 unless the matching passes this mode")
    pa.set_defaults(func=_cmd_matching_analyze)
    pf = msub.add_parser("find", help="search for a qualifying matching")
    pf.add_argument("graph")
    pf.add_argument("-m", type=int, required=True, help="matching size")
    pf.add_argument("--mode", default="permutable")
    pf.add_argument("--group", default="auto")
    pf.set_defaults(func=_cmd_matching_find)

    p = sub.add_parser("cover", help="derived cover from a standard voltage assignment")
    p.add_argument("graph")
    p.add_argument("-p", type=int, required=True, help="prime modulus")
    p.add_argument("--tree-contains", help="edges u-v,... the spanning tree must use")
    p.add_argument("--group", default="auto")
    p.add_argument("--max-vertices", type=int, default=100000)
    p.add_argument("--out", help="prefix for .g6 and .fibers.json outputs")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("near-polygonal", help="search a cycle system covering 2-paths once")
    p.add_argument("graph")
    p.add_argument("--group", default="auto")
    p.set_defaults(func=_cmd_near_polygonal)

    p = sub.add_parser("quotient", help="quotient by a vertex partition")
    p.add_argument("graph")
    p.add_argument("--partition", required=True, help="JSON file: list of vertex lists")
    p.add_argument("--group", help="'auto' or a generator file (optional)")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("arcs", help="arc- and 2-arc-transitivity of a pair")
    p.add_argument("graph")
    p.add_argument("--group", default="auto")
    p.set_defaults(func=_cmd_arc_transitivity)

    p = sub.add_parser("classify", help="exhaustive sweep against the catalog")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", default="permutable")
    p.set_defaults(func=_cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
