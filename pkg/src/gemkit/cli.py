"""Command-line front end.

Gems stream through stdin/stdout as JSON so commands compose in pipes:

    gemkit gen lens --p 2 --q 1 --k 2 | gemkit analyze

Exit codes: 0 on success, 1 on a domain failure (bad gem file, unknown
family, exhausted budget), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import generators, io, search
from .core import ColoredGraph, NotConnectedError, is_bipartite, is_contracted, isomorphic
from .embedding import semi_equivelar_report
from .complexes import homology


def _read_gem(path: str) -> ColoredGraph:
    if path == "-":
        return io.loads(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return io.load(fh)


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _cmd_gen(args) -> int:
    family = args.family
    if family == "sphere":
        g = generators.standard_sphere(_need(args, "d"))
    elif family == "lens":
        g = generators.lens_gem(_need(args, "p"), _need(args, "q"), _need(args, "k"))
    elif family == "rp2-sum":
        g = generators.rp2_sum_gem(_need(args, "n"))
    elif family == "torus-sum":
        g = generators.torus_sum_gem(_need(args, "n"))
    elif family == "sphere-circle":
        g = generators.sphere_times_circle_gem(_need(args, "d"), args.twisted)
    else:
        raise ValueError(
            f"unknown family {family!r}; choose from sphere, lens, "
            "rp2-sum, torus-sum, sphere-circle"
        )
    _write_output(io.to_json(g), args.output)
    return 0


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise ValueError(f"family {args.family!r} needs --{name}")
    return value


def _format_rho(rho_times_2: int) -> str:
    if rho_times_2 % 2 == 0:
        return str(rho_times_2 // 2)
    return f"{rho_times_2}/2"


def _cmd_analyze(args) -> int:
    g = _read_gem(args.gem)
    rep = semi_equivelar_report(g, bigons=args.bigons)
    if args.json:
        payload = {
            "dimension": g.dimension,
            "vertices": g.vertex_count,
            "bipartite": is_bipartite(g),
            "contracted": is_contracted(g),
            "bigons": args.bigons,
            "reports": [r.to_json_dict() for r in rep.reports],
            "witness_rho_times_2": rep.witness_rho_times_2,
            "witness_permutations": [list(e.order) for e in rep.witness_permutations],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(
        f"dimension {g.dimension}  vertices {g.vertex_count}  "
        f"bipartite {'yes' if is_bipartite(g) else 'no'}  "
        f"contracted {'yes' if is_contracted(g) else 'no'}"
    )
    for r in rep.reports:
        faces = (
            "(" + ",".join(str(f) for f in r.signature.faces) + ")"
            if r.signature
            else "-"
        )
        print(
            f"epsilon {r.epsilon}: type {faces}, chi {r.chi}, "
            f"rho {_format_rho(r.rho_times_2)}, g-values {r.g_values}"
        )
    if rep.witness_rho_times_2 is None:
        print("semi-equivelar: no qualifying embedding")
    else:
        eps = ", ".join(str(e) for e in rep.witness_permutations)
        print(
            f"semi-equivelar witness: rho {_format_rho(rep.witness_rho_times_2)} "
            f"via {eps}"
        )
    return 0


def _cmd_homology(args) -> int:
    g = _read_gem(args.gem)
    prof = homology(g)
    if args.json:
        print(json.dumps(prof.to_json()))
    else:
        print(str(prof))
    return 0


def _cmd_iso(args) -> int:
    a = _read_gem(args.first)
    b = _read_gem(args.second)
    mode = "color-permuting" if args.permute_colors else "color-fixed"
    wit = isomorphic(a, b, mode)
    if args.json:
        print(
            json.dumps(
                {
                    "isomorphic": wit is not None,
                    "mode": mode,
                    "vertex_map": list(wit.vertex_map) if wit else None,
                    "color_map": list(wit.color_map) if wit else None,
                }
            )
        )
        return 0
    if wit is None:
        print("non-isomorphic")
    else:
        print("isomorphic")
        print(f"vertex map: {list(wit.vertex_map)}")
        print(f"color map: {list(wit.color_map)}")
    return 0


def _cmd_search(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    spec = search.SearchSpec.from_json_dict(data)
    report = search.search_report(spec, max_order=args.budget)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
        return 0
    print(f"exhaustive: {'yes' if report.exhaustive else 'no'}")
    print(f"hits: {len(report.gems)}")
    for entry in report.to_json_dict()["gems"]:
        print(
            f"  order {entry['order']}  bipartite {entry['bipartite']}  "
            f"chi {entry['chi']}  vertex type {entry['vertex_type']}"
        )
    return 0


def _cmd_types(args) -> int:
    solutions = search.enumerate_embedding_types(args.chi, args.qmax)
    if args.json:
        print(json.dumps([s.to_json_dict() for s in solutions], indent=2))
        return 0
    print(f"chi {args.chi}: {len(solutions)} embedding types")
    width = max((len(s.type_str()) for s in solutions), default=4)
    for s in solutions:
        print(f"  {s.type_str():<{width}}  order {s.order_str()}")
    return 0


def _cmd_catalog(args) -> int:
    if args.name is None:
        manifest = generators.catalog_manifest()
        if args.json:
            print(json.dumps(manifest, indent=2))
            return 0
        for entry in manifest:
            flag = "" if entry["enabled"] else "  [disabled]"
            parm = " (parametric in p)" if entry["parametric"] else ""
            print(
                f"{entry['name']:<14} {entry['surface']:<17} faces {entry['faces']:<9} "
                f"order {entry['order']}{parm}{flag}"
            )
        return 0
    g = generators.catalog(args.name, p=args.p)
    _write_output(io.to_json(g), args.output)
    return 0


def _cmd_export(args) -> int:
    g = _read_gem(args.gem)
    if args.format == "dot":
        _write_output(io.to_dot(g), args.output)
    else:
        _write_output(io.to_json(g), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gemkit",
        description="generate, analyze and search edge-colored graphs encoding manifolds",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family gem")
    p.add_argument("family")
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--twisted", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="report every embedding of a gem")
    p.add_argument("gem", nargs="?", default="-")
    p.add_argument("--bigons", choices=("include", "exclude"), default="exclude")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("homology", help="integral homology of a gem")
    p.add_argument("gem", nargs="?", default="-")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("iso", help="isomorphism witness between two gems")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--permute-colors", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("search", help="run a constrained gem search")
    p.add_argument("--spec", required=True)
    p.add_argument("--budget", type=int, default=search.DEFAULT_ORDER_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("types", help="embedding types compatible with a surface")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--qmax", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_types)

    p = sub.add_parser("catalog", help="figure catalog: list or build by name")
    p.add_argument("--list", action="store_true")
    p.add_argument("--name")
    p.add_argument("--p", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("export", help="re-emit a gem as DOT or canonical JSON")
    p.add_argument("gem", nargs="?", default="-")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_export)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NotConnectedError, search.BudgetExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except generators.FamilyValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
