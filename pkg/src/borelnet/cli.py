"""Command-line front end.

Exit status: 0 on success (endpoints and infeasible systems included), 2 on
bad input, 3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .borel import enumerate_ideals, format_ideal, parse_ideal
from .deform import all_deformations, flat_dimensions, to_deformation, verify_flat
from .errors import BorelError, InvariantError
from .graphs import analyze, deformation_graph, export, incidence_graph
from .hilbert import complement, format_polynomial, gotzmann_number, parse_polynomial
from .monomial import parse_order
from .segment import find_segment_order, format_matrix

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


def _ideal(args):
    return parse_ideal(args.ideal, n=args.n, names=args.names)


def cmd_enumerate(args) -> str:
    p = parse_polynomial(args.hp)
    ideals = enumerate_ideals(args.n, p)
    if args.out == "json":
        return json.dumps({
            "n": args.n,
            "hilbert_polynomial": format_polynomial(p),
            "gotzmann_number": gotzmann_number(p),
            "ideals": [B.ideal.to_dict()["generators"] for B in ideals],
        }, indent=2) + "\n"
    return "".join(format_ideal(B) + "\n" for B in ideals)


def cmd_deform(args) -> str:
    B = _ideal(args)
    d = to_deformation(B, parse_order(args.order))
    if d is None:
        return json.dumps({"endpoint": True}) + "\n" if args.out == "json" else "endpoint\n"
    if args.out == "json":
        return json.dumps(d.to_dict(flat=verify_flat(d)), indent=2) + "\n"
    return format_ideal(d.target) + "\n"


def cmd_deform_all(args) -> str:
    B = _ideal(args)
    defs = all_deformations(B)
    if args.out == "json":
        return json.dumps([d.to_dict(flat=verify_flat(d)) for d in defs], indent=2) + "\n"
    lines = []
    for d in defs:
        fam = ", ".join(str(F) for F in d.family.compositions)
        lines.append(f"j={d.stratum} alpha={d.alpha} beta={d.beta} family={{{fam}}} -> {format_ideal(d.target)}")
    return "".join(line + "\n" for line in lines)


def _graph_text(g) -> str:
    rep = analyze(g)
    lines = [f"{k + 1}: {format_ideal(B)}" for k, B in enumerate(g.vertices)]
    for e in g.edges:
        arrow = "->" if g.directed else "--"
        lines.append(f"{e.source + 1} {arrow} {e.target + 1}" + (" (composed)" if e.kind == "composed" else ""))
    lines.append(json.dumps(rep.to_dict()))
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> str:
    g = deformation_graph(args.n, parse_polynomial(args.hp), parse_order(args.order))
    return _graph_text(g) if args.out == "text" else export(g, args.out)


def cmd_incidence(args) -> str:
    g = incidence_graph(args.n, parse_polynomial(args.hp), cap=args.cap)
    return _graph_text(g) if args.out == "text" else export(g, args.out)


def cmd_segment(args) -> str:
    B = _ideal(args)
    cert = find_segment_order(B)
    if cert is None:
        return json.dumps({"infeasible": True}) + "\n" if args.out == "json" else "infeasible\n"
    if not cert.verified:
        raise InvariantError(f"certificate {cert.weights} failed verification")
    if args.out == "json":
        return json.dumps(cert.to_dict()) + "\n"
    return f"omega = {list(cert.weights)}\n{format_matrix(cert.matrix())}\n"


def cmd_verify_flat(args) -> str:
    B = _ideal(args)
    records = []
    for d in all_deformations(B):
        dims = flat_dimensions(d, y1_values=(1,))
        ok = all(v == dims["expected"] for k, v in dims.items() if k != "expected")
        records.append((d, dims, ok))
    q = complement(B.hilbert_polynomial, B.n, B.r + 1)
    if args.out == "json":
        text = json.dumps([{**d.to_dict(flat=ok), "dimensions": dims} for d, dims, ok in records], indent=2) + "\n"
    else:
        lines = [f"q({B.r + 1}) = {q}"]
        for d, dims, ok in records:
            fibers = " ".join(f"{k}={v}" for k, v in dims.items() if k != "expected")
            lines.append(f"{'flat' if ok else 'NOT FLAT'} {fibers} -> {format_ideal(d.target)}")
        text = "\n".join(lines) + "\n"
    if not all(ok for _, _, ok in records):
        sys.stdout.write(text)
        raise InvariantError("a deformation failed the flatness check")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borelnet", description="Borel-fixed ideals and their rational deformations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme(p):
        p.add_argument("--n", type=int, required=True, help="ambient projective dimension")
        p.add_argument("--hp", required=True, help="Hilbert polynomial, e.g. 6t-5")

    def ideal(p):
        p.add_argument("--ideal", required=True, help='generators with optional truncation, e.g. "x3^2, x3*x2 @ 8"')
        p.add_argument("--n", type=int, default=None, help="ambient dimension (inferred from variable indices)")
        p.add_argument("--names", default=None, help="single-letter variable names, largest first, e.g. xyz")

    def output(p, choices, default):
        p.add_argument("--out", choices=choices, default=default)
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    p = sub.add_parser("enumerate", help="list all Borel ideals with a Hilbert polynomial")
    scheme(p)
    output(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("deform", help="the deformation of an ideal for a term order")
    ideal(p)
    p.add_argument("--order", default="deglex", help="deglex | degrevlex | weights=w0,...,wn")
    output(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("deform-all", help="every single rational deformation of an ideal")
    ideal(p)
    output(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_deform_all)

    p = sub.add_parser("graph", help="deformation graph for a term order")
    scheme(p)
    p.add_argument("--order", required=True)
    output(p, ["dot", "json", "text"], "dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("incidence", help="Borel incidence graph")
    scheme(p)
    p.add_argument("--cap", type=int, default=3, help="largest compatible subset searched")
    output(p, ["dot", "json", "text"], "dot")
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("segment", help="search for a weight order making the ideal a segment")
    ideal(p)
    output(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("verify-flat", help="check flatness of every deformation by exact rank")
    ideal(p)
    output(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_verify_flat)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (BorelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
