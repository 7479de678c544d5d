"""Command-line front end.

Exit codes: 0 success, 1 I/O or internal error (and failed checks under
``verify``), 2 bad arguments or inadmissible order, 3 degenerate design,
4 concurrence classes that do not form an association scheme.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import design as dz
from . import errata
from . import graph as gr
from . import modmat as mm
from . import ortho as ot
from . import signmat as sm
from . import verify as vf
from .errors import DegenerateDesign, InadmissibleOrder
from .modmat import MatrixType

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_DEGENERATE, EXIT_INVALID_SCHEME = 0, 1, 2, 3, 4

MATRIX_SCHEMA = "mmatrix.matrix/1"
ORTHO_SCHEMA = "mmatrix.ortho/1"
DESIGN_SCHEMA = "mmatrix.design/1"
GRAPH_SCHEMA = "mmatrix.graph/1"
VERIFY_SCHEMA = "mmatrix.verify/1"


class UsageError(Exception):
    pass


def format_matrix(rows) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)


def format_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _lists(matrix):
    return [list(row) for row in matrix]


def _sign(args) -> sm.SignMatrix:
    return sm.sign_matrix(mm.base_matrix(args.n, args.type), args.convention)


def _require_format(args, allowed) -> None:
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not available for {args.command}")


# ---- generate -------------------------------------------------------------

def cmd_generate(args) -> str:
    _require_format(args, ("text", "json", "csv"))
    base = mm.base_matrix(args.n, args.type)
    if args.stage == "base":
        rows = base.entries
    else:
        rows = sm.sign_matrix(base, args.convention).entries
    if args.format == "text":
        return format_matrix(rows)
    if args.format == "csv":
        return format_csv(rows)
    return dump_json({
        "schema": MATRIX_SCHEMA,
        "n": args.n,
        "type": args.type.value,
        "stage": args.stage,
        "convention": args.convention.value if args.stage == "sign" else None,
        "entries": _lists(rows),
    })


# ---- ortho ----------------------------------------------------------------

def ortho_to_dict(rep: ot.OrthoReport, with_gram: bool) -> dict:
    out = {
        "schema": ORTHO_SCHEMA,
        "n": rep.n,
        "type": rep.mtype.value,
        "theoretical": list(rep.theoretical),
        "realized": [
            {"value": g, "pairs": [list(p) for p in pairs]}
            for g, pairs in rep.realized.items()
        ],
        "missing": list(rep.missing),
        "pairs": [
            {"pair": list(o.pair), "sum": sum(o.pair),
             "realized": [o.first_realized, o.second_realized]}
            for o in rep.cooccurrence
        ],
        "trivial": {
            "self_product": rep.trivial.self_product,
            "first_row_product": rep.trivial.first_row_product,
        },
        "spectrum_sum": sum(rep.theoretical),
    }
    if with_gram:
        out["gram"] = _lists(rep.gram)
    return out


def _fmt_pair(p) -> str:
    return f"({p[0]},{p[1]})"


def ortho_text(rep: ot.OrthoReport, with_gram: bool) -> str:
    lines = [
        f"order: {rep.n}",
        f"type: {rep.mtype.value}",
        "theoretical: " + " ".join(map(str, rep.theoretical)),
        "realized:",
    ]
    for g, pairs in rep.realized.items():
        lines.append(f"  {g}: " + " ".join(_fmt_pair(p) for p in pairs))
    lines.append("missing: " + " ".join(map(str, rep.missing)))
    lines.append("pairs:")
    for o in rep.cooccurrence:
        state = "both realized" if o.first_realized and o.second_realized else (
            "neither realized" if o.together else "one side realized")
        lines.append(f"  {_fmt_pair(o.pair)} sum {sum(o.pair)} {state}")
    first = rep.trivial.first_row_product
    lines.append(f"trivial: self {rep.trivial.self_product}, first row "
                 + ("none" if first is None else str(first)))
    lines.append(f"spectrum sum: {sum(rep.theoretical)}")
    text = "\n".join(lines) + "\n"
    if with_gram:
        text += "gram:\n" + format_matrix(rep.gram)
    return text


def cmd_ortho(args) -> str:
    _require_format(args, ("text", "json"))
    rep = ot.ortho_report(_sign(args))
    if args.format == "json":
        return dump_json(ortho_to_dict(rep, args.gram))
    return ortho_text(rep, args.gram)


# ---- design ---------------------------------------------------------------

def identity_to_dict(x: dz.Identity) -> dict:
    return {"name": x.name, "lhs": x.lhs, "rhs": x.rhs, "relation": x.relation,
            "passed": x.passed}


def design_to_dict(d: dz.PBIBDesign) -> dict:
    s = d.scheme
    report = dz.validate_pbib(d)
    mtype, n, _ = d.incidence.provenance
    return {
        "schema": DESIGN_SCHEMA,
        "n": n,
        "type": mtype.value,
        "incidence": _lists(d.incidence.cells),
        "v": d.v,
        "b": d.b,
        "r": d.r,
        "k": d.k,
        "lambda_bounds": list(dz.lambda_bounds(mtype, n)),
        "classes": [
            {"index": i + 1, "lambda": s.lambdas[i], "n": s.n[i], "P": _lists(s.P[i])}
            for i in range(s.m)
        ],
        "scheme_valid": s.valid,
        "failure_witness": s.failure_witness,
        "identities": [identity_to_dict(x) for x in report.identities],
        "passed": report.passed,
    }


def revalidate(doc: dict) -> list[dz.Identity]:
    """Recompute every identity from a parsed design document."""
    classes = sorted(doc["classes"], key=lambda c: c["index"])
    return dz.check_identities(
        doc["v"], doc["b"], doc["r"], doc["k"],
        [c["lambda"] for c in classes], [c["n"] for c in classes],
        [c["P"] for c in classes], doc["incidence"], doc["lambda_bounds"],
    )


def design_text(d: dz.PBIBDesign) -> str:
    s = d.scheme
    report = dz.validate_pbib(d)
    out = ["incidence:", format_matrix(d.incidence.cells).rstrip("\n"),
           f"v = {d.v}, b = {d.b}, r = {d.r}, k = {d.k}",
           f"classes: {s.m}"]
    for i in range(s.m):
        out.append(f"  class {i + 1}: lambda = {s.lambdas[i]}, n = {s.n[i]}")
        for row in s.P[i]:
            out.append("    " + " ".join(map(str, row)))
    out.append("association scheme: " + ("valid" if s.valid else
                                         f"INVALID ({s.failure_witness})"))
    out.append("identities:")
    for x in report.identities:
        out.append(f"  [{'pass' if x.passed else 'FAIL'}] {x.name}: {x.lhs} {x.relation} {x.rhs}")
    out.append("overall: " + ("pass" if report.passed else "fail"))
    return "\n".join(out) + "\n"


def cmd_design(args) -> tuple[str, int]:
    _require_format(args, ("text", "json", "csv"))
    d = dz.build_design(_sign(args))
    code = EXIT_OK if d.scheme.valid else EXIT_INVALID_SCHEME
    if args.format == "csv":
        return format_csv(d.incidence.cells), code
    if args.format == "json":
        return dump_json(design_to_dict(d)), code
    return design_text(d), code


# ---- graph ----------------------------------------------------------------

def graph_dot(g: gr.BipartiteGraph) -> str:
    lines = ["graph G {"]
    for a, c in g.sorted_edges():
        lines.append(f"  t{a} -- b{g.block_index(c)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> str:
    _require_format(args, ("dot", "text", "json"))
    g = gr.bipartite_graph(dz.incidence(_sign(args)))
    if args.format == "dot":
        return graph_dot(g)
    reg = gr.check_regular(g)
    comps = gr.connected_components(g)
    if args.format == "json":
        return dump_json({
            "schema": GRAPH_SCHEMA,
            "n": args.n,
            "type": args.type.value,
            "left": [f"t{a}" for a in g.left],
            "right": [f"b{g.block_index(c)}" for c in g.right],
            "edges": [[f"t{a}", f"b{g.block_index(c)}"] for a, c in g.sorted_edges()],
            "regular": reg.is_regular,
            "degree": reg.degree,
            "components": len(comps),
        })
    return (f"left: {reg.left_size}\nright: {reg.right_size}\nedges: {reg.edge_count}\n"
            f"regular: {'yes' if reg.is_regular else 'no'}\n"
            f"degree: {reg.degree if reg.is_regular else '-'}\n"
            f"components: {len(comps)}\n")


# ---- verify ---------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    _require_format(args, ("text", "json"))
    results = vf.verify_range(args.type, args.min, args.max)
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = dump_json({
            "schema": VERIFY_SCHEMA,
            "type": args.type.value,
            "orders": [
                {"n": r.n, "passed": r.passed,
                 "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                            for c in r.checks],
                 "findings": r.findings}
                for r in results
            ],
            "passed": ok,
        })
        return text, EXIT_OK if ok else EXIT_IO
    lines = [f"type {args.type.value}, orders {args.min}..{args.max}"]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        lines.append(f"n={r.n:<4d} {status}  {sum(c.passed for c in r.checks)}/{len(r.checks)} checks")
        for c in r.failed():
            lines.append(f"    FAIL {c.name} {c.detail}".rstrip())
        for c in r.checks:
            if c.name == "determinant":
                lines.append(f"    determinant {c.detail}")
        for f in r.findings:
            lines.append(f"    finding: {f}")
    lines.append(f"{len(results)} orders, " + ("all checks passed" if ok else "FAILURES"))
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_IO


def cmd_errata(args) -> str:
    _require_format(args, ("text", "json"))
    items = errata.all_errata()
    if args.format == "json":
        return dump_json([
            {"key": e.key, "summary": e.summary, "stated": e.stated,
             "computed": e.computed, "confirmed": e.confirmed}
            for e in items
        ])
    lines = []
    for e in items:
        lines.append(f"{e.key}: {'confirmed' if e.confirmed else 'not reproduced'}")
        lines.append(f"  stated:   {json.dumps(e.stated)}")
        lines.append(f"  computed: {json.dumps(e.computed)}")
    return "\n".join(lines) + "\n"


# ---- plumbing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mmatrix",
        description="Build (1,-1) M-matrices and the designs and graphs they induce.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format="text", convention=True):
        sp.add_argument("--n", type=int, required=True, help="matrix order")
        sp.add_argument("--type", type=MatrixType.parse, required=True,
                        metavar="{I,II}", help="matrix type")
        if convention:
            sp.add_argument("--convention", type=sm.SignConvention.parse,
                            default=sm.SignConvention.Standard,
                            metavar="{standard,flipped}")
        else:
            sp.set_defaults(convention=sm.SignConvention.Standard)
        sp.add_argument("--format", choices=("text", "json", "csv", "dot"),
                        default=default_format)
        sp.add_argument("--out", help="write to this path instead of stdout")

    g = sub.add_parser("generate", help="print a base or sign matrix")
    common(g)
    g.add_argument("--stage", choices=("base", "sign"), default="sign")

    o = sub.add_parser("ortho", help="orthogonal-number analysis")
    common(o)
    o.add_argument("--gram", action="store_true", help="include the Gram matrix")

    d = sub.add_parser("design", help="extract and validate the SPBIB design")
    common(d, convention=False)

    gg = sub.add_parser("graph", help="export the bipartite graph")
    common(gg, default_format="dot", convention=False)

    v = sub.add_parser("verify", help="check every invariant over a range of orders")
    v.add_argument("--type", type=MatrixType.parse, required=True, metavar="{I,II}")
    v.add_argument("--min", type=int, default=2)
    v.add_argument("--max", type=int, required=True)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out")

    e = sub.add_parser("errata", help="list known discrepancies with computed values")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--out")
    return p


COMMANDS = {
    "generate": cmd_generate,
    "ortho": cmd_ortho,
    "design": cmd_design,
    "graph": cmd_graph,
    "verify": cmd_verify,
    "errata": cmd_errata,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    code = EXIT_OK
    try:
        result = COMMANDS[args.command](args)
        if isinstance(result, tuple):
            text, code = result
        else:
            text = result
    except InadmissibleOrder as exc:
        print(f"mmatrix: {exc}", file=stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"mmatrix: {exc}", file=stderr)
        return EXIT_USAGE
    except DegenerateDesign as exc:
        print(f"mmatrix: degenerate design: {exc}", file=stderr)
        return EXIT_DEGENERATE
    except Exception as exc:  # noqa: BLE001
        print(f"mmatrix: internal error: {exc}", file=stderr)
        return EXIT_IO

    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            stdout.write(text)
    except OSError as exc:
        print(f"mmatrix: cannot write output: {exc}", file=stderr)
        return EXIT_IO
    if code == EXIT_INVALID_SCHEME:
        print("mmatrix: concurrence classes do not form an association scheme", file=stderr)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))
