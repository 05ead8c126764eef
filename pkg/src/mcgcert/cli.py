"""Command-line front end.

Exit status 0 means the command ran, whatever the verdict; 2 is an input
error and 3 a resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .certifier import (
    Certificate,
    DocumentError,
    GeneratorSet,
    Verdict,
    certify,
    check_certificate,
    szepietowski_names,
    szepietowski_set,
)
from .explorer import (
    DEFAULT_MAX_GENUS,
    DEFAULT_MEMORY_BUDGET_MB,
    GroupTooLarge,
    generate,
    reference_group,
    stabilizer_of_form,
)
from .gf2 import Z2Vector
from .quadforms import Z4Form, discrepancy, enumerate_forms, find_violating_transvection

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _idx(v: Z2Vector) -> str:
    return "x" + "+x".join(map(str, v.indices())) if v else "0"


def render_text(gs: GeneratorSet, cert: Certificate) -> str:
    p = cert.payload
    lines = [f"genus {gs.genus}: n = {cert.n} Dehn twists, k = {cert.k} Y-homeomorphisms", f"verdict: {cert.verdict.value}"]
    if cert.verdict is Verdict.FAIL_NO_Y:
        lines.append("  no Y-homeomorphism among the generators; Dehn twists alone do not generate")
    elif cert.verdict is Verdict.FAIL_SPAN:
        lines.append(f"  twist classes span a subspace of rank {p['twist_rank']} < {gs.genus - 1}")
        w = Z2Vector.from_indices(gs.genus, p["witness"])
        lines.append(f"  two-sided class outside the span: {_idx(w)}")
    elif cert.verdict is Verdict.FAIL_QUADRATIC_FORM:
        lines.append(f"  form preserved by every generator: q(x_i) = {p['form']} ({p['construction']})")
        for name, val in zip(gs.twist_names or [f"t{i + 1}" for i in range(gs.n)], p["twist_values"]):
            lines.append(f"    q[{name}] = {val}")
        v = p["violation"]
        axis = Z2Vector.from_indices(gs.genus, v["axis"])
        wit = Z2Vector.from_indices(gs.genus, v["witness"])
        lines.append(
            f"  twist about {_idx(axis)} (q = {v['axis_value']}, {v['axis_admissibility']}) breaks it:"
            f" q({_idx(wit)}) = {v['witness_value']} -> {v['image_value']}, shift {v['discrepancy']}"
        )
    else:
        names = gs.twist_names or [f"t{i + 1}" for i in range(gs.n)]
        lines.append(f"  twist classes span the two-sided subspace (rank {p['twist_rank']})")
        lines.append("  no Z/4 quadratic form is preserved; forced by " + ", ".join(names[i] for i in p["obstruction"]))
        lines.append("  conditions are necessary only, not sufficient")
    lines.append("citations:")
    lines += [f"  - {c}" for c in cert.citations]
    return "\n".join(lines)


def _emit(gs: GeneratorSet, cert: Certificate, fmt: str, verify: bool, out: TextIO) -> None:
    problems = check_certificate(gs, cert) if verify else None
    if fmt == "json":
        doc = cert.to_json()
        if verify:
            doc["verified"] = not problems
        print(dumps(doc), file=out)
    else:
        print(render_text(gs, cert), file=out)
        if verify:
            print("verification: " + ("ok" if not problems else "FAILED: " + "; ".join(problems)), file=out)


def _cmd_certify(args, out: TextIO) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {args.input}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno} column {exc.colno}") from None
    gs = GeneratorSet.from_json(doc)
    _emit(gs, certify(gs), args.format, args.verify, out)
    return EXIT_OK


def _cmd_demo(args, out: TextIO) -> int:
    names = szepietowski_names(args.genus)
    bad = [d for d in args.drop if d not in names]
    if bad:
        raise DocumentError(f"--drop: unknown generator {bad[0]!r}; choose from {', '.join(names)}")
    gs = szepietowski_set(args.genus, args.drop)
    if args.format == "text":
        kept = [n for n in names if n not in args.drop]
        print(f"Szepietowski generators at genus {args.genus}: {', '.join(kept)}", file=out)
        for name, c in zip(gs.twist_names, gs.twist_classes):
            print(f"  [{name}] = {_idx(c)}", file=out)
    _emit(gs, certify(gs), args.format, args.verify, out)
    return EXIT_OK


def _cmd_enumerate(args, out: TextIO) -> int:
    if args.violations and args.genus < 4:
        raise DocumentError("--violations needs genus >= 4")
    rows = []
    for q in enumerate_forms(args.genus):
        row: dict = {"values": list(q.basis_values)}
        if args.violations:
            axis, wit = find_violating_transvection(q)
            row.update(axis=axis.indices(), witness=wit.indices(), discrepancy=discrepancy(q, axis, wit))
        rows.append(row)
    if args.format == "json":
        print(dumps({"genus": args.genus, "count": len(rows), "forms": rows}), file=out)
    else:
        print(f"{len(rows)} Z/4 quadratic forms at genus {args.genus}", file=out)
        for row in rows:
            line = " ".join(map(str, row["values"]))
            if args.violations:
                line += f"  axis {row['axis']} witness {row['witness']} discrepancy {row['discrepancy']}"
            print(line, file=out)
    return EXIT_OK


def _parse_axes(genus: int, text: str) -> list[Z2Vector]:
    text = text.strip()
    try:
        if text.startswith("["):
            items = json.loads(text)
        else:
            items = [t for t in text.split(",") if t]
        return [Z2Vector.parse(genus, item) for item in items]
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"--axes: {exc}") from None


def _parse_form(genus: int, text: str) -> Z4Form:
    vals = text.split(",") if "," in text else list(text)
    try:
        return Z4Form(genus, tuple(int(v) for v in vals))
    except ValueError as exc:
        raise DocumentError(f"--stabilizer: {exc}") from None


def _cmd_explore(args, out: TextIO) -> int:
    opts = {"max_genus": args.max_genus, "memory_budget_mb": args.memory_budget_mb}
    if args.genus > args.max_genus:
        raise DocumentError(f"--genus {args.genus} exceeds --max-genus {args.max_genus}")
    ref = reference_group(args.genus, **opts)
    if args.all:
        group = ref
    else:
        axes = _parse_axes(args.genus, args.axes)
        for a in axes:
            if a.weight % 2:
                raise DocumentError(f"--axes: {a} is one-sided")
        group = generate(axes, args.genus, **opts)
    report: dict = {
        "genus": args.genus,
        "order": group.order,
        "reference_order": ref.order,
        "proper": group.order < ref.order,
        "generators": list(group.generator_labels),
    }
    if args.stabilizer:
        q = _parse_form(args.genus, args.stabilizer)
        stab = stabilizer_of_form(group, q)
        report["stabilizer"] = {"form": list(q.basis_values), "order": stab.order}
        group = stab
    if args.dump:
        report["elements"] = [m.to_json() for m in group.matrices()]
    if args.format == "json":
        print(dumps(report), file=out)
    else:
        print(f"genus {args.genus}: group of order {report['order']} "
              f"(reference transvection group: {ref.order})", file=out)
        if "stabilizer" in report:
            print(f"stabilizer of q = {report['stabilizer']['form']}: order {report['stabilizer']['order']}", file=out)
        for cols in report.get("elements", []):
            print(cols, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="accepted for harness compatibility; all computation is exact")
    parser = argparse.ArgumentParser(prog="mcgcert", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", parents=[common], help="check a generator-set document")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verify", action="store_true", help="re-check the certificate independently")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("enumerate-forms", parents=[common], help="list every Z/4 quadratic form")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--violations", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("explore", parents=[common], help="enumerate transvection groups")
    p.add_argument("--genus", type=int, required=True)
    axes = p.add_mutually_exclusive_group(required=True)
    axes.add_argument("--axes", help="comma-separated bit strings or a JSON list of index lists")
    axes.add_argument("--all", action="store_true", help="all nonzero two-sided axes")
    p.add_argument("--stabilizer", help="form values, e.g. 1,1,3,1")
    p.add_argument("--max-genus", type=int, default=DEFAULT_MAX_GENUS)
    p.add_argument("--memory-budget-mb", type=int, default=DEFAULT_MEMORY_BUDGET_MB)
    p.add_argument("--dump", action="store_true", help="list elements as column index lists")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("demo", parents=[common], help="run a bundled generating set")
    p.add_argument("set", choices=("szepietowski",))
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--drop", action="append", default=[], help="generator to remove (a1.., b2, y)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_demo)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except GroupTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
