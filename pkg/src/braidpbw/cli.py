"""Command-line front end: build examples, solve for and verify deformations.

Exit codes: 0 success, 1 a mathematical condition fails, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from .catalog import DESCRIPTIONS, NAMES, build_example, default_uq_ansatz
from .errors import BraidPBWError, ParseError
from .hopf import check_hopf_axioms, hopf_from_document
from .koszul import ReductionSystem, confluence_check, degree_bound, hilbert_prefix
from .modalg import act_on_relations, check_module_algebra, format_relation_table
from .pbwdeform import check_pbw, overlap_intersection, solve_kappa
from .products import RMatrixBraiding, Uqsl2Braiding, check_quasitriangular, check_braiding_on_module
from .report import Report

VERBS = ["list", "build", "solve", "verify", "check-axioms", "dims"]


class InputError(Exception):
    pass


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidpbw", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=VERBS)
    p.add_argument("target", nargs="?", help="example name (or a Hopf document for check-axioms)")
    p.add_argument("--n", type=int, help="order of the root of unity q")
    p.add_argument("--convention", choices=["odd-power", "extend"], help="how q^(1/2) is chosen")
    p.add_argument("--lambda", dest="lam", type=_rational, help="R-matrix parameter for T(2)")
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)
    p.add_argument("--c", type=_rational)
    p.add_argument("--kappa", help="file of 'label: expression' lines")
    p.add_argument("--ansatz", help="file of 'label: expr, expr, ...' lines ('*' for every label)")
    p.add_argument("--choice", action="append", default=[], metavar="LABEL=INDEX",
                   help="option index for a multi-valued family label")
    p.add_argument("--degree", type=int, help="degree for dims, bound for axiom checks")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--format", choices=["json", "text"], default="text")
    return p


def _integer_flags(extra: list) -> dict:
    """Remaining '--name int' pairs, used as integer parameters of a kappa."""
    out = {}
    it = iter(extra)
    for flag in it:
        if not flag.startswith("--") or len(flag) < 3:
            raise InputError(f"unrecognised argument {flag!r}")
        name = flag[2:]
        if "=" in name:
            name, value = name.split("=", 1)
        else:
            value = next(it, None)
            if value is None:
                raise InputError(f"flag {flag} needs an integer value")
        if not name.isidentifier():
            raise InputError(f"unrecognised argument {flag!r}")
        try:
            out[name] = int(value)
        except ValueError:
            raise InputError(f"unrecognised argument {flag!r} (integer parameters only)") from None
    return out


def _params(args) -> dict:
    params = {"n": args.n, "convention": args.convention, "lambda": args.lam,
              "a": args.a, "b": args.b, "c": args.c}
    return {k: v for k, v in params.items() if v is not None}


def _read_lines(path: str) -> list:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise InputError(f"{path}:{lineno}: expected 'label: expression'")
        label, expr = line.split(":", 1)
        out.append((label.strip(), expr.strip()))
    return out


def read_kappa_file(path: str) -> dict:
    entries = {}
    for label, expr in _read_lines(path):
        if label in entries:
            raise InputError(f"{path}: label {label} given twice")
        entries[label] = expr
    return entries


def read_ansatz_file(path: str, bundle) -> dict:
    H = bundle.hopf
    out = {}
    for label, exprs in _read_lines(path):
        elems = [H.parse(e.strip(), scalars=bundle.scalars) for e in exprs.split(",") if e.strip()]
        targets = bundle.pres.labels if label == "*" else [label]
        for t in targets:
            if t not in bundle.pres.labels:
                raise InputError(f"{path}: unknown relation label {t}")
            out.setdefault(t, []).extend(elems)
    return out


# ---------------------------------------------------------------- verbs


def do_list(args) -> tuple:
    rows = [{"name": n, "description": DESCRIPTIONS[n]} for n in NAMES]
    text = "\n".join(f"{r['name']:22s} {r['description']}" for r in rows)
    return 0, {"examples": rows}, text


def _bundle(args):
    if not args.target:
        raise InputError("an example name is required")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        bundle = build_example(args.target, _params(args))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return bundle


def do_build(args) -> tuple:
    b = _bundle(args)
    doc = b.summary()
    doc["relation table"] = format_relation_table(act_on_relations(b.action, b.pres))
    doc["intersection dimension"] = len(overlap_intersection(b.pres))
    for note in b.algebra.notes:
        doc.update(note)
    lines = [f"{b.name}: {doc['description']}", f"hopf algebra: {b.hopf.name}",
             f"generators: {', '.join(doc['generators'])}", "relations:"]
    lines += [f"  {l} = {r}" for l, r in doc["relations"].items()]
    if "opposite relations" in doc:
        lines.append("braided opposite relations:")
        lines += [f"  {r}" for r in doc["opposite relations"]]
    lines.append("action on relations:")
    lines += [f"  {k} = {v}" for k, v in doc["relation table"].items()]
    lines.append(f"intersection dimension: {doc['intersection dimension']}")
    if "overlaps checked" in doc:
        lines.append(f"overlaps checked: {', '.join(doc['overlaps checked'])}")
    lines += [f"warning: {w}" for w in b.warnings]
    return 0, doc, "\n".join(lines)


def _ansatz(args, b):
    if args.ansatz:
        return read_ansatz_file(args.ansatz, b), "file"
    if b.hopf.finite:
        return None, "full basis of H"
    return default_uq_ansatz(b), "1, K^(+-n), E^n, F^n at every relation"


def do_solve(args) -> tuple:
    b = _bundle(args)
    ansatz, source = _ansatz(args, b)
    sol = solve_kappa(b.pres, b.action, ansatz)
    doc = {"example": b.name, "params": b.summary()["params"], "ansatz": source}
    doc.update(sol.report())
    if not b.hopf.finite:
        doc["scope"] = "restricted ansatz: a family check, not a classification"
    lines = [f"{b.name}: parameter space dimension: {sol.dimension}",
             f"ansatz: {source}", f"constraints: {sol.constraint_count}",
             f"intersection dimension: {len(sol.overlaps)}"]
    if "scope" in doc:
        lines.append(doc["scope"])
    for k, kappa in enumerate(doc["basis"], 1):
        nonzero = {l: e for l, e in kappa.items() if e != "0"}
        lines.append(f"  basis {k}: " + ", ".join(f"kappa({l}) = {e}" for l, e in nonzero.items()))
    return 0, doc, "\n".join(lines)


def _choices(args) -> dict:
    out = {}
    for item in args.choice:
        if "=" not in item:
            raise InputError(f"--choice expects LABEL=INDEX, got {item!r}")
        label, idx = item.split("=", 1)
        try:
            out[label.strip()] = int(idx)
        except ValueError:
            raise InputError(f"--choice index must be an integer, got {idx!r}") from None
    return out


def do_verify(args, integers: dict) -> tuple:
    b = _bundle(args)
    ints = dict(integers)
    if b.params.get("n") is not None:
        ints.setdefault("n", b.params["n"])
    if args.kappa:
        kappas = [("kappa file", b.kappa(read_kappa_file(args.kappa), ints))]
    elif b.expected_solution():
        kappas = [(f"expected basis {k}", kap) for k, kap in enumerate(b.expected_solution(), 1)]
    else:
        kappas = [("family", b.family_kappa(ints, _choices(args)))]
    overlaps = overlap_intersection(b.pres)
    reports = [(name, check_pbw(kap, overlaps)) for name, kap in kappas]
    ok = all(r.ok for _, r in reports)
    doc = {"example": b.name, "params": b.summary()["params"], "ok": ok,
           "reports": {name: r.to_dict() for name, r in reports}}
    lines = [f"{b.name}: {'pass' if ok else 'FAIL'}"]
    for name, r in reports:
        lines.append(f"{name}:")
        lines.append(_indent(r.to_text() if not r.ok else _short(r)))
    return (0 if ok else 1), doc, "\n".join(lines)


def _short(rep: Report) -> str:
    return f"{rep.kind}: pass ({len(rep.checks)} checks)\n  kappa: {rep.info.get('kappa')}"


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


def do_check_axioms(args) -> tuple:
    bound = degree_bound(args.degree)
    target = args.target
    if not target:
        raise InputError("an example name or Hopf document is required")
    reports = []
    if target not in NAMES and Path(target).is_file():
        try:
            doc = json.loads(Path(target).read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"{target}: not valid JSON ({exc.msg})") from None
        H = hopf_from_document(doc)
        reports.append(check_hopf_axioms(H, bound))
        name = target
    else:
        b = _bundle(args)
        name = b.name
        reports.append(check_hopf_axioms(b.hopf, bound))
        reports.append(check_module_algebra(b.action, b.pres))
        modules = [f.action for f in b.factors] if b.factors else [b.action]
        if isinstance(b.braiding, RMatrixBraiding):
            reports.append(check_quasitriangular(b.hopf, b.braiding.R, modules[:1]))
        elif isinstance(b.braiding, Uqsl2Braiding):
            reports.append(check_braiding_on_module(b.braiding, modules[-1]))
        if b.kind == "twisted":
            gens = b.pres.gens
            order = list(gens.names)
            reports.append(confluence_check(ReductionSystem.from_relations(gens, b.pres.relations, order)))
    ok = all(r.ok for r in reports)
    doc = {"target": name, "ok": ok, "degree bound": bound, "reports": [r.to_dict() for r in reports]}
    text = "\n".join([f"{name}: {'pass' if ok else 'FAIL'}"] + [r.to_text() for r in reports])
    return (0 if ok else 1), doc, text


def do_dims(args) -> tuple:
    b = _bundle(args)
    d = args.degree if args.degree is not None else 4
    bound = max(degree_bound(), d) if args.degree is not None else degree_bound()
    dims = hilbert_prefix(b.pres, d, bound)
    doc = {"example": b.name, "params": b.summary()["params"], "dimensions": dims}
    return 0, doc, ", ".join(str(x) for x in dims)


# ---------------------------------------------------------------- entry


def run(argv=None) -> tuple:
    """(exit code, document, text) for one invocation."""
    parser = make_parser()
    args, extra = parser.parse_known_args(argv)
    if extra and args.verb != "verify":
        raise InputError(f"unrecognised arguments: {' '.join(extra)}")
    integers = _integer_flags(extra)
    if args.verb == "list":
        return do_list(args)
    if args.verb == "build":
        return do_build(args)
    if args.verb == "solve":
        return do_solve(args)
    if args.verb == "verify":
        return do_verify(args, integers)
    if args.verb == "check-axioms":
        return do_check_axioms(args)
    return do_dims(args)


def render(doc: dict, text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    return text + "\n"


def main(argv=None) -> int:
    try:
        fmt = "text"
        args_ns, _ = make_parser().parse_known_args(argv)
        fmt = args_ns.format
        code, doc, text = run(argv)
        out = render(doc, text, fmt)
        if args_ns.output:
            Path(args_ns.output).write_text(out)
        else:
            sys.stdout.write(out)
        return code
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    except (InputError, ParseError, BraidPBWError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
