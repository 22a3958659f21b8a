"""Command-line front end: ``metricdeform <command> ...``.

Every command builds a Report ``{command, status, payload, residuals}``;
exit code 0 means pass, 1 a violated claim, 2 a usage or parse error.
Document arguments are JSON files, inline JSON, or ``catalog:NAME``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .bilinear import BilinearForm, FormError, check_metric, has_metric
from .cohomology import MAX_COHOMOLOGY, Cochain, CochainError, cohomology
from .deformation import DeformationError, FormalDeformation, check_deformation, deformed_algebra
from .exactfield import ParameterError, ParseError, S, parse_scalar
from .extension import DoubleExtensionSpec, ExtensionError, double_extension
from .superalg import (AlgebraError, JacobiError, LinearMap, SuperAlgebra, check_jacobi,
                       homomorphism_residuals, is_isomorphism)


class UsageError(Exception):
    pass


class Loaded:
    """An algebra with the catalog entry it came from, if any."""

    def __init__(self, alg, entry=None):
        self.alg = alg
        self.entry = entry


def _read_json(arg):
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{arg}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _bindings(pairs):
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise UsageError(f"--at expects name=value, got {p!r}")
        k, v = p.split("=", 1)
        out[k.strip()] = parse_scalar(v)
    return out


def _apply_at(alg, bindings):
    if not bindings:
        return alg
    unknown = set(bindings) - set(alg.parameters())
    if unknown:
        raise UsageError(f"--at names unknown parameter(s) {sorted(unknown)}; algebra has {sorted(alg.parameters())}")
    return alg.substitute(bindings)


def load_algebra(arg, bindings=None):
    if arg.startswith("catalog:"):
        e = catalog.get(arg[len("catalog:"):])
        return Loaded(_apply_at(e.algebra, bindings), e)
    doc = _read_json(arg)
    if isinstance(doc, dict) and "algebra" in doc:
        doc = doc["algebra"]
    return Loaded(_apply_at(SuperAlgebra.from_doc(doc), bindings))


def _cochain(loaded, value, degree=2):
    if isinstance(value, list):
        return Cochain.from_doc(loaded.alg, value, degree)
    value = str(value)
    if "e^" not in value:
        if loaded.entry is None:
            raise UsageError("f-labels need a catalog algebra")
        return loaded.entry.combination(value).on(loaded.alg)
    return Cochain.from_text(loaded.alg, value, degree)


def _render(x):
    if isinstance(x, Cochain):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def report(command, payload, residuals=(), error=None):
    status = "error" if error else ("fail" if residuals else "pass")
    out = {"command": command, "status": status, "payload": _render(payload), "residuals": _render(list(residuals))}
    if error:
        out["error"] = error
    return out


# ---------------------------------------------------------------------------
# commands

def cmd_validate(args):
    try:
        loaded = load_algebra(args.file, _bindings(args.at))
    except JacobiError as exc:
        return report("validate", {"grading": True, "skew": True, "jacobi": False},
                      [f"{(i + 1, j + 1, k + 1)}: {r}" for (i, j, k), r in exc.violations])
    except AlgebraError as exc:
        return report("validate", {"grading": False}, [str(exc)])
    g = loaded.alg
    bad = check_jacobi(g)
    payload = {"name": g.name, "dims": f"{g.dim_even}|{g.dim_odd}", "grading": True, "skew": True,
               "jacobi": not bad, "parameters": sorted(g.parameters())}
    return report("validate", payload, [f"{(i + 1, j + 1, k + 1)}: {r}" for (i, j, k), r in bad])


def cmd_cohomology(args):
    if args.degree > MAX_COHOMOLOGY or args.degree < 0:
        raise UsageError(f"--degree must lie in 0..{MAX_COHOMOLOGY}")
    g = load_algebra(args.file, _bindings(args.at)).alg
    H = cohomology(g, args.degree, args.parity)
    return report("cohomology", {"degree": args.degree, "parity": args.parity, "dim": H.dim,
                                 "z_dim": H.cocycle_dim, "b_dim": H.coboundary_dim,
                                 "representatives": H.representatives})


def _form_from_arg(g, arg):
    doc = _read_json(arg)
    if isinstance(doc, list):
        doc = {"matrix": doc}
    try:
        return BilinearForm(g, [[parse_scalar(str(c)) for c in r] for r in doc["matrix"]])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed form document: {exc}") from None


def _forms_of(loaded, arg):
    if arg and arg.startswith("form:"):
        if loaded.entry is None:
            raise UsageError("named forms need a catalog algebra")
        label = arg[len("form:"):]
        if label not in loaded.entry.forms:
            raise UsageError(f"{loaded.entry.name} has no form {label!r}")
        return loaded.entry.form(label)
    return _form_from_arg(loaded.alg, arg)


def cmd_metric(args):
    loaded = load_algebra(args.file, _bindings(args.at))
    g = loaded.alg
    if args.form:
        B = _forms_of(loaded, args.form)
        v = check_metric(g, B).as_dict()
        return report("metric", v, [k for k, ok in v.items() if not ok])
    ok, B = has_metric(g)
    payload = {"has_metric": ok, "witness": B.matrix.tolist() if ok else None}
    return report("metric", payload, [] if ok else ["no nondegenerate invariant form"])


def _terms(loaded, arg):
    doc = _read_json(arg)
    if isinstance(doc, dict) and "terms" in doc:
        doc = doc["terms"]
    if isinstance(doc, dict):
        items = [(int(k), v) for k, v in doc.items()]
    else:
        items = [(int(t["order"]), t.get("cochain", t.get("expr"))) for t in doc]
    return {n: _cochain(loaded, v) for n, v in items}


def _target(arg, bindings):
    if arg.startswith("catalog:"):
        arg = arg[len("catalog:"):]
    try:
        alg = catalog.get(arg).algebra
    except catalog.CatalogError:
        alg = load_algebra(arg).alg
    return alg.substitute(bindings) if bindings else alg


def cmd_deform(args):
    loaded = load_algebra(args.file, _bindings(args.at))
    D = FormalDeformation(loaded.alg, _terms(loaded, args.terms))
    res = check_deformation(D, args.order)
    payload = {"order": args.order, "terms": {n: D.terms[n] for n in sorted(D.terms)},
               "residual_orders": [n for n, _ in res]}
    residuals = [f"order {n}: {r}" for n, r in res]
    if args.target:
        if not args.witness:
            raise UsageError("--target needs --witness")
        w = _read_json(args.witness)
        if isinstance(w, list):
            w = {"images": w}
        gt = deformed_algebra(D, check=False)
        at = {k: parse_scalar(str(v)) for k, v in (w.get("at") or {}).items()}
        if at:
            gt = gt.substitute(at)
        target = _target(args.target, {k: parse_scalar(str(v)) for k, v in (w.get("target_at") or {}).items()})
        P = LinearMap.from_images(target, gt, w["images"])
        bad = homomorphism_residuals(P)
        iso = not bad and is_isomorphism(P)
        payload["isomorphism"] = iso
        residuals += [f"witness [{i + 1},{j + 1}]: {r}" for (i, j), r in bad]
        if not bad and not iso:
            residuals.append("witness is not invertible")
    return report("deform", payload, residuals)


def cmd_double_extend(args):
    loaded = load_algebra(args.file, _bindings(args.at))
    g = loaded.alg
    if args.form:
        B = _forms_of(loaded, args.form)
    else:
        ok, B = has_metric(g)
        if not ok:
            raise ExtensionError("base algebra carries no invariant scalar product")
    d = _read_json(args.derivation)
    if isinstance(d, list):
        d = {"matrix": d}
    M = [[parse_scalar(str(c)) for c in r] for r in d["matrix"]]
    from .exactfield import Matrix
    from .superalg import abelian
    Dm = LinearMap(g, g, Matrix(M, g.dim), int(d.get("parity", 0)))
    line = abelian(1, 0)
    spec = DoubleExtensionSpec(g, B, line, [Dm], BilinearForm(line, [[parse_scalar(str(args.b))]]))
    alg, form = double_extension(spec, name=args.name)
    payload = {"algebra": alg.to_doc(), "form": form.to_doc("B"), "brackets": alg.describe(),
               "metric": check_metric(alg, form).as_dict()}
    if args.out:
        Path(args.out + ".algebra.json").write_text(json.dumps(alg.to_doc(), indent=2, sort_keys=True))
        Path(args.out + ".form.json").write_text(json.dumps(form.to_doc("B"), indent=2, sort_keys=True))
    return report("double-extend", payload)


def cmd_catalog(args):
    if args.action == "list":
        return report("catalog list", {"entries": catalog.names()})
    if args.action == "export":
        if not args.name:
            raise UsageError("catalog export needs a name")
        return report("catalog export", catalog.export(args.name))
    if args.name:
        rep = catalog.verify_entry(args.name)
        failed = [k for k, v in rep.items() if isinstance(v, dict) and not v["pass"]]
        return report(f"catalog verify {args.name}",
                      {"report": rep, "table": catalog.summary_row(args.name, rep)}, failed)
    out = catalog.verify_all()
    ext = catalog.verify_extension_cases()
    failed = [n for n, r in out["entries"].items() if not r["pass"]]
    if not ext["pass"]:
        failed.append("double extension cases")
    return report("catalog verify", {"entries": len(out["entries"]), "table": out["table"],
                                     "double_extension": ext["pass"]}, failed)


# ---------------------------------------------------------------------------

def _print_human(rep, out):
    def walk(x, indent):
        pad = "  " * indent
        if isinstance(x, dict):
            for k, v in x.items():
                if isinstance(v, (dict, list)) and v:
                    print(f"{pad}{k}:", file=out)
                    walk(v, indent + 1)
                else:
                    print(f"{pad}{k}: {v}", file=out)
        elif isinstance(x, list):
            for v in x:
                if isinstance(v, list) and not any(isinstance(u, (dict, list)) for u in v):
                    print(f"{pad}- [{', '.join(str(u) for u in v)}]", file=out)
                elif isinstance(v, (dict, list)):
                    print(f"{pad}-", file=out)
                    walk(v, indent + 1)
                else:
                    print(f"{pad}- {v}", file=out)
    print(f"{rep['command']}: {rep['status'].upper()}", file=out)
    if rep.get("error"):
        print(f"  error: {rep['error']}", file=out)
    walk(rep["payload"], 1)
    if rep["residuals"]:
        print("  residuals:", file=out)
        walk(rep["residuals"], 2)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="canonical JSON output")
    common.add_argument("--at", action="append", default=argparse.SUPPRESS, metavar="NAME=VALUE",
                        help="substitute a parameter (repeatable)")
    p = argparse.ArgumentParser(prog="metricdeform", description="Exact checks for metric Lie superalgebras.")
    p.add_argument("--json", action="store_true")
    p.add_argument("--at", action="append", default=[], metavar="NAME=VALUE")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check grading, skew symmetry and Jacobi")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("cohomology", parents=[common], help="dimension and representatives of H^n")
    s.add_argument("file")
    s.add_argument("--degree", type=int, default=2)
    s.add_argument("--parity", choices=["even", "odd", "both"], default="even")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("metric", parents=[common], help="check a form or search for an invariant scalar product")
    s.add_argument("file")
    s.add_argument("--form", help="JSON form document or form:LABEL for catalog algebras")
    s.set_defaults(func=cmd_metric)

    s = sub.add_parser("deform", parents=[common], help="residuals of a formal deformation")
    s.add_argument("file")
    s.add_argument("--terms", required=True)
    s.add_argument("--order", type=int, default=2)
    s.add_argument("--target")
    s.add_argument("--witness")
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("double-extend", parents=[common], help="double extension by one even derivation")
    s.add_argument("file")
    s.add_argument("--derivation", required=True)
    s.add_argument("--form")
    s.add_argument("--b", default="0")
    s.add_argument("--name", default="")
    s.add_argument("--out", help="write PREFIX.algebra.json and PREFIX.form.json")
    s.set_defaults(func=cmd_double_extend)

    s = sub.add_parser("catalog", parents=[common], help="verify, list or export catalog entries")
    s.add_argument("action", choices=["verify", "list", "export"])
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def run(argv=None):
    """Parse and execute; returns (report, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = args.func(args)
        code = 0 if rep["status"] == "pass" else 1
    except (UsageError, ParseError, ParameterError, CochainError, AlgebraError, FormError,
            catalog.CatalogError, KeyError, ValueError) as exc:
        code = 2
        if isinstance(exc, (ExtensionError, DeformationError)):
            code = 1
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        rep = report(args.command, {}, error=str(msg))
    return rep, code


def main(argv=None):
    try:
        rep, code = run(argv)
    except SystemExit as exc:
        return exc.code
    args_json = "--json" in (argv if argv is not None else sys.argv[1:])
    if args_json:
        print(json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        _print_human(rep, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
