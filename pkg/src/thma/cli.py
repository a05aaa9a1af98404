"""Command-line front end.

Exit codes: 0 success / hypothesis verified; 1 axiom violation;
2 parse or type error; 3 size budget exceeded; 4 theorem hypothesis
fails; 5 hypothesis holds but the conclusion check fails (soundness
alarm, should never occur).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import documents as docs
from .constructions import (cech_category, comma_slice, fatten, s_category,
                            t_category, t_op_category, twisted_arrow)
from .core import validate_functor
from .homology import homology, normalized_chains
from .simplicial import (BudgetExceeded, DEFAULT_BUDGET, bisimplicial_D,
                         diagonal, nerve)
from .verifiers import morita_check, segal_cover_check, theorem_a_check

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_HYPOTHESIS = 4
EXIT_SOUNDNESS = 5


def _report(command: list[str], inputs: dict, results: dict) -> dict:
    return {
        "format": "report/1",
        "command": command,
        "inputs": {name: docs.digest(data) for name, data in inputs.items()},
        "results": results,
    }


def _emit(report: dict, args, started: float) -> None:
    text = docs.canonical_json(report) + "\n"
    if args.format == "text":
        lines = [f"{k}: {docs.canonical_json(v)}"
                 for k, v in report["results"].items()]
        text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    elapsed = int((time.monotonic() - started) * 1000)
    print(f"elapsed: {elapsed} ms", file=sys.stderr)


def _certificate_summary(detail: dict) -> dict:
    out = {}
    for key, cert in detail.get("fibers", {}).items():
        if cert.ok:
            out[key] = {"certified": True, "kind": cert.kind,
                        "strength": cert.strength,
                        "witness": cert.witness}
        else:
            entry = {"certified": False}
            if cert.report is not None:
                entry["homology"] = cert.report.to_dict()
            out[key] = entry
    return out


def _verdict_results(v) -> dict:
    results = {
        "theorem": v.theorem,
        "hypothesis_ok": v.hypothesis_ok,
        "conclusion_ok": v.conclusion_ok,
        "pi0_bijection": v.pi0_bijection,
        "homology_equivalence": v.equivalence.passed,
        "through_degree": v.through_degree,
        "conclusion_semantics": (
            "homology equivalence plus pi0 bijection through degree "
            f"{v.through_degree}; fundamental groups are not checked"),
    }
    if "fibers" in v.hypothesis_detail:
        results["fibers"] = _certificate_summary(v.hypothesis_detail)
    else:
        results["hypothesis"] = {k: bool(val) for k, val
                                 in v.hypothesis_detail.items()}
    if v.extras:
        results["extras"] = {k: bool(val) for k, val in v.extras.items()}
    return results


def cmd_validate(args) -> int:
    started = time.monotonic()
    data = docs.load_json(args.path)
    if data.get("format") == "functor/1":
        f = docs.functor_from_doc(data, Path(args.path).parent, args.path)
        report = validate_functor(f)
        canonical = dict(data)
    else:
        C, report = docs.validate_category_doc(data, args.path)
        canonical = docs.category_to_doc(C)
    _emit(_report(["validate", args.path], {"input": canonical},
                  {"valid": report.ok,
                   "violations": list(report.violations)}),
          args, started)
    return EXIT_OK if report.ok else EXIT_INVALID


def _load_functor(path):
    data = docs.load_json(path)
    return docs.functor_from_doc(data, Path(path).parent, path), data


def cmd_build(args) -> int:
    started = time.monotonic()
    kind = args.construction
    inputs = {}
    out_doc = None
    results = {}
    if kind in ("T", "Top", "twisted"):
        data = docs.load_json(args.inputs[0])
        C = docs.category_from_doc(data, args.inputs[0])
        inputs["category"] = docs.category_to_doc(C)
        built = {"T": lambda: t_category(C)[0],
                 "Top": lambda: t_op_category(C)[0],
                 "twisted": lambda: twisted_arrow(C)[0]}[kind]()
        out_doc = docs.category_to_doc(built)
        results = {"objects": len(built.objects),
                   "morphisms": len(built.morphisms)}
    elif kind in ("comma", "S"):
        f, data = _load_functor(args.inputs[0])
        inputs["functor"] = data
        built = comma_slice(f)[0] if kind == "comma" else s_category(f).S
        out_doc = docs.category_to_doc(built)
        results = {"objects": len(built.objects),
                   "morphisms": len(built.morphisms)}
    elif kind == "cech":
        data = docs.load_json(args.inputs[0])
        cover = docs.cover_from_doc(data, args.inputs[0])
        inputs["cover"] = docs.cover_to_doc(cover)
        built = cech_category(cover)[0]
        out_doc = docs.category_to_doc(built)
        results = {"objects": len(built.objects),
                   "morphisms": len(built.morphisms)}
    elif kind == "fatten":
        cat_data = docs.load_json(args.inputs[0])
        surj_data = docs.load_json(args.inputs[1])
        Y = docs.category_from_doc(cat_data, args.inputs[0])
        p = docs.surjection_from_doc(surj_data, args.inputs[1])
        inputs["category"] = docs.category_to_doc(Y)
        inputs["surjection"] = surj_data
        if set(p.values()) != set(Y.objects):
            raise docs.ParseError("surjection does not cover the objects")
        X, f = fatten(Y, p)
        out_doc = docs.category_to_doc(X)
        results = {"objects": len(X.objects), "morphisms": len(X.morphisms),
                   "functor_obj_map": dict(f.obj_map),
                   "functor_mor_map": dict(f.mor_map)}
    elif kind in ("D", "diag"):
        f, data = _load_functor(args.inputs[0])
        inputs["functor"] = data
        D = bisimplicial_D(f, args.trunc, args.budget)
        if kind == "diag":
            dD = diagonal(D)
            out_doc = docs.sset_to_doc(dD)
            results = {"levels": {str(n): len(dD.levels[n])
                                  for n in range(dD.trunc + 1)}}
        else:
            out_doc = {
                "format": "bisset/1",
                "truncation": D.trunc,
                "levels": {f"{p},{q}": [docs.render_simplex(x)
                                        for x in D.levels[(p, q)]]
                           for p in range(D.trunc + 1)
                           for q in range(D.trunc + 1)},
            }
            results = {"levels": {f"{p},{q}": len(D.levels[(p, q)])
                                  for p in range(D.trunc + 1)
                                  for q in range(D.trunc + 1)}}
    else:
        raise docs.ParseError(f"unknown construction {kind}")
    results["truncation"] = args.trunc
    report = _report(["build", kind] + list(args.inputs)
                     + ["--trunc", str(args.trunc)], inputs, results)
    if args.output:
        Path(args.output).write_text(
            docs.canonical_json(out_doc) + "\n", encoding="utf-8")
        args = argparse.Namespace(output=None, format=args.format)
    _emit(report, args, started)
    return EXIT_OK


def cmd_homology(args) -> int:
    started = time.monotonic()
    data = docs.load_json(args.path)
    if data.get("format") == "sset/1":
        X = docs.sset_from_doc(data, args.path)
        canonical = docs.sset_to_doc(X)
    else:
        C = docs.category_from_doc(data, args.path)
        canonical = docs.category_to_doc(C)
        X = nerve(C, args.trunc, args.budget)
    rep = homology(normalized_chains(X))
    results = {"homology": rep.to_dict(),
               "reliability": ("degrees <= "
                               f"{rep.certified_through} certified; degree "
                               f"{rep.top} may lose boundaries to the "
                               "truncation")}
    _emit(_report(["homology", args.path, "--trunc", str(args.trunc)],
                  {"input": canonical}, results), args, started)
    return EXIT_OK


def cmd_check(args) -> int:
    started = time.monotonic()
    if args.theorem in ("a", "morita"):
        f, data = _load_functor(args.inputs[0])
        check = theorem_a_check if args.theorem == "a" else morita_check
        verdict = check(f, args.trunc, args.budget)
        inputs = {"functor": data}
    elif args.theorem == "cover":
        data = docs.load_json(args.inputs[0])
        cover = docs.cover_from_doc(data, args.inputs[0])
        verdict = segal_cover_check(cover, args.trunc, args.budget)
        inputs = {"cover": docs.cover_to_doc(cover)}
    else:
        raise docs.ParseError(f"unknown theorem {args.theorem}")
    _emit(_report(["check", args.theorem] + list(args.inputs)
                  + ["--trunc", str(args.trunc)],
                  inputs, _verdict_results(verdict)), args, started)
    return verdict.exit_code()


def cmd_export_dot(args) -> int:
    data = docs.load_json(args.path)
    C = docs.category_from_doc(data, args.path)
    text = docs.export_dot(C)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thma",
        description="Finite categories, nerves, integer homology, and "
                    "theorem checks at desk scale.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--trunc", type=int, default=4,
                       help="simplicial truncation level (default 4)")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="per-level simplex budget")
        p.add_argument("-o", "--output", default=None)
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("validate", help="validate a category or functor")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="build a derived construction")
    p.add_argument("construction",
                   choices=("T", "Top", "twisted", "comma", "S", "cech",
                            "fatten", "D", "diag"))
    p.add_argument("inputs", nargs="+")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("homology", help="integer homology of a nerve")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("check", help="run a theorem checker")
    p.add_argument("theorem", choices=("a", "morita", "cover"))
    p.add_argument("inputs", nargs="+")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export-dot", help="export a category as DOT")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except docs.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
