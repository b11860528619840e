"""Command-line front end.

Subcommands parse algebra / matrix / group files (or catalog: and builtin:
URIs), run the exact classifiers, and print verdicts with their evidence
chain.  `--json` switches to a machine-readable report carrying the same
content.  Exit status: 0 when a verdict was produced (Inconclusive included),
1 on validation errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as catalog_mod
from .algfile import parse_algebra
from .errors import ValidationError
from .finite import (
    builtin_finite,
    builtin_names,
    check_lemma_endo,
    check_lemma_inv,
    parse_automorphism,
    parse_group,
    subgroup_closure,
    twisted_classes,
)
from .flags import nilradical
from .lie import LieAlgebra
from .matrix import parse_matrix
from .morphisms import is_automorphism
from .scalars import FIELD_Q, FIELD_QI
from .sl2 import off_diagonal_sum, sl2_twisted_product, verify_sl2_intersection
from .verdicts import (
    ReidemeisterVerdict,
    VerdictKind,
    VerdictReason,
    classify_solvable,
    rinfty_oddsolv,
    torus_classify,
)

_CITATIONS = {
    VerdictReason.EIGENVALUE_ONE_FOUND: ["solvable-dichotomy"],
    VerdictReason.NO_EIGENVALUE_ONE: ["solvable-dichotomy"],
    VerdictReason.DET_NONZERO: ["torus-criterion"],
    VerdictReason.DET_ZERO: ["torus-criterion"],
    VerdictReason.ODD_CODIM_SPLIT: ["odd-codimension-criterion", "solvable-dichotomy"],
    VerdictReason.EVEN_CODIM: ["odd-codimension-criterion"],
    VerdictReason.NOT_SPLIT: ["odd-codimension-criterion"],
    VerdictReason.NOT_SOLVABLE: [],
}


def verdict_payload(verdict: ReidemeisterVerdict) -> dict:
    return {
        "verdict": verdict.kind.value,
        "reason": verdict.reason.value,
        "char_poly": str(verdict.char_poly) if verdict.char_poly is not None else None,
        "fix_dim": verdict.fix_dim,
        "nilradical_dim": verdict.nilradical_dim,
        "codim": verdict.codim,
        "invariant_factors": list(verdict.invariant_factors)
        if verdict.invariant_factors is not None else None,
        "detail": verdict.detail,
        "citations": _CITATIONS[verdict.reason],
    }


def _emit(payload: dict, human_lines: list[str], as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _load_algebra(spec: str, n: int | None):
    if spec.startswith("catalog:"):
        entry = catalog_mod.build(spec[len("catalog:"):], n)
        return entry.display_name, entry.algebra
    with open(spec, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def _read_matrix_arg(value: str, field: str):
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            value = fh.read()
    return parse_matrix(value, field)


def _structure_summary(name: str, g: LieAlgebra) -> dict:
    derived = [s.dim for s in g.derived_series()]
    lower = [s.dim for s in g.lower_central_series()]
    info = {
        "name": name,
        "dim": g.dim,
        "field": g.field,
        "solvable": g.is_solvable(),
        "nilpotent": g.is_nilpotent(),
        "center_dim": g.center().dim,
        "derived_series_dims": derived,
        "lower_central_series_dims": lower,
    }
    if info["solvable"]:
        info["nilradical_dim"] = nilradical(g).dim
    return info


def _cmd_check(args) -> int:
    name, g = _load_algebra(args.path, args.n)
    info = _structure_summary(name, g)
    lines = [
        f"algebra {info['name']}: dim {info['dim']} over {info['field']}",
        f"solvable: {info['solvable']}; nilpotent: {info['nilpotent']}",
        f"center dim {info['center_dim']}; derived series dims {info['derived_series_dims']}; "
        f"lower central dims {info['lower_central_series_dims']}",
    ]
    if "nilradical_dim" in info:
        lines.append(f"nilradical dim {info['nilradical_dim']}")
    _emit(info, lines, args.json)
    return 0


def _cmd_classify(args) -> int:
    name, g = _load_algebra(args.path, args.n)
    field = args.field or g.field
    matrix = _read_matrix_arg(args.aut, field)
    aut = is_automorphism(g, matrix)
    verdict = classify_solvable(g, aut)
    payload = verdict_payload(verdict)
    payload["algebra"] = name
    if verdict.kind is VerdictKind.INFINITE:
        head = f"R = ∞ (eigenvalue 1 of dφ; fix-subalgebra dim {verdict.fix_dim})"
    else:
        head = "R = 1 (no eigenvalue 1 of dφ; fix-subalgebra dim 0)"
    lines = [
        head,
        f"char poly: {verdict.char_poly}",
        f"criteria: {', '.join(payload['citations'])}",
    ]
    _emit(payload, lines, args.json)
    return 0


def _cmd_rinfty(args) -> int:
    name, g = _load_algebra(args.path, args.n)
    verdict = rinfty_oddsolv(g)
    payload = verdict_payload(verdict)
    payload["algebra"] = name
    if verdict.kind is VerdictKind.INFINITE:
        head = (f"topological R∞ certified: split solvable, "
                f"dim(G/N) = {verdict.codim} odd")
    else:
        head = f"inconclusive: {verdict.detail}"
    lines = [head]
    if verdict.nilradical_dim is not None:
        lines.append(f"nilradical dim {verdict.nilradical_dim}; codim {verdict.codim}")
    lines.append(f"criteria: {', '.join(payload['citations'])}")
    _emit(payload, lines, args.json)
    return 0


def _cmd_torus(args) -> int:
    matrix = _read_matrix_arg(args.matrix, "Z")
    verdict, fix = torus_classify(matrix)
    payload = verdict_payload(verdict)
    payload["fix_order"] = fix.order
    payload["torus_rank"] = fix.torus_rank
    payload["finite_part"] = list(fix.finite_part)
    factors = list(verdict.invariant_factors)
    if verdict.kind is VerdictKind.ONE:
        if fix.order == 1:
            head = "R = 1; Fix trivial (|det(A-I)| = 1)"
        else:
            head = (f"R = 1; Fix finite of order {fix.order} "
                    f"(|det(A-I)| = {fix.order}; invariant factors {factors})")
    else:
        head = (f"R = ∞; Fix infinite (torus rank {fix.torus_rank}; "
                f"invariant factors {factors})")
    lines = [head, f"criteria: {', '.join(payload['citations'])}"]
    _emit(payload, lines, args.json)
    return 0


def _cmd_catalog_list(args) -> int:
    rows = []
    for name in catalog_mod.catalog_names():
        rows.append(name)
    if args.json:
        print(json.dumps({"entries": rows}, indent=2))
    else:
        print("catalog entries:")
        for name in rows:
            print(f"  {name}")
    return 0


def _cmd_catalog_analyze(args) -> int:
    entry = catalog_mod.build(args.name, args.n)
    g = entry.algebra
    info = _structure_summary(entry.display_name, g)
    verdict = rinfty_oddsolv(g)
    payload = {
        "entry": entry.display_name,
        "structure": info,
        "oddsolv": verdict_payload(verdict),
        "known_verdict": entry.known_verdict,
        "samples": [],
    }
    lines = [
        f"catalog entry {entry.display_name}: dim {g.dim} over {g.field}",
        f"solvable {info['solvable']}, nilpotent {info['nilpotent']}, "
        f"center dim {info['center_dim']}"
        + (f", nilradical dim {info['nilradical_dim']}" if "nilradical_dim" in info else ""),
        f"odd-codimension check: {verdict.kind.value} ({verdict.reason.value})",
        f"known verdict: {entry.known_verdict}",
    ]
    for mat, expected in entry.sample_automorphisms:
        aut = is_automorphism(g, mat)
        got = classify_solvable(g, aut)
        payload["samples"].append({
            "matrix": str(mat),
            "expected": expected.value,
            "classified": got.kind.value,
        })
        lines.append(
            f"sample automorphism [{mat}] -> {got.kind.value} (expected {expected.value})"
        )
    _emit(payload, lines, args.json)
    return 0


def _cmd_finite(args) -> int:
    if args.group.startswith("builtin:"):
        group = builtin_finite(args.group[len("builtin:"):])
    else:
        with open(args.group, encoding="utf-8") as fh:
            group = parse_group(fh.read())
    if args.aut == "identity":
        from .finite import identity_automorphism
        phi = identity_automorphism(group)
    elif args.aut.startswith("@"):
        with open(args.aut[1:], encoding="utf-8") as fh:
            phi = parse_automorphism(fh.read(), group)
    else:
        phi = parse_automorphism(args.aut, group)
    decomposition = twisted_classes(group, phi)
    payload = {
        "order": group.order,
        "reidemeister_number": decomposition.count,
        "fix_count": decomposition.fix_count,
        "class_representatives": [r + 1 for r in decomposition.representatives],
    }
    lines = [
        f"group of order {group.order}: R = {decomposition.count}, "
        f"|Fix| = {decomposition.fix_count}",
        "class representatives (1-based): "
        + " ".join(str(r + 1) for r in decomposition.representatives),
    ]
    if args.subgroup:
        seed = [int(v) - 1 for v in args.subgroup.split()]
        subgroup = subgroup_closure(group, seed)
        endo_ok = check_lemma_endo(group, phi, subgroup)
        report = check_lemma_inv(group, phi, subgroup)
        payload["subgroup"] = {
            "elements": [x + 1 for x in subgroup],
            "quotient_bound_holds": endo_ok,
            "r_restricted": report.r_restricted,
            "r_quotient": report.r_quotient,
            "central": report.central,
            "item2": report.item2,
            "item3": report.item3,
            "item5": report.item5,
            "note": report.note,
        }
        lines.append(
            f"subgroup of order {len(subgroup)}: R(restriction) = {report.r_restricted}, "
            f"R(quotient) = {report.r_quotient}"
        )
        lines.append(f"quotient bound R >= R(quotient): {endo_ok}")
        lines.append(
            f"restriction/quotient implications: fix-bound {report.item2}, "
            f"one-quotient bound {report.item3}, central product bound {report.item5}"
        )
        if report.note:
            lines.append(report.note)
    _emit(payload, lines, args.json)
    return 0


def _cmd_sl2_verify(args) -> int:
    verified = verify_sl2_intersection()
    product = sl2_twisted_product()
    payload = {
        "verified": verified,
        "off_diagonal_sum": str(off_diagonal_sum()),
        "entry_1_2": str(product.entry(1, 2)),
        "entry_2_1": str(product.entry(2, 1)),
    }
    lines = []
    if verified:
        lines.append("identity verified: entry(1,2)+entry(2,1) = r")
    else:
        lines.append("identity FAILED")
    lines.append(f"entry(1,2) = {payload['entry_1_2']}")
    lines.append(f"entry(2,1) = {payload['entry_2_1']}")
    _emit(payload, lines, args.json)
    return 0 if verified else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reidemeister",
        description="Exact Reidemeister-number decision procedures "
                    "(solvable dichotomy, torus criterion, odd-codimension test, "
                    "finite brute force).",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--field", choices=[FIELD_Q, FIELD_QI], default=None,
                        help="scalar field for parsing inline matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate an algebra file and print its structure")
    p.add_argument("path", help="algebra file path or catalog:NAME")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("classify", help="solvable {1, infinity} classification")
    p.add_argument("path", help="algebra file path or catalog:NAME")
    p.add_argument("--aut", required=True, help="automorphism matrix (inline or @file)")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("rinfty", help="odd-codimension R-infinity certification")
    p.add_argument("path", help="algebra file path or catalog:NAME")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_rinfty)

    p = sub.add_parser("torus", help="torus automorphism classification")
    p.add_argument("--matrix", required=True,
                   help="unimodular integer matrix (inline or @file)")
    p.set_defaults(fn=_cmd_torus)

    p = sub.add_parser("catalog-list", help="list builtin algebra families")
    p.set_defaults(fn=_cmd_catalog_list)

    p = sub.add_parser("catalog-analyze", help="full structural report for an entry")
    p.add_argument("name")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_catalog_analyze)

    p = sub.add_parser("finite", help="finite-group twisted conjugacy oracle; "
                                      f"builtin groups: {', '.join(builtin_names())}")
    p.add_argument("group", help="group file path or builtin:NAME")
    p.add_argument("aut", help="automorphism images (inline, @file, or 'identity')")
    p.add_argument("--subgroup", default=None,
                   help="1-based generators of a subgroup for the lemma checks")
    p.set_defaults(fn=_cmd_finite)

    p = sub.add_parser("sl2-verify", help="symbolic twisted-product verification")
    p.set_defaults(fn=_cmd_sl2_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
