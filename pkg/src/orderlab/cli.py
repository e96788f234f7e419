"""Command-line front end.

Subcommands:
  analyze  one relator to a verdict (text or JSON)
  batch    a JSON-lines corpus of relators, one result line each
  poly     root counts and predicates for an integer polynomial
  snf      band matrix, Smith diagonal, minors gcd, prime witnesses

Exit codes: 0 decided (or all batch expectations matched), 2 inconclusive,
3 unsupported, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Optional

from . import __version__
from .decide import (
    BI_ORDERABLE,
    INCONCLUSIVE,
    NOT_BI_ORDERABLE,
    UNSUPPORTED,
    AnalyzeOptions,
    analyze,
)
from .errors import OrderlabError
from .matrices import minors_gcd, prime_witnesses, smith_normal_form, weight_matrix
from .polynomials import (
    all_roots_real_positive,
    cauchy_bound,
    count_real_roots_in,
    has_positive_real_root,
    parse_polynomial,
    squarefree_part,
)
from .words import parse_word

_EXIT_BY_OUTCOME = {
    BI_ORDERABLE: 0,
    NOT_BI_ORDERABLE: 0,
    INCONCLUSIVE: 2,
    UNSUPPORTED: 3,
}


def bundled_corpus_path() -> str:
    return str(resources.files("orderlab").joinpath("data/paper_s2.jsonl"))


def _analyze_options(args) -> AnalyzeOptions:
    return AnalyzeOptions(
        jmax=args.jmax,
        knot=getattr(args, "knot", False),
        gt_search=args.gt_search,
        gt_max_factors=args.gt_max_factors,
        gt_max_conj=args.gt_max_conj,
    )


def _verdict_text(verdict) -> str:
    lines = [f"outcome: {verdict.outcome}"]
    if verdict.polynomial is not None:
        lines.append(f"polynomial: {verdict.polynomial.render()}")
    if verdict.classification is not None:
        flags = [k for k, v in verdict.classification.to_dict().items() if v]
        lines.append(f"classification: {', '.join(flags) if flags else '(none)'}")
    for j in verdict.justifications:
        cite = f" [{j.citation}]" if j.citation else ""
        lines.append(f"  - {j.rule}{cite}")
        for key, value in j.evidence.items():
            lines.append(f"      {key}: {value}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    if args.relator is None and args.file is None:
        print("error: provide a relator or --file", file=sys.stderr)
        return 1
    text = args.relator
    if text is None:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read().strip()
    try:
        word = parse_word(text)
        verdict = analyze(word, _analyze_options(args))
    except OrderlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(verdict.to_json_dict()))
    else:
        print(_verdict_text(verdict))
    return _EXIT_BY_OUTCOME[verdict.outcome]


def cmd_batch(args) -> int:
    path = args.corpus or args.corpus_flag or bundled_corpus_path()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    opts_base = _analyze_options(args)
    results = []
    mismatches = 0
    errors = 0
    counts: dict[str, int] = {}
    for line in lines:
        try:
            entry = json.loads(line)
            name = entry.get("name", "?")
            options = AnalyzeOptions(
                jmax=opts_base.jmax,
                knot=bool(entry.get("knot", False)),
                gt_search=opts_base.gt_search,
                gt_max_factors=opts_base.gt_max_factors,
                gt_max_conj=opts_base.gt_max_conj,
            )
            verdict = analyze(parse_word(entry["relator"]), options)
            record = {"name": name, **verdict.to_json_dict()}
            expected = entry.get("expected")
            if expected is not None:
                record["expected"] = expected
                record["match"] = expected == verdict.outcome
                if not record["match"]:
                    mismatches += 1
            counts[verdict.outcome] = counts.get(verdict.outcome, 0) + 1
        except (OrderlabError, KeyError, json.JSONDecodeError) as exc:
            record = {"name": entry.get("name", "?") if isinstance(entry, dict) else "?",
                      "error": f"{type(exc).__name__}: {exc}"}
            errors += 1
        results.append(record)
    for record in results:
        print(json.dumps(record))
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    print(
        f"batch: {len(results)} entries ({summary}); "
        f"{mismatches} expectation mismatches, {errors} errors",
        file=sys.stderr,
    )
    return 0 if mismatches == 0 else 1


def cmd_poly(args) -> int:
    try:
        p = parse_polynomial(args.polynomial)
        if args.positive_roots:
            sf = squarefree_part(p)
            print(count_real_roots_in(sf, 0, cauchy_bound(sf)))
        elif args.has_positive_root:
            print(json.dumps(has_positive_real_root(p)))
        elif args.all_real_positive:
            print(json.dumps(all_roots_real_positive(p)))
        else:
            sf = squarefree_part(p)
            bound = cauchy_bound(p)
            out = {
                "polynomial": p.render(),
                "degree": p.degree,
                "squarefree_part": sf.render(),
                "cauchy_bound": str(bound),
                "distinct_real_roots": count_real_roots_in(p, None, None),
                "distinct_positive_real_roots": count_real_roots_in(sf, 0, cauchy_bound(sf)),
                "has_positive_real_root": has_positive_real_root(p),
                "all_roots_real_positive": all_roots_real_positive(p),
            }
            print(json.dumps(out))
        return 0
    except (OrderlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def cmd_snf(args) -> int:
    try:
        weights = tuple(int(part) for part in args.weights.split(","))
        matrix = weight_matrix(weights, args.j)
        _d, diag = smith_normal_form(matrix)
        g = minors_gcd(matrix, args.j + 1)
        out = {
            "weights": list(weights),
            "j": args.j,
            "matrix": [list(row) for row in matrix.entries],
            "snf_diagonal": list(diag),
            "minors_gcd": g,
        }
        m = abs(weights[-1])
        pw = prime_witnesses(weights[:-1], m)
        out["prime_witnesses"] = {
            "m": m,
            "ok": pw.ok,
            "witness": {str(p): r for p, r in pw.witness.items()},
            "missing_primes": list(pw.missing),
        }
        print(json.dumps(out))
        return 0
    except (OrderlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _add_analyze_flags(sub):
    sub.add_argument("--jmax", type=int, default=16,
                     help="direct Smith-form verification depth (default 16)")
    sub.add_argument("--gt-search", action="store_true",
                     help="run the bounded certificate search on inconclusive relators")
    sub.add_argument("--gt-max-factors", type=int, default=3)
    sub.add_argument("--gt-max-conj", type=int, default=2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orderlab",
        description="Bi-orderability analysis of two-generator one-relator groups",
    )
    parser.add_argument("--version", action="version", version=f"orderlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze a single relator")
    p_an.add_argument("relator", nargs="?", help="relator in the word grammar")
    p_an.add_argument("--file", help="read the relator from a file")
    p_an.add_argument("--knot", action="store_true",
                      help="cite the knot-group corollary forms")
    p_an.add_argument("--format", choices=("text", "json"), default="text")
    _add_analyze_flags(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_ba = sub.add_parser("batch", help="analyze a JSON-lines corpus")
    p_ba.add_argument("corpus", nargs="?", help="corpus path (default: bundled)")
    p_ba.add_argument("--corpus", dest="corpus_flag", help="corpus path")
    _add_analyze_flags(p_ba)
    p_ba.set_defaults(func=cmd_batch)

    p_po = sub.add_parser("poly", help="polynomial root certification")
    p_po.add_argument("polynomial", help="e.g. \"2*X^2-3*X+2\"")
    p_po.add_argument("--positive-roots", action="store_true",
                      help="print the number of distinct positive real roots")
    p_po.add_argument("--has-positive-root", action="store_true")
    p_po.add_argument("--all-real-positive", action="store_true")
    p_po.set_defaults(func=cmd_poly)

    p_sn = sub.add_parser("snf", help="band-matrix Smith form data")
    p_sn.add_argument("--weights", required=True, help="comma-separated, e.g. -2,3,-2")
    p_sn.add_argument("--j", type=int, default=0, help="band index (default 0)")
    p_sn.set_defaults(func=cmd_snf)
    return parser


def _join_weight_flag(argv: list[str]) -> list[str]:
    # let "--weights -2,3,-2" through argparse despite the leading dash
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--weights" and i + 1 < len(argv):
            out.append(f"--weights={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_join_weight_flag(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
