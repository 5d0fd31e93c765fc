"""Command line for the rewriting engine.

Subcommands mirror the library: reduce, confluence, map, filtration,
casimir, verify, report.  Algebra arguments take a built-in name (racah,
bi, bi_rebased) or a path to a system-definition file.  Exit codes: 0
success, 1 a verification answered "no", 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .acceptance import format_results, run_all, suite_passed
from .casimir import CENTRAL_VARS, NotInCentralizerImage, express_casimir
from .corpus import CORPUS, corpus_failures
from .expressions import ExprSyntaxError, parse_element
from .filtration import check_filtration_product, is_filtration, leading_form
from .morphisms import sigma, tau, zeta
from .presentations import bannai_ito, by_id, racah
from .rewrite import check_confluence, parse_system
from .terms import format_element, to_json_obj


def _weights(text: str) -> tuple:
    try:
        weights = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weights must be comma-separated integers, got {text!r}")
    if len(weights) != 6:
        raise argparse.ArgumentTypeError(f"need 6 weights, got {len(weights)}")
    return weights


class _FileSystemTarget:
    """Reduce/confluence adapter around a user-supplied system file."""

    def __init__(self, path: Path):
        self.id = str(path)
        self.system = parse_system(path.read_text(encoding="utf-8"))
        self.alphabet = self.system.alphabet

    def parse(self, text):
        names = {n: self.alphabet.gen(n) for n in self.alphabet.names}
        return parse_element(text, self.alphabet, names)

    def reduce(self, text):
        return self.system.normal_form(self.parse(text))


def _algebra(name: str):
    try:
        return by_id(name)
    except ValueError:
        path = Path(name)
        if path.is_file():
            return _FileSystemTarget(path)
        raise


def _print_element(e, as_json: bool) -> None:
    if as_json:
        print(json.dumps(to_json_obj(e)))
    else:
        print(format_element(e))


def _cmd_reduce(args) -> int:
    alg = _algebra(args.algebra)
    _print_element(alg.reduce(args.expr), args.json)
    return 0


def _cmd_confluence(args) -> int:
    alg = _algebra(args.algebra)
    reports = check_confluence(alg.system)
    resolvable = sum(1 for r in reports if r.resolvable)
    rows = []
    for r in reports:
        word = "*".join(alg.alphabet.word_names(r.word))
        if r.resolvable:
            rows.append({"word": word, "resolvable": True,
                         "normal_form": format_element(r.left_result)})
        else:
            rows.append({"word": word, "resolvable": False,
                         "left": format_element(r.left_result),
                         "right": format_element(r.right_result)})
    if args.json:
        print(json.dumps({"system": alg.id, "overlaps": len(reports),
                          "resolvable": resolvable, "reports": rows}))
    else:
        for row in rows:
            if row["resolvable"]:
                print(f"resolvable  {row['word']} -> {row['normal_form']}")
            else:
                print(f"UNRESOLVED  {row['word']}: "
                      f"{row['left']}  !=  {row['right']}")
        print(f"{resolvable}/{len(reports)} overlap ambiguities resolvable")
    return 0 if resolvable == len(reports) else 1


def _cmd_map(args) -> int:
    if args.name == "zeta":
        result = zeta().apply(args.expr)
    else:
        factory = sigma if args.name == "sigma" else tau
        result = factory(args.alg).apply(args.expr)
    _print_element(result, args.json)
    return 0


def _cmd_filtration_check(args) -> int:
    ok = is_filtration(args.weights)
    if args.sample is not None:
        ok_products, witnesses = check_filtration_product(args.weights, args.sample)
        if args.json:
            print(json.dumps({"filtration": ok, "sampled": ok_products,
                              "witnesses": len(witnesses)}))
        else:
            print(f"filtration: {'yes' if ok else 'no'}")
            print(f"sampled products at degree {args.sample}: "
                  f"{'consistent' if ok_products else 'violations found'}")
            for w in witnesses[:3]:
                left = "*".join(bannai_ito().alphabet.word_names(w.left)) or "1"
                right = "*".join(bannai_ito().alphabet.word_names(w.right)) or "1"
                print(f"  witness {left} . {right} -> degree {w.degree} > {w.bound}")
        return 0 if ok and ok_products else 1
    if args.json:
        print(json.dumps({"filtration": ok}))
    else:
        print(f"filtration: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_filtration_lead(args) -> int:
    p = bannai_ito()
    result = leading_form(args.weights, p.reduce(args.expr), args.level)
    _print_element(result, args.json)
    return 0


def _cmd_casimir_express(args) -> int:
    p = racah()
    try:
        poly = express_casimir(p.reduce(args.expr))
    except NotInCentralizerImage as exc:
        print(f"not expressible: {exc}", file=sys.stderr)
        return 1
    if args.json:
        terms = [{"exponents": list(exps), "coeff": str(c)}
                 for exps, c in sorted(poly.terms.items())]
        print(json.dumps({"variables": list(CENTRAL_VARS), "terms": terms}))
    else:
        print(str(poly))
    return 0


def _cmd_verify_all(args) -> int:
    results = run_all()
    failures = corpus_failures()
    ok = suite_passed(results) and not failures
    if args.json:
        print(json.dumps({
            "checks": [{"id": r.ident, "title": r.title, "passed": r.passed,
                        "seconds": round(r.seconds, 3), "detail": r.detail}
                       for r in results],
            "corpus": {"total": len(CORPUS), "failed": failures},
            "passed": ok,
        }))
    else:
        print(format_results(results))
        print(f"corpus: {len(CORPUS) - len(failures)}/{len(CORPUS)} identities pass")
        for ident in failures:
            print(f"  corpus FAIL: {ident}")
    return 0 if ok else 1


def _cmd_report_rank(args) -> int:
    from .report import write_rank_report
    paths = write_rank_report(args.max_weight, args.out)
    if args.json:
        print(json.dumps(paths))
    else:
        for kind, path in paths.items():
            print(f"wrote {kind}: {path}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="racahbi",
        description="Exact rewriting over Q for the Racah and Bannai-Ito "
                    "presentations: normal forms, confluence, maps, "
                    "filtrations and Casimir expression.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="normal form of an expression")
    p.add_argument("algebra", help="racah, bi, bi_rebased, or a system file")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("confluence", help="check all overlap ambiguities")
    p.add_argument("algebra", help="racah, bi, bi_rebased, or a system file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_confluence)

    p = sub.add_parser("map", help="apply a verified map to an expression")
    p.add_argument("name", choices=("zeta", "sigma", "tau"))
    p.add_argument("expr")
    p.add_argument("--alg", default="racah",
                   help="presentation for sigma/tau (default racah)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("filtration", help="weighted filtration tools")
    fsub = p.add_subparsers(dest="action", required=True)
    q = fsub.add_parser("check", help="test the filtration inequalities")
    q.add_argument("weights", type=_weights, help="w_X,w_Y,w_Z,w_κ,w_λ,w_μ")
    q.add_argument("--sample", type=int, default=None,
                   help="also test monomial products up to this degree")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_filtration_check)
    q = fsub.add_parser("lead", help="drop terms below a filtration level")
    q.add_argument("weights", type=_weights)
    q.add_argument("level", type=int)
    q.add_argument("expr")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_filtration_lead)

    p = sub.add_parser("casimir", help="central element tools")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("express",
                        help="express a central element in ι, κ, λ, μ")
    q.add_argument("expr")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_casimir_express)

    p = sub.add_parser("verify", help="run the verification suite")
    vsub = p.add_subparsers(dest="action", required=True)
    q = vsub.add_parser("all", help="all twelve checks plus the identity corpus")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_verify_all)

    p = sub.add_parser("report", help="write data files and figures")
    rsub = p.add_subparsers(dest="action", required=True)
    q = rsub.add_parser("rank", help="injectivity rank report with figures")
    q.add_argument("--max-weight", type=int, default=40)
    q.add_argument("--out", default=".")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_report_rank)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExprSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NotInCentralizerImage as exc:
        print(f"not expressible: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
