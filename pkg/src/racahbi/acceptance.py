"""Verification suite: twelve numbered end-to-end checks.

Each check rebuilds what it verifies from scratch where that is cheap,
reports a pass/fail flag with a one-line detail, and records its own
wall-clock time.  The command line runs the suite via `verify all`; the
test suite asserts every check passes inside its stated time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .casimir import (CASIMIR_VARS, CasimirSpec, CommPoly, casimir_element,
                      central_value, express_casimir, is_central,
                      zeta_rank_check)
from .corpus import corpus_failures, entries_with_prefix, run_corpus
from .filtration import (STANDARD_WEIGHTS, check_filtration_product,
                         is_filtration, weighted_degree, weighted_monomials,
                         word_degree)
from .morphisms import check_d6_relations, check_equivariance, zeta
from .presentations import bannai_ito, bi_rebased, racah
from .rewrite import check_confluence
from .terms import commutator


@dataclass(frozen=True)
class CheckResult:
    ident: str
    title: str
    passed: bool
    seconds: float
    detail: str


def _corpus_part(prefix: str):
    entries = entries_with_prefix(prefix)
    failed = corpus_failures(entries)
    return len(entries), failed


def check_01_racah_confluence() -> CheckResult:
    p = racah.__wrapped__()  # fresh build, no caches
    reports = check_confluence(p.system)
    resolvable = [r for r in reports if r.resolvable]
    n, failed = _corpus_part("racah-completion-")
    passed = len(resolvable) == len(reports) == 20 and not failed
    detail = (f"{len(resolvable)}/{len(reports)} overlaps resolvable; "
              f"{n - len(failed)}/{n} completions match")
    return CheckResult("01", "racah confluence and completions", passed, 0.0, detail)


def _sorted_monomials(alphabet, max_len: int) -> set:
    return {w for w in map(tuple, _nondecreasing_words(len(alphabet), max_len))}


def _nondecreasing_words(size: int, max_len: int):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (r,) for w in frontier
                    for r in range(w[-1] if w else 0, size)]
        out.extend(frontier)
    return out


def check_02_bi_confluence() -> CheckResult:
    counts = []
    passed = True
    for build in (racah.__wrapped__, bannai_ito.__wrapped__, bi_rebased.__wrapped__):
        p = build()
        reports = check_confluence(p.system)
        if not all(r.resolvable for r in reports):
            passed = False
        scan = set(p.system.irreducible_words(6))
        expected = _sorted_monomials(p.alphabet, 6)
        if scan != expected:
            passed = False
        counts.append(f"{p.id}:{len(scan)}")
    detail = "irreducible words up to length 6 = sorted monomials (" + ", ".join(counts) + ")"
    return CheckResult("02", "remaining confluence and basis scans", passed, 0.0, detail)


def check_03_zeta_well_defined() -> CheckResult:
    fresh = zeta.__wrapped__()
    ok, failures = fresh.verify_on_relations()
    rules = len(fresh.source.system.rules)
    n, failed = _corpus_part("zeta-parameter-sum")
    n2, failed2 = _corpus_part("zeta-delta-rebased")
    passed = ok and rules == 15 and not failed and not failed2
    detail = (f"all {rules} relations preserved; parameter sum and "
              f"rebased delta image match")
    return CheckResult("03", "embedding well-defined", passed, 0.0, detail)


def check_04_d_image() -> CheckResult:
    prefixes = ("zeta-d-combination", "zeta-d-normal-form",
                "lead-form-zeta-d", "lead-form-zeta-d-squared")
    failed = []
    total = 0
    for prefix in prefixes:
        n, bad = _corpus_part(prefix)
        total += n
        failed.extend(bad)
    passed = not failed and total >= 4
    detail = "D image normal form and leading forms at levels 14, 28 match"
    return CheckResult("04", "D image and leading forms", passed, 0.0, detail)


def check_05_bracket_lemma() -> CheckResult:
    n1, f1 = _corpus_part("bi-bracket-")
    n2, f2 = _corpus_part("bi-l-rep-")
    passed = n1 == 6 and n2 == 5 and not f1 and not f2
    detail = f"{n1} bracket identities; {n2 + 1}-way agreement on L"
    return CheckResult("05", "bracket identities and L", passed, 0.0, detail)


def check_06_filtration_criterion() -> CheckResult:
    p = bannai_ito()
    rules = p.system.rules
    sweep_ok = True
    for w in iter_product(range(5), repeat=6):
        rule_ok = all(
            word_degree(w, r.lhs) >= max(
                (word_degree(w, t) for t in r.rhs.words()), default=0)
            for r in rules)
        if is_filtration(w) != rule_ok:
            sweep_ok = False
            break
    rng = random.Random(2026)
    cross_ok = True
    for _ in range(50):
        w = tuple(rng.randint(0, 4) for _ in range(6))
        if is_filtration(w) != check_filtration_product(w, 8)[0]:
            cross_ok = False
            break
    neg_ok, witnesses = check_filtration_product((0, 0, 1, 0, 0, 0), 3)
    passed = sweep_ok and cross_ok and not neg_ok and bool(witnesses)
    detail = (f"5^6 sweep agrees with rule degrees; 50 random vectors agree "
              f"at degree 8; witness found for (0,0,1,0,0,0)")
    return CheckResult("06", "filtration criterion", passed, 0.0, detail)


def check_07_leading_coefficients() -> CheckResult:
    report = zeta_rank_check(40)
    passed = report.all_leads_match and len(report.checks) == report.dimension_source
    detail = (f"{len(report.checks)} monomials of weight <= 40; "
              f"all leading coefficients match the sign and power rule")
    return CheckResult("07", "leading coefficients", passed, 0.0, detail)


def check_08_injectivity_rank() -> CheckResult:
    report = zeta_rank_check(40)
    passed = (report.full_rank and report.lead_map_injective
              and report.dimension_source == report.dimension_image)
    detail = (f"rank {report.dimension_image} on {report.dimension_source} "
              f"images; lead-exponent map injective")
    return CheckResult("08", "injectivity at weight 40", passed, 0.0, detail)


def check_09_casimir_centrality() -> CheckResult:
    p = racah()
    omegas = {name: p.reduce(p.defined[name]) for name in ("Ω_A", "Ω_B", "Ω_C")}
    central = all(is_central(p, e) for e in omegas.values())
    values = list(omegas.values())
    distinct = len({hash(e) for e in values}) == 3 and (
        values[0] != values[1] != values[2] != values[0])
    n1, f1 = _corpus_part("sigma-racah-ω")
    n2, f2 = _corpus_part("tau-racah-ω")
    passed = central and distinct and n1 == n2 == 3 and not f1 and not f2
    detail = "12 commutators vanish; three distinct Casimirs; permutation tables match"
    return CheckResult("09", "Casimir centrality and symmetry", passed, 0.0, detail)


def check_10_casimir_expression() -> CheckResult:
    n, failed = _corpus_part("casimir-slot-")
    p = racah()
    z = zeta()
    roundtrip = all(
        central_value(express_casimir(p.reduce(p.defined[name])))
        == z.apply(p.reduce(p.defined[name]))
        for name in ("Ω_A", "Ω_B", "Ω_C"))
    rng = random.Random(2026)
    randomized = True
    for _ in range(20):
        terms = {}
        for _ in range(4):
            exps = [0, 0, 0, 0]
            for _ in range(rng.randint(0, 2)):
                exps[rng.randrange(4)] += 1
            terms[tuple(exps)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        omega = casimir_element(CasimirSpec(CommPoly(CASIMIR_VARS, terms)))
        if central_value(express_casimir(omega)) != z.apply(omega):
            randomized = False
            break
    passed = n == 3 and not failed and roundtrip and randomized
    detail = ("three closed forms match; round trips hold; "
              "20 random degree-2 corrections expressed")
    return CheckResult("10", "Casimir expression", passed, 0.0, detail)


def check_11_d6_actions() -> CheckResult:
    ok_r, fail_r = check_d6_relations("racah")
    ok_b, fail_b = check_d6_relations("bi")
    equi = all(check_equivariance(zeta(), g)[0] for g in ("sigma", "tau"))
    passed = ok_r and ok_b and equi
    detail = "relation words collapse to identity on both algebras; squares commute"
    return CheckResult("11", "dihedral actions and equivariance", passed, 0.0, detail)


def check_12_power_congruences() -> CheckResult:
    p = bannai_ito()
    z = zeta()
    iota_ok = all(
        weighted_degree((1, 1, 2, 0, 0, 0),
                        p.reduce(f"(X + Y + Z)^{n} - Z^{n}")) <= 2 * n - 1
        for n in range(6))
    families = ("power-law-a-", "power-law-b-", "power-law-c-",
                "power-law-alpha-", "power-law-beta-", "power-law-d-")
    failed = []
    total = 0
    for prefix in families:
        n, bad = _corpus_part(prefix)
        total += n
        failed.extend(bad)
    zero_ok = all(z.apply(f"{g}^0") == bannai_ito().alphabet.one()
                  for g in ("A", "D"))
    passed = iota_ok and total == 24 and not failed and zero_ok
    detail = (f"iota powers for n <= 5; {total} image power laws for n <= 4")
    return CheckResult("12", "power congruences", passed, 0.0, detail)


CHECKS = (
    check_01_racah_confluence,
    check_02_bi_confluence,
    check_03_zeta_well_defined,
    check_04_d_image,
    check_05_bracket_lemma,
    check_06_filtration_criterion,
    check_07_leading_coefficients,
    check_08_injectivity_rank,
    check_09_casimir_centrality,
    check_10_casimir_expression,
    check_11_d6_actions,
    check_12_power_congruences,
)


def run_check(fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        result = fn()
        seconds = time.perf_counter() - t0
        return CheckResult(result.ident, result.title, result.passed,
                           seconds, result.detail)
    except Exception as exc:  # a crash is a failure, not a suite abort
        seconds = time.perf_counter() - t0
        ident = fn.__name__.split("_")[1]
        return CheckResult(ident, fn.__name__, False, seconds,
                           f"raised {type(exc).__name__}: {exc}")


def run_all(idents=None) -> list:
    wanted = None if idents is None else {str(i).zfill(2) for i in idents}
    results = []
    for fn in CHECKS:
        ident = fn.__name__.split("_")[1]
        if wanted is not None and ident not in wanted:
            continue
        results.append(run_check(fn))
    return results


def format_results(results) -> str:
    lines = []
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        lines.append(f"[{flag}] {r.ident} {r.title}  ({r.seconds:.2f}s)  {r.detail}")
    passed = sum(1 for r in results if r.passed)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)


def suite_passed(results) -> bool:
    return all(r.passed for r in results)
