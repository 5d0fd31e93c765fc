"""Central elements: the Casimir coset, corrections, and the injectivity
rank harness."""

import random
from fractions import Fraction

import pytest

from racahbi.casimir import (
    CASIMIR_VARS,
    CENTRAL_VARS,
    CasimirSpec,
    CommPoly,
    NotInCentralizerImage,
    casimir_base,
    casimir_element,
    casimir_vars,
    central_value,
    central_vars,
    correction_for,
    express_casimir,
    is_central,
    source_weights,
    zeta_rank_check,
)
from racahbi.morphisms import zeta
from racahbi.presentations import racah


def poly(terms):
    return CommPoly(CASIMIR_VARS, {k: Fraction(v) for k, v in terms.items()})


def random_poly(names, rng, max_degree=2):
    terms = {}
    for _ in range(4):
        exps = [0] * len(names)
        for _ in range(rng.randrange(max_degree + 1)):
            exps[rng.randrange(len(names))] += 1
        terms[tuple(exps)] = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
    return CommPoly(names, terms)


def test_commpoly_arithmetic():
    a, b, g, d = casimir_vars()
    p = a * b - 2 * d + 1
    q = a * b + d
    assert p + q == 2 * a * b - d + 1
    assert p - p == CommPoly(CASIMIR_VARS, {})
    assert (a + b) ** 2 == a * a + 2 * a * b + b * b
    assert (a * b) * g == a * (b * g)
    assert -p == CommPoly.constant(CASIMIR_VARS, 0) - p
    assert p / 2 == p * Fraction(1, 2)
    assert p.total_degree() == 2
    assert CommPoly(CASIMIR_VARS, {}).is_zero
    assert not p.is_zero


def test_commpoly_str():
    a, b, g, d = casimir_vars()
    assert str(2 * a * b - d) == "-δ + 2*α*β"
    assert str(CommPoly(CASIMIR_VARS, {})) == "0"
    assert str(a ** 2) == "α^2"
    one = CommPoly.constant(CASIMIR_VARS, Fraction(1, 3))
    assert str(one) == "1/3"


def test_commpoly_evaluate():
    a, b, g, d = casimir_vars()
    p = racah()
    values = {n: p.name_table()[n] for n in CASIMIR_VARS}
    e = (a * d - 2 * b + 1).evaluate(values, p.alphabet.one(), p.system.mul)
    assert e == p.reduce("α*δ - 2*β + 1")


def test_commpoly_rejects_floats():
    a, b, g, d = casimir_vars()
    with pytest.raises(TypeError):
        a * 0.5


def test_base_is_central():
    p = racah()
    base = casimir_base()
    assert is_central(p, base)
    for g in "ABCD":
        assert p.reduce(base * p.gen(g) - p.gen(g) * base).is_zero


def test_base_matches_third_invariant():
    # the distinguished representative coincides with Ω_C on the nose
    p = racah()
    assert casimir_base() == p.reduce("Ω_C")


def test_invariants_lie_in_coset():
    p = racah()
    base = casimir_base()
    assert p.reduce("Ω_A") - base == p.reduce("-(1 + δ)*β")
    assert p.reduce("Ω_B") - base == p.reduce("(1 + δ)*α")


def test_is_central_examples():
    p = racah()
    assert is_central(p, p.gen("α"))
    assert is_central(p, p.reduce("Ω_A"))
    assert not is_central(p, p.gen("A"))
    assert is_central(p, p.reduce("Ω_B * Ω_C + 3*γ"))


def test_correction_for_invariants():
    assert correction_for(racah().reduce("Ω_A")) == CasimirSpec(
        poly({(0, 1, 0, 0): -1, (0, 1, 0, 1): -1}))
    assert correction_for(racah().reduce("Ω_B")) == CasimirSpec(
        poly({(1, 0, 0, 0): 1, (1, 0, 0, 1): 1}))
    assert correction_for(racah().reduce("Ω_C")) == CasimirSpec(
        poly({}))


def test_correction_for_non_member():
    assert correction_for(racah().gen("D")) is None
    assert correction_for(racah().gen("A")) is None


def test_casimir_element_roundtrip():
    p = racah()
    for name in ("Ω_A", "Ω_B", "Ω_C"):
        om = p.reduce(name)
        spec = correction_for(om)
        assert casimir_element(spec) == om


def test_casimir_element_random_specs():
    # any polynomial correction stays in the class and is recovered
    p = racah()
    rng = random.Random(2026)
    for _ in range(20):
        spec = CasimirSpec(random_poly(CASIMIR_VARS, rng))
        member = casimir_element(spec)
        assert is_central(p, member)
        again = correction_for(member)
        assert again is not None
        # γ = -α - β makes corrections non-unique; compare rebuilt elements
        assert casimir_element(again) == member


def test_casimir_spec_validation():
    with pytest.raises(ValueError):
        CasimirSpec(CommPoly(CENTRAL_VARS, {}))


def test_express_casimir_invariants():
    z = zeta()
    p = racah()
    for name in ("Ω_A", "Ω_B", "Ω_C"):
        om = p.reduce(name)
        P = express_casimir(om)
        assert P.names == CENTRAL_VARS
        assert central_value(P) == z.apply(om)


def test_express_casimir_constant():
    P = express_casimir(racah().alphabet.one())
    assert P == CommPoly.constant(CENTRAL_VARS, 1)
    assert central_value(P) == zeta().target.alphabet.one()


def test_express_casimir_generator_sum():
    # the image of A + B + C is (ι^2 - 2ι - κ - λ - μ)/4 - 9/16
    i, k, l, m = central_vars()
    P = express_casimir(racah().reduce("δ"))
    want = (i * i - 2 * i - k - l - m) / 4 - CommPoly.constant(
        CENTRAL_VARS, Fraction(9, 16))
    assert P == want


def test_express_casimir_rejects_non_members():
    with pytest.raises(NotInCentralizerImage) as info:
        express_casimir(racah().gen("A"))
    assert info.value.monomials
    assert any("X" in m for m in info.value.monomials)
    assert "not a Casimir" in str(info.value)
    with pytest.raises(NotInCentralizerImage):
        express_casimir(racah().gen("D"))


def test_central_value_faithful():
    # distinct polynomials in (ι, κ, λ, μ) give distinct central elements
    rng = random.Random(53)
    for _ in range(10):
        P = random_poly(CENTRAL_VARS, rng, max_degree=3)
        Q = random_poly(CENTRAL_VARS, rng, max_degree=3)
        if P == Q:
            continue
        assert central_value(P) != central_value(Q)
    with pytest.raises(ValueError):
        central_value(random_poly(CASIMIR_VARS, rng))


def test_source_weights():
    assert source_weights() == (8, 8, 12, 14, 18, 18)


def test_rank_check_trivial_window():
    report = zeta_rank_check(0)
    assert report.dimension_source == 1
    assert report.full_rank
    assert report.lead_map_injective
    assert report.all_leads_match


def test_rank_check_low_window():
    report = zeta_rank_check(14)
    # monomials of weight <= 14: 1, A, B, C, D
    assert report.dimension_source == 5
    assert report.dimension_image == 5
    assert report.full_rank
    assert report.lead_map_injective
    assert report.all_leads_match
    by_exps = {c.exponents: c for c in report.checks}
    d_check = by_exps[(0, 0, 0, 1, 0, 0)]
    assert d_check.weight == 14
    assert d_check.lead_exponents == (0, 0, 1, 1, 0, 0)
    assert d_check.expected == Fraction(1, 16)
    assert d_check.computed == Fraction(1, 16)
    assert d_check.match


def test_rank_report_json():
    report = zeta_rank_check(14)
    obj = report.to_json_obj()
    assert obj["dimension_source"] == 5
    assert obj["full_rank"] is True
    assert obj["all_leads_match"] is True
    assert len(obj["monomials"]) == 5
    assert all(entry["match"] for entry in obj["monomials"])
