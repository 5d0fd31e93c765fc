"""Expression parser: grammar, bracket operators, error positions."""

import random
from fractions import Fraction

import pytest

from racahbi.expressions import ExprSyntaxError, parse_element, tokenize
from racahbi.terms import Alphabet, Element, format_element

ALPH = Alphabet(["X", "Y", "Z", "κ", "λ", "μ"])
NAMES = {n: ALPH.gen(n) for n in ALPH.names}


def parse(text):
    return parse_element(text, ALPH, NAMES)


def random_element(rng, max_degree=3, n_terms=5):
    terms = {}
    for _ in range(n_terms):
        length = rng.randrange(max_degree + 1)
        word = tuple(rng.randrange(len(ALPH)) for _ in range(length))
        terms[word] = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
    return Element(ALPH, terms)


def test_atoms():
    assert parse("X") == ALPH.gen("X")
    assert parse("7") == 7 * ALPH.one()
    assert parse("3/4") == ALPH.one().scale("3/4")
    assert parse("0").is_zero


def test_sums_and_products():
    X, Y = ALPH.gen("X"), ALPH.gen("Y")
    assert parse("X + Y - X") == Y
    assert parse("X*Y") == X * Y
    assert parse("2*X - 3*Y") == 2 * X - 3 * Y
    # product binds tighter than sum
    assert parse("X + Y*X") == X + Y * X


def test_juxtaposition():
    X = ALPH.gen("X")
    assert parse("2X") == 2 * X
    assert parse("(2*X - 3)(2*X + 1)") == 4 * X * X - 4 * X - 3 * ALPH.one()
    assert parse("2(X + 1)") == 2 * X + 2 * ALPH.one()


def test_powers():
    X = ALPH.gen("X")
    assert parse("X^3") == X * X * X
    assert parse("X^0") == ALPH.one()
    assert parse("(X + 1)^2") == X * X + 2 * X + ALPH.one()
    # power binds tighter than product
    assert parse("2*X^2") == 2 * X * X


def test_unary_minus():
    X, Y = ALPH.gen("X"), ALPH.gen("Y")
    assert parse("-X") == -X
    assert parse("-X + Y") == Y - X
    assert parse("-(X - Y)") == Y - X
    assert parse("-2*X") == -2 * X


def test_bracket_operators():
    X, Y = ALPH.gen("X"), ALPH.gen("Y")
    assert parse("[X, Y]") == X * Y - Y * X
    assert parse("{X, Y}") == X * Y + Y * X
    assert parse("[X, Y] + [Y, X]").is_zero
    assert parse("1/2*{X, X}") == X * X


def test_rational_literals():
    assert parse("5/8*X") == ALPH.gen("X").scale("5/8")
    tokens = tokenize("13/7")
    assert tokens[0].value == Fraction(13, 7)


def test_division_outside_literal_rejected():
    with pytest.raises(ExprSyntaxError) as info:
        parse("(2X-3)(2X+1)/16")
    assert "3/4" in str(info.value)
    assert info.value.line == 1
    assert info.value.col == 13
    # the same value written with a leading rational parses fine
    e = parse("1/16*(2*X - 3)*(2*X + 1)")
    X = ALPH.gen("X")
    assert 16 * e == 4 * X * X - 4 * X - 3 * ALPH.one()


def test_unknown_name_position():
    with pytest.raises(ExprSyntaxError) as info:
        parse("X + Q*Y")
    assert "Q" in str(info.value)
    assert (info.value.line, info.value.col) == (1, 5)
    with pytest.raises(ExprSyntaxError) as info:
        parse("X +\n  badname")
    assert (info.value.line, info.value.col) == (2, 3)


def test_malformed_input():
    for text in ["X +", "(X", "[X, Y", "{X Y}", "X ^ Y", "X ^ 1/2", "", ")", "X @ Y"]:
        with pytest.raises(ExprSyntaxError):
            parse(text)


def test_trailing_input():
    with pytest.raises(ExprSyntaxError) as info:
        parse("X) + Y")
    assert "trailing" in str(info.value)


def test_unicode_names():
    k = ALPH.gen("κ")
    assert parse("κ") == k
    assert parse("2*κ*μ") == 2 * k * ALPH.gen("μ")


def test_parse_format_roundtrip():
    rng = random.Random(23)
    for _ in range(30):
        e = random_element(rng)
        assert parse(format_element(e)) == e
