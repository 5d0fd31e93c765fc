"""Parser and evaluator for algebra expressions.

Grammar (juxtaposition multiplies, '/' lives only inside rational literals):

    expr   := ('+' | '-')? term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' nat)?
    atom   := rational | name | '(' expr ')' | '[' expr ',' expr ']'
            | '{' expr ',' expr '}'

'[a,b]' is the commutator ab - ba, '{a,b}' the anticommutator ab + ba.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .terms import Alphabet, Element, anticommutator, commutator


class ExprSyntaxError(ValueError):
    """Parse or name-resolution failure, carrying a 1-based line/column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


# -- tokens -----------------------------------------------------------

_PUNCT = set("+-*^()[]{},")


@dataclass(frozen=True)
class Token:
    kind: str  # 'num' | 'name' | punctuation | 'end'
    text: str
    value: object
    line: int
    col: int


def _is_name_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_name_part(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def tokenize(text: str) -> list:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_line, start_col = line, col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num, den = text[i:j], None
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ExprSyntaxError(
                        "'/' is only allowed inside rational literals like 3/4",
                        line, col + (j - i))
                den = text[j + 1:k]
                j = k
            value = Fraction(int(num), int(den)) if den else Fraction(int(num))
            tokens.append(Token("num", text[i:j], value, start_line, start_col))
            col += j - i
            i = j
            continue
        if _is_name_start(ch):
            j = i + 1
            while j < n and _is_name_part(text[j]):
                j += 1
            tokens.append(Token("name", text[i:j], text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, ch, start_line, start_col))
            i += 1
            col += 1
            continue
        if ch == "/":
            raise ExprSyntaxError(
                "'/' is only allowed inside rational literals like 3/4", line, col)
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", None, line, col))
    return tokens


# -- syntax tree ------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class Name:
    name: str
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: object
    right: object


@dataclass(frozen=True)
class Anticommutator:
    left: object
    right: object


@dataclass(frozen=True)
class Group:
    inner: object


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise ExprSyntaxError(f"expected {kind!r}, found {shown!r}", tok.line, tok.col)
        return self.advance()

    def parse_expr(self):
        tok = self.peek()
        negate = False
        if tok.kind in "+-":
            self.advance()
            negate = tok.kind == "-"
        node = self.parse_term()
        if negate:
            node = Sub(Num(Fraction(0), tok.line, tok.col), node)
        while self.peek().kind in "+-":
            op = self.advance()
            rhs = self.parse_term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                node = Mul(node, self.parse_factor())
            elif tok.kind in ("num", "name", "(", "[", "{"):
                node = Mul(node, self.parse_factor())
            else:
                return node

    def parse_factor(self):
        node = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("num")
            if tok.value.denominator != 1 or tok.value < 0:
                raise ExprSyntaxError(
                    f"exponent must be a natural number, found {tok.text!r}",
                    tok.line, tok.col)
            node = Pow(node, int(tok.value))
        return node

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Num(tok.value, tok.line, tok.col)
        if tok.kind == "name":
            self.advance()
            return Name(tok.value, tok.line, tok.col)
        if tok.kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return Group(inner)
        if tok.kind == "[":
            self.advance()
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return Commutator(left, right)
        if tok.kind == "{":
            self.advance()
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("}")
            return Anticommutator(left, right)
        shown = tok.text or "end of input"
        raise ExprSyntaxError(f"expected an expression, found {shown!r}", tok.line, tok.col)


def parse(text: str):
    """Parse a full expression string into a syntax tree."""
    parser = _Parser(tokenize(text))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ExprSyntaxError(f"unexpected trailing input {tok.text!r}", tok.line, tok.col)
    return node


def evaluate(node, alphabet: Alphabet, names) -> Element:
    """Evaluate a syntax tree against a name table {name: Element}."""
    if isinstance(node, Num):
        return alphabet.one().scale(node.value)
    if isinstance(node, Name):
        try:
            return names[node.name]
        except KeyError:
            raise ExprSyntaxError(f"unknown name {node.name!r}", node.line, node.col) from None
    if isinstance(node, Group):
        return evaluate(node.inner, alphabet, names)
    if isinstance(node, Add):
        return evaluate(node.left, alphabet, names) + evaluate(node.right, alphabet, names)
    if isinstance(node, Sub):
        return evaluate(node.left, alphabet, names) - evaluate(node.right, alphabet, names)
    if isinstance(node, Mul):
        return evaluate(node.left, alphabet, names) * evaluate(node.right, alphabet, names)
    if isinstance(node, Pow):
        return evaluate(node.base, alphabet, names) ** node.exponent
    if isinstance(node, Commutator):
        return commutator(evaluate(node.left, alphabet, names),
                          evaluate(node.right, alphabet, names))
    if isinstance(node, Anticommutator):
        return anticommutator(evaluate(node.left, alphabet, names),
                              evaluate(node.right, alphabet, names))
    raise TypeError(f"not a syntax node: {node!r}")


def parse_element(text: str, alphabet: Alphabet, names) -> Element:
    return evaluate(parse(text), alphabet, names)
