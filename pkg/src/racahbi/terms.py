"""Words and exact rational linear combinations in a free associative algebra.

An Alphabet fixes an ordered list of generator names.  Words are tuples of
generator ranks, elements are finite maps word -> Fraction with no zero
coefficients ever stored.  Everything is exact; floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Scalar = Fraction
Word = tuple  # tuple[int, ...], ranks into an Alphabet


class AlphabetMismatch(ValueError):
    """Two elements over different alphabets were combined."""


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact rational."""
    if isinstance(value, float):
        raise TypeError(f"floating point coefficient {value!r} rejected; use Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class GenSymbol:
    name: str
    rank: int

    def __str__(self):
        return self.name


class Alphabet:
    """Ordered generator symbols of a free algebra; rank is list position."""

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.names = names
        self.symbols = tuple(GenSymbol(n, i) for i, n in enumerate(names))
        self._rank = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._rank

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({', '.join(self.names)})"

    def rank(self, name: str) -> int:
        try:
            return self._rank[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r} for {self!r}") from None

    def word(self, *names: str) -> Word:
        return tuple(self._rank[n] if isinstance(n, str) else n for n in names)

    def word_names(self, word: Word) -> tuple:
        return tuple(self.names[r] for r in word)

    def gen(self, name: str) -> "Element":
        return Element(self, {(self.rank(name),): Fraction(1)})

    def one(self) -> "Element":
        return Element(self, {(): Fraction(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def element(self, terms) -> "Element":
        """Build an element from {word-of-names-or-ranks: coefficient}."""
        acc = {}
        for word, coeff in terms.items():
            word = self.word(*word)
            acc[word] = acc.get(word, Fraction(0)) + as_scalar(coeff)
        return Element(self, acc)


def grlex_key(word: Word):
    """Graded-lexicographic sort key: length first, then rank-lex."""
    return (len(word), word)


class Element:
    """A finite rational combination of words over one alphabet.

    Treated as immutable after construction: no method mutates terms,
    and arithmetic always allocates fresh dictionaries.
    """

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: dict):
        clean = {}
        for word, coeff in terms.items():
            coeff = as_scalar(coeff)
            if coeff:
                clean[word] = coeff
        self.alphabet = alphabet
        self._terms = clean

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word) -> Fraction:
        if isinstance(word, Element):
            word = word.single_word()
        return self._terms.get(tuple(word), Fraction(0))

    def degree(self) -> int:
        """Maximal word length; -1 for the zero element."""
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    def single_word(self) -> Word:
        """The unique word of a monic one-term element; error otherwise."""
        if len(self._terms) != 1:
            raise ValueError(f"not a single word: {self}")
        (word, coeff), = self._terms.items()
        if coeff != 1:
            raise ValueError(f"not monic: {self}")
        return word

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Element"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(
                f"cannot combine elements over {self.alphabet!r} and {other.alphabet!r}")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self._terms.items())))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            acc[word] = acc.get(word, Fraction(0)) + coeff
        return Element(self.alphabet, acc)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            acc[word] = acc.get(word, Fraction(0)) - coeff
        return Element(self.alphabet, acc)

    def __neg__(self):
        return Element(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            acc = {}
            for u, cu in self._terms.items():
                for v, cv in other._terms.items():
                    w = u + v
                    acc[w] = acc.get(w, Fraction(0)) + cu * cv
            return Element(self.alphabet, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, coeff) -> "Element":
        coeff = as_scalar(coeff)
        return Element(self.alphabet, {w: coeff * c for w, c in self._terms.items()})

    def __truediv__(self, coeff):
        return self.scale(Fraction(1) / as_scalar(coeff))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a natural number, got {n!r}")
        out = self.alphabet.one()
        for _ in range(n):
            out = out * self
        return out

    # -- rendering ----------------------------------------------------

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<Element {self}>"


def add(a: Element, b: Element) -> Element:
    return a + b


def mul(a: Element, b: Element) -> Element:
    return a * b


def scale(coeff, a: Element) -> Element:
    return a.scale(coeff)


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def anticommutator(a: Element, b: Element) -> Element:
    return a * b + b * a


def _format_word(alphabet: Alphabet, word: Word) -> str:
    # runs of one generator render as powers: X*X*Y -> X^2*Y
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = alphabet.names[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def format_element(e: Element) -> str:
    """Canonical text form, terms in graded-lex order: '1/4*X^2 - 3*Y'."""
    if e.is_zero:
        return "0"
    chunks = []
    for word, coeff in e.sorted_items():
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if not word:
            body = str(mag)
        elif mag == 1:
            body = _format_word(e.alphabet, word)
        else:
            body = f"{mag}*{_format_word(e.alphabet, word)}"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def to_json_obj(e: Element) -> list:
    """JSON form: [{word: [names...], coeff: 'p/q'}, ...] in graded-lex order."""
    return [
        {"word": list(e.alphabet.word_names(w)), "coeff": str(c)}
        for w, c in e.sorted_items()
    ]


def from_json_obj(alphabet: Alphabet, obj) -> Element:
    acc = {}
    for entry in obj:
        word = alphabet.word(*entry["word"])
        acc[word] = acc.get(word, Fraction(0)) + as_scalar(entry["coeff"])
    return Element(alphabet, acc)
