"""Reduction systems on free algebras and the diamond-lemma toolkit.

A ReductionSystem holds rewrite rules lhs -> rhs where lhs is a word of
length >= 2 and rhs an element.  Registration verifies termination against
a weighted graded order; normal forms are computed by always rewriting the
leftmost reducible position with the earliest-registered matching rule,
with full memoization at the word level.  Confluence is decided by
resolving every overlap and inclusion ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .terms import Alphabet, Element, Word, grlex_key

_ONE = Fraction(1)


class NonTerminating(ValueError):
    """A rule fails to decrease the term order."""


class TermOrder:
    """Compare words by total weight, then length, then rank-lex.

    This is a total well-order compatible with concatenation, so a rule
    set in which every rhs word is smaller than the lhs terminates.
    Sorting transpositions and replacing a letter by a lower-weight or
    lower-rank one both decrease the order.
    """

    def __init__(self, alphabet: Alphabet, weights=None):
        if weights is None:
            weights = (1,) * len(alphabet)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(alphabet):
            raise ValueError(
                f"need {len(alphabet)} weights for {alphabet!r}, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise ValueError(f"weights must be nonnegative: {weights}")
        self.alphabet = alphabet
        self.weights = weights

    def weight(self, word: Word) -> int:
        ws = self.weights
        return sum(ws[r] for r in word)

    def key(self, word: Word):
        return (self.weight(word), len(word), word)

    def less(self, a: Word, b: Word) -> bool:
        return self.key(a) < self.key(b)


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Element

    def __post_init__(self):
        if len(self.lhs) < 2:
            raise ValueError(f"rule lhs must have length >= 2, got {self.lhs}")


@dataclass(frozen=True)
class OverlapReport:
    """One ambiguity: the offending word and its two one-step resolutions."""
    word: Word
    left_result: Element
    right_result: Element
    resolvable: bool


class ReductionSystem:
    """A terminating rewrite system over one alphabet."""

    def __init__(self, alphabet: Alphabet, rules, order: TermOrder | None = None,
                 verify_termination: bool = True):
        self.alphabet = alphabet
        self.rules = tuple(rules)
        self.order = order if order is not None else TermOrder(alphabet)
        seen = set()
        for rule in self.rules:
            if rule.rhs.alphabet != alphabet:
                raise ValueError(f"rule rhs over wrong alphabet: {rule}")
            if rule.lhs in seen:
                raise ValueError(
                    f"duplicate rule lhs {alphabet.word_names(rule.lhs)}")
            seen.add(rule.lhs)
        # rules indexed by first rank, in registration (priority) order
        self._by_first = {}
        for rule in self.rules:
            self._by_first.setdefault(rule.lhs[0], []).append(rule)
        self._max_lhs = max((len(r.lhs) for r in self.rules), default=2)
        self._nf_cache: dict = {}
        if verify_termination:
            ok, violations = self.check_termination()
            if not ok:
                rule, word = violations[0]
                raise NonTerminating(
                    f"rule {alphabet.word_names(rule.lhs)} does not decrease: "
                    f"rhs word {alphabet.word_names(word)} is not smaller")

    # -- termination ----------------------------------------------------

    def check_termination(self):
        """Return (ok, violations); a violation is a (rule, rhs_word) pair."""
        violations = []
        for rule in self.rules:
            lhs_key = self.order.key(rule.lhs)
            for word in rule.rhs.words():
                if not self.order.key(word) < lhs_key:
                    violations.append((rule, word))
        return (not violations, violations)

    # -- single-word machinery -------------------------------------------

    def leftmost_site(self, word: Word):
        """Leftmost (position, rule) where some rule lhs matches, or None."""
        n = len(word)
        by_first = self._by_first
        for pos in range(n - 1):
            for rule in by_first.get(word[pos], ()):
                lhs = rule.lhs
                if word[pos:pos + len(lhs)] == lhs:
                    return pos, rule
        return None

    def reduction_sites(self, word: Word):
        """Every (position, rule) match in the word, left to right."""
        sites = []
        for pos in range(len(word) - 1):
            for rule in self._by_first.get(word[pos], ()):
                lhs = rule.lhs
                if word[pos:pos + len(lhs)] == lhs:
                    sites.append((pos, rule))
        return sites

    def is_irreducible(self, word: Word) -> bool:
        return self.leftmost_site(word) is None

    def normal_form_word(self, word: Word) -> dict:
        """Fully reduced form of one word as a {word: coeff} dict (shared,
        do not mutate)."""
        cache = self._nf_cache
        found = cache.get(word)
        if found is not None:
            return found
        stack = [word]
        while stack:
            w = stack[-1]
            if w in cache:
                stack.pop()
                continue
            site = self.leftmost_site(w)
            if site is None:
                cache[w] = {w: _ONE}
                stack.pop()
                continue
            pos, rule = site
            prefix, suffix = w[:pos], w[pos + len(rule.lhs):]
            children = [(prefix + t + suffix, c) for t, c in rule.rhs.items()]
            missing = [cw for cw, _ in children if cw not in cache]
            if missing:
                stack.extend(missing)
                continue
            acc = {}
            for cw, cc in children:
                for t, tc in cache[cw].items():
                    prev = acc.get(t)
                    val = cc * tc if prev is None else prev + cc * tc
                    if val:
                        acc[t] = val
                    elif prev is not None:
                        del acc[t]
            cache[w] = acc
            stack.pop()
        return cache[word]

    # -- element-level operations ----------------------------------------

    def normal_form(self, e: Element) -> Element:
        if e.alphabet != self.alphabet:
            raise ValueError(f"element over {e.alphabet!r}, system over {self.alphabet!r}")
        acc = {}
        for w, c in e.items():
            for t, tc in self.normal_form_word(w).items():
                prev = acc.get(t)
                val = c * tc if prev is None else prev + c * tc
                if val:
                    acc[t] = val
                elif prev is not None:
                    del acc[t]
        return Element(self.alphabet, acc)

    def mul(self, a: Element, b: Element) -> Element:
        """Product reduced to normal form."""
        return self.normal_form(a * b)

    # -- confluence -------------------------------------------------------

    def check_confluence(self) -> list:
        """One OverlapReport per overlap or inclusion ambiguity."""
        reports = []
        for r1 in self.rules:
            p = len(r1.lhs)
            for r2 in self.rules:
                q = len(r2.lhs)
                # overlap: proper suffix of r1.lhs equals proper prefix of r2.lhs
                for t in range(1, min(p, q)):
                    if r1.lhs[p - t:] == r2.lhs[:t]:
                        word = r1.lhs + r2.lhs[t:]
                        left = self._apply_at(word, 0, r1)
                        right = self._apply_at(word, p - t, r2)
                        reports.append(self._report(word, left, right))
                # inclusion: r2.lhs a proper subword of r1.lhs
                if r1 is not r2 and q < p:
                    for i in range(p - q + 1):
                        if r1.lhs[i:i + q] == r2.lhs:
                            left = self._apply_at(r1.lhs, 0, r1)
                            right = self._apply_at(r1.lhs, i, r2)
                            reports.append(self._report(r1.lhs, left, right))
        reports.sort(key=lambda rep: (self.order.key(rep.word), rep.word))
        return reports

    def is_confluent(self) -> bool:
        return all(rep.resolvable for rep in self.check_confluence())

    def _apply_at(self, word: Word, pos: int, rule: Rule) -> Element:
        prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
        return self.normal_form(Element(
            self.alphabet, {prefix + t + suffix: c for t, c in rule.rhs.items()}))

    def _report(self, word, left, right) -> OverlapReport:
        return OverlapReport(word, left, right, left == right)

    # -- enumeration -------------------------------------------------------

    def irreducible_words(self, max_len: int):
        """All irreducible words of length <= max_len, in graded-lex order."""
        out = []
        lhs_set = {r.lhs for r in self.rules}
        lengths = sorted({len(l) for l in lhs_set})
        n_gens = len(self.alphabet)

        def tail_reducible(word):
            for L in lengths:
                if len(word) >= L and word[-L:] in lhs_set:
                    return True
            return False

        frontier = [()]
        while frontier:
            out.extend(frontier)
            if len(frontier[0]) == max_len:
                break
            nxt = []
            for w in frontier:
                for r in range(n_gens):
                    nw = w + (r,)
                    if not tail_reducible(nw):
                        nxt.append(nw)
            frontier = nxt
        out.sort(key=grlex_key)
        return out


def check_termination(system: ReductionSystem):
    return system.check_termination()


def check_confluence(system: ReductionSystem):
    return system.check_confluence()


def normal_form(system: ReductionSystem, e: Element) -> Element:
    return system.normal_form(e)


def normal_form_choosing(system: ReductionSystem, e: Element, choose) -> Element:
    """Reduce with an arbitrary site-selection strategy, no memoization.

    choose(sites) picks one of the (position, rule) matches; used to
    cross-check that all strategies agree on confluent systems.
    """
    pending = {w: Fraction(c) for w, c in e.items()}
    done = {}
    while pending:
        word = max(pending, key=system.order.key)
        coeff = pending.pop(word)
        if not coeff:
            continue
        sites = system.reduction_sites(word)
        if not sites:
            done[word] = done.get(word, Fraction(0)) + coeff
            continue
        pos, rule = choose(sites)
        prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
        for t, c in rule.rhs.items():
            nw = prefix + t + suffix
            pending[nw] = pending.get(nw, Fraction(0)) + coeff * c
    return Element(system.alphabet, done)


# -- system definition files ----------------------------------------------


def format_system(system: ReductionSystem) -> str:
    """Render as the system-definition text format (parse_system inverts)."""
    from .terms import format_element

    lines = ["alphabet " + " ".join(system.alphabet.names),
             "weights " + " ".join(str(w) for w in system.order.weights)]
    for rule in system.rules:
        lhs = "*".join(system.alphabet.word_names(rule.lhs))
        lines.append(f"{lhs} -> {format_element(rule.rhs)}")
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> ReductionSystem:
    """Parse the system-definition format: an alphabet line, an optional
    weights line, then one 'LHS -> element' rule per line."""
    from .expressions import parse_element

    alphabet = None
    weights = None
    rule_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("alphabet"):
            names = line.split()[1:]
            if not names:
                raise ValueError(f"line {lineno}: empty alphabet declaration")
            alphabet = Alphabet(names)
        elif line.startswith("weights"):
            weights = [int(tok) for tok in line.split()[1:]]
        else:
            if "->" not in line:
                raise ValueError(f"line {lineno}: expected 'LHS -> element', got {raw!r}")
            rule_lines.append((lineno, line))
    if alphabet is None:
        raise ValueError("missing alphabet declaration")
    names = {n: alphabet.gen(n) for n in alphabet.names}
    rules = []
    for lineno, line in rule_lines:
        lhs_text, rhs_text = line.split("->", 1)
        try:
            lhs = parse_element(lhs_text, alphabet, names).single_word()
            rhs = parse_element(rhs_text, alphabet, names)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        rules.append(Rule(lhs, rhs))
    order = TermOrder(alphabet, weights)
    return ReductionSystem(alphabet, rules, order)
