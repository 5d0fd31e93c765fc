"""Central elements: testing centrality, the Casimir class of the Racah
presentation, expression of Casimirs as polynomials in (ι, κ, λ, μ), and
a finite-rank injectivity harness for the embedding.

The expression route follows the embedding: apply zeta, rewrite over the
rebased alphabet where the centralizer collapses onto pure (ι, κ, λ, μ)
monomials, and read the polynomial off the surviving exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .filtration import STANDARD_WEIGHTS, weighted_degree, weighted_monomials
from .morphisms import zeta
from .presentations import bannai_ito, bi_rebased, racah, rebase_to_z
from .terms import Element, as_scalar, commutator, grlex_key


class CommPoly:
    """Commutative polynomial with rational coefficients in named variables.

    Terms map exponent tuples to nonzero Fractions.  Supports mixed
    arithmetic with ints and Fractions; division only by scalars.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names, terms):
        self.names = tuple(names)
        clean = {}
        for exps, coeff in terms.items():
            coeff = as_scalar(coeff)
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, names, value):
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def variable(cls, names, name):
        exps = [0] * len(names)
        exps[list(names).index(name)] = 1
        return cls(names, {tuple(exps): 1})

    @classmethod
    def variables(cls, names):
        return tuple(cls.variable(names, n) for n in names)

    @property
    def is_zero(self):
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _coerce(self, other):
        if isinstance(other, CommPoly):
            if other.names != self.names:
                raise ValueError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        return CommPoly.constant(self.names, other)

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return CommPoly(self.names, acc)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CommPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CommPoly):
            return CommPoly(self.names,
                            {e: c * as_scalar(other) for e, c in self.terms.items()})
        other = self._coerce(other)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return CommPoly(self.names, acc)

    __rmul__ = __mul__

    def __truediv__(self, value):
        return self * (Fraction(1) / as_scalar(value))

    def __pow__(self, n: int):
        out = CommPoly.constant(self.names, 1)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, coeff in sorted(self.terms.items(),
                                  key=lambda ec: (sum(ec[0]), ec[0])):
            factors = [f"{n}^{e}" if e > 1 else n
                       for n, e in zip(self.names, exps) if e]
            body = "*".join(factors)
            if not body:
                bits.append((coeff, str(abs(coeff))))
            elif abs(coeff) == 1:
                bits.append((coeff, body))
            else:
                bits.append((coeff, f"{abs(coeff)}*{body}"))
        out = ("-" if bits[0][0] < 0 else "") + bits[0][1]
        for coeff, body in bits[1:]:
            out += f" - {body}" if coeff < 0 else f" + {body}"
        return out

    def __repr__(self):
        return f"<CommPoly {self}>"

    def evaluate(self, values: dict, one: Element, mul) -> Element:
        """Evaluate at Element values with a supplied (reducing) product."""
        out = one.alphabet.zero()
        for exps, coeff in sorted(self.terms.items()):
            acc = one
            for name, e in zip(self.names, exps):
                for _ in range(e):
                    acc = mul(acc, values[name])
            out = out + acc.scale(coeff)
        return out


CASIMIR_VARS = ("α", "β", "γ", "δ")
CENTRAL_VARS = ("ι", "κ", "λ", "μ")


def casimir_vars():
    """The variables (α, β, γ, δ) for building correction polynomials."""
    return CommPoly.variables(CASIMIR_VARS)


def central_vars():
    """The variables (ι, κ, λ, μ) of expressed Casimir polynomials."""
    return CommPoly.variables(CENTRAL_VARS)


@dataclass(frozen=True)
class CasimirSpec:
    """A Casimir-class member: the fixed coset base plus this correction."""
    correction: CommPoly

    def __post_init__(self):
        if self.correction.names != CASIMIR_VARS:
            raise ValueError(f"correction must be in {CASIMIR_VARS}")


def is_central(p, e, testers=None) -> bool:
    """True iff nf([e, t]) = 0 for every tester (generators by default)."""
    e = p.reduce(e)
    if testers is None:
        testers = [p.alphabet.gen(n) for n in p.alphabet.names]
    for t in testers:
        if isinstance(t, str):
            t = p.parse(t)
        if not p.reduce(commutator(e, t)).is_zero:
            return False
    return True


@lru_cache(maxsize=None)
def casimir_base() -> Element:
    """The distinguished coset representative of the Casimir class."""
    # This element must be central: every member of its coset modulo the
    # parameter subalgebra is required to commute with A, B, C, D.
    return racah().reduce(
        "D^2 + A^2 + B^2 + 1/2*((δ + 2)*{A,B} - {A^2,B} - {A,B^2})"
        " + A*(β - δ) - B*(δ + α)")


def casimir_element(spec) -> Element:
    """Base representative plus the expanded correction, in normal form."""
    if isinstance(spec, CommPoly):
        spec = CasimirSpec(spec)
    p = racah()
    values = {n: p.name_table()[n] for n in CASIMIR_VARS}
    correction = spec.correction.evaluate(values, p.alphabet.one(), p.system.mul)
    return p.reduce(casimir_base() + correction)


def correction_for(omega) -> CasimirSpec | None:
    """Solve for the correction polynomial putting omega in the Casimir
    class, or None if omega - base lies outside the central subalgebra."""
    p = racah()
    omega = p.reduce(omega)
    diff = p.reduce(omega - casimir_base())
    bound = max(diff.degree(), 0)
    table = p.name_table()
    candidates = []  # (exponents in (α,β,γ=0,δ), normal form)
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            for d in range(bound + 1 - a - b):
                e = table["α"] ** a * table["β"] ** b * table["δ"] ** d
                candidates.append(((a, b, 0, d), p.reduce(e)))
    coeffs = _solve_combination(diff, [e for _, e in candidates])
    if coeffs is None:
        return None
    terms = {exps: c for (exps, _), c in zip(candidates, coeffs) if c}
    return CasimirSpec(CommPoly(CASIMIR_VARS, terms))


def _solve_combination(target: Element, candidates: list):
    """Exact solve of sum_i x_i * candidates[i] = target; None if unsolvable."""
    words = sorted({w for e in candidates for w in e.words()} | set(target.words()),
                   key=grlex_key)
    n = len(candidates)
    rows = [[e.coefficient(w) for e in candidates] + [target.coefficient(w)]
            for w in words]
    pivot_cols = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][col]
        rows[r] = [v / head for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [v - factor * rv for v, rv in zip(rows[i], rows[r])]
        pivot_cols.append(col)
        r += 1
    solution = [Fraction(0)] * n
    for row_idx, col in enumerate(pivot_cols):
        solution[col] = rows[row_idx][n]
    for i in range(r, len(rows)):
        if rows[i][n]:
            return None  # inconsistent
    return solution


class NotInCentralizerImage(ValueError):
    """express_casimir found residual X or Y exponents."""

    def __init__(self, monomials):
        self.monomials = monomials
        shown = ", ".join(monomials)
        super().__init__(f"element is not a Casimir: residual monomials {shown}")


def express_casimir(omega) -> CommPoly:
    """Express a Casimir element as a polynomial in (ι, κ, λ, μ).

    Applies the embedding, rewrites over the rebased alphabet, and reads
    the polynomial off the 0-X, 0-Y monomials; anything else raises
    NotInCentralizerImage.
    """
    from .presentations import rebase_to_iota

    p = racah()
    omega = p.reduce(omega)
    image = zeta().apply(omega)
    rebased = rebase_to_iota(image)
    bad = []
    terms = {}
    for word, coeff in rebased.sorted_items():
        if any(rank in (0, 1) for rank in word):
            bad.append(str(Element(rebased.alphabet, {word: coeff})))
            continue
        exps = tuple(sum(1 for r in word if r == rank) for rank in (2, 3, 4, 5))
        terms[exps] = coeff
    if bad:
        raise NotInCentralizerImage(bad)
    return CommPoly(CENTRAL_VARS, terms)


def central_value(poly: CommPoly) -> Element:
    """The Bannai-Ito element P(ι, κ, λ, μ), reduced."""
    if poly.names != CENTRAL_VARS:
        raise ValueError(f"expected a polynomial in {CENTRAL_VARS}")
    reb = bi_rebased()
    # words ι^k κ^r λ^s μ^t are already irreducible over the rebased alphabet
    element = Element(reb.alphabet, {
        (2,) * k + (3,) * r + (4,) * s + (5,) * t: c
        for (k, r, s, t), c in poly.terms.items()})
    return rebase_to_z(element)


# -- injectivity harness ------------------------------------------------------


@dataclass(frozen=True)
class MonomialCheck:
    exponents: tuple  # (i, j, k, l, r, s) for A^i B^j C^k D^l α^r β^s
    weight: int
    lead_exponents: tuple  # (x, y, z, κ, λ, μ) of the predicted top monomial
    expected: Fraction
    computed: Fraction

    @property
    def match(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class RankReport:
    max_weight: int
    dimension_source: int
    dimension_image: int
    full_rank: bool
    lead_map_injective: bool
    checks: tuple

    @property
    def all_leads_match(self) -> bool:
        return all(c.match for c in self.checks)

    def to_json_obj(self) -> dict:
        return {
            "max_weight": self.max_weight,
            "dimension_source": self.dimension_source,
            "dimension_image": self.dimension_image,
            "full_rank": self.full_rank,
            "lead_map_injective": self.lead_map_injective,
            "all_leads_match": self.all_leads_match,
            "monomials": [
                {
                    "exponents": list(c.exponents),
                    "weight": c.weight,
                    "lead_exponents": list(c.lead_exponents),
                    "expected": str(c.expected),
                    "computed": str(c.computed),
                    "match": c.match,
                }
                for c in self.checks
            ],
        }


def source_weights() -> tuple:
    """Weighted degree of each generator image under the standard weights;
    evaluates to (8, 8, 12, 14, 18, 18) on (A, B, C, D, α, β)."""
    z = zeta()
    return tuple(weighted_degree(STANDARD_WEIGHTS, z.apply(z.source.alphabet.gen(n)))
                 for n in z.source.alphabet.names)


def _integer_row(e: Element) -> dict:
    lcm = 1
    for _, c in e.items():
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    row = {w: int(c * lcm) for w, c in e.items()}
    g = 0
    for v in row.values():
        g = _gcd(g, abs(v))
    if g > 1:
        row = {w: v // g for w, v in row.items()}
    return row


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _sparse_rank(rows: list) -> int:
    """Rank of integer rows (word -> int dicts) by fraction-free elimination."""
    pivots = {}  # lead word -> row
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            lead = max(row, key=grlex_key)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                rank += 1
                break
            a, b = pivot[lead], row[lead]
            new = {}
            for w in set(row) | set(pivot):
                v = a * row.get(w, 0) - b * pivot.get(w, 0)
                if v:
                    new[w] = v
            g = 0
            for v in new.values():
                g = _gcd(g, abs(v))
            if g > 1:
                new = {w: v // g for w, v in new.items()}
            row = new
    return rank


def zeta_rank_check(max_weight: int = 40) -> RankReport:
    """Check injectivity of the embedding on all source basis monomials of
    bounded weight: full matrix rank plus the closed-form top coefficient
    at the predicted leading monomial of each image."""
    p = racah()
    weights = source_weights()
    monomials = weighted_monomials(p.alphabet, weights, max_weight)
    z = zeta()
    checks = []
    rows = []
    lead_tuples = []
    for word in monomials:
        i, j, k, l, r, s = (sum(1 for x in word if x == rank) for rank in range(6))
        image = z.apply(Element(p.alphabet, {word: 1}))
        rows.append(_integer_row(image))
        lead = (2 * i, 2 * j, 2 * k + l, l, 2 * s, 2 * r)
        lead_word = sum(((rank,) * e for rank, e in enumerate(lead)), ())
        expected = Fraction((-1) ** s, 4 ** (i + j + k + 2 * l + 3 * r + 3 * s))
        checks.append(MonomialCheck(
            exponents=(i, j, k, l, r, s),
            weight=sum(w * e for w, e in zip(weights, (i, j, k, l, r, s))),
            lead_exponents=lead,
            expected=expected,
            computed=image.coefficient(lead_word),
        ))
        lead_tuples.append(lead)
    rank = _sparse_rank(rows)
    return RankReport(
        max_weight=max_weight,
        dimension_source=len(monomials),
        dimension_image=rank,
        full_rank=rank == len(monomials),
        lead_map_injective=len(set(lead_tuples)) == len(lead_tuples),
        checks=tuple(checks),
    )
