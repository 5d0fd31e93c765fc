"""Weighted filtrations of the Bannai-Ito presentation.

A weight vector assigns a nonnegative integer to each generator; the
weighted degree of a normal form is the maximum over its words of the
letter-weight sum (-1 for zero).  is_filtration decides, by three max
inequalities on the weights, whether products respect the induced
filtration; check_filtration_product tests the same property empirically
on basis monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .presentations import bannai_ito
from .terms import Alphabet, Element, Word, grlex_key

#: Weights under which the Racah embedding has monomial leading terms.
STANDARD_WEIGHTS = (4, 4, 6, 8, 9, 9)


def _as_weights(alphabet: Alphabet, weights) -> tuple:
    weights = tuple(int(w) for w in weights)
    if len(weights) != len(alphabet):
        raise ValueError(f"need {len(alphabet)} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError(f"weights must be nonnegative: {weights}")
    return weights


def is_filtration(weights) -> bool:
    """Whether the weight vector (on X, Y, Z, κ, λ, μ) filters products.

    Holds exactly when each defining rule is weight-nonincreasing:
    max(w_Z, w_κ) <= w_X + w_Y, and the two cyclic shifts.
    """
    wx, wy, wz, wk, wl, wm = _as_weights(bannai_ito().alphabet, weights)
    return (max(wz, wk) <= wx + wy
            and max(wx, wl) <= wy + wz
            and max(wy, wm) <= wz + wx)


def word_degree(weights, word: Word) -> int:
    return sum(weights[r] for r in word)


def weighted_degree(weights, e) -> int:
    """Weighted degree of the normal form of e; -1 for the zero element."""
    p = bannai_ito()
    weights = _as_weights(p.alphabet, weights)
    e = p.reduce(e)
    if e.is_zero:
        return -1
    return max(word_degree(weights, w) for w in e.words())


def leading_form(weights, e, n: int) -> Element:
    """Drop every term of weighted degree <= n - 1 from the normal form."""
    p = bannai_ito()
    weights = _as_weights(p.alphabet, weights)
    e = p.reduce(e)
    return Element(p.alphabet,
                   {w: c for w, c in e.items() if word_degree(weights, w) >= n})


def weighted_monomials(alphabet: Alphabet, weights, max_degree: int,
                       max_length: int | None = None) -> list:
    """Sorted monomial words with weighted degree <= max_degree.

    max_length bounds the word length and is required whenever some
    weight is zero (the enumeration would be infinite otherwise).
    Result is ordered by (weighted degree, graded-lex).
    """
    weights = _as_weights(alphabet, weights)
    if max_length is None:
        if 0 in weights:
            raise ValueError("max_length is required when a weight is zero")
        max_length = max_degree // min(weights) if weights else 0
    ranges = []
    for rank, w in enumerate(weights):
        cap = max_length if w == 0 else min(max_length, max_degree // w)
        ranges.append(range(cap + 1))
    out = []
    for exps in iter_product(*ranges):
        if sum(exps) > max_length:
            continue
        degree = sum(e * w for e, w in zip(exps, weights))
        if degree > max_degree:
            continue
        word = ()
        for rank, e in enumerate(exps):
            word += (rank,) * e
        out.append((degree, word))
    out.sort(key=lambda dw: (dw[0], grlex_key(dw[1])))
    return [w for _, w in out]


@dataclass(frozen=True)
class ProductWitness:
    """A basis-monomial product whose normal form overshoots the bound."""
    left: Word
    right: Word
    product: Element
    bound: int
    degree: int


#: (u, v) -> exponent-count vectors of the words in nf(u+v); shared across
#: calls because the same monomial pairs recur for every weight vector.
_PAIR_EXPS: dict = {}


def _word_exps(word: Word, size: int) -> tuple:
    counts = [0] * size
    for r in word:
        counts[r] += 1
    return tuple(counts)


def check_filtration_product(weights, sample_degree: int,
                             max_length: int = 4):
    """Empirical filtration test on all basis-monomial pairs up to bounds.

    For every pair u, v of sorted monomials with weighted degrees m, n
    <= sample_degree (word length <= max_length), checks that the normal
    form of u*v has weighted degree <= m + n.  Returns (ok, witnesses).
    """
    p = bannai_ito()
    weights = _as_weights(p.alphabet, weights)
    system = p.system
    size = len(p.alphabet)
    monomials = weighted_monomials(p.alphabet, weights, sample_degree, max_length)
    degrees = {u: word_degree(weights, u) for u in monomials}
    witnesses = []
    for u in monomials:
        m = degrees[u]
        for v in monomials:
            w = u + v
            if system.is_irreducible(w):
                continue  # degree is additive on concatenation
            exps = _PAIR_EXPS.get(w)
            if exps is None:
                exps = tuple({_word_exps(t, size)
                              for t in system.normal_form_word(w)})
                _PAIR_EXPS[w] = exps
            if not exps:
                continue
            bound = m + degrees[v]
            degree = max(sum(c * wt for c, wt in zip(e, weights)) for e in exps)
            if degree > bound:
                nf = system.normal_form(Element(p.alphabet, {w: 1}))
                witnesses.append(ProductWitness(u, v, nf, bound, degree))
    return (not witnesses, witnesses)
