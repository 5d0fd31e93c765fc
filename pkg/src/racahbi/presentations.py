"""Built-in presentations: the Racah algebra, the Bannai-Ito algebra, and
the Bannai-Ito algebra rebased on the generator sum.

Each presentation bundles a confluent, terminating reduction system with
its defined (non-generator) elements and the ASCII spellings accepted for
Unicode generator names.  Irreducible words are exactly the sorted
monomials in the generator order, so normal forms are PBW expansions.
"""

from __future__ import annotations

from functools import lru_cache

from .expressions import parse_element
from .rewrite import ReductionSystem, Rule, TermOrder, parse_system
from .terms import Alphabet, Element, anticommutator, commutator


class Presentation:
    """A named reduction system plus defined elements and name aliases."""

    def __init__(self, pid: str, system: ReductionSystem, defined: dict,
                 aliases: dict):
        self.id = pid
        self.system = system
        self.defined = dict(defined)
        self.aliases = dict(aliases)
        bad = [rep for rep in system.check_confluence() if not rep.resolvable]
        if bad:
            words = [system.alphabet.word_names(rep.word) for rep in bad]
            raise ValueError(f"presentation {pid!r} is not confluent at {words}")

    @property
    def alphabet(self) -> Alphabet:
        return self.system.alphabet

    def gen(self, name: str) -> Element:
        return self.alphabet.gen(self.aliases.get(name, name))

    def name_table(self) -> dict:
        """Every name the expression parser may resolve, aliases included."""
        table = {n: self.alphabet.gen(n) for n in self.alphabet.names}
        table.update(self.defined)
        for alias, primary in self.aliases.items():
            table[alias] = table[primary]
        return table

    def parse(self, text: str) -> Element:
        """Parse an expression over this presentation (not reduced)."""
        return parse_element(text, self.alphabet, self.name_table())

    def reduce(self, e) -> Element:
        if isinstance(e, str):
            e = self.parse(e)
        return self.system.normal_form(e)

    def __repr__(self):
        return f"<Presentation {self.id}>"


def _central_rules(names, central, others):
    # central generators commute with everything declared before them
    lines = []
    for i, c in enumerate(central):
        for g in others + central[:i]:
            lines.append(f"{c}*{g} -> {g}*{c}")
    return lines


@lru_cache(maxsize=None)
def racah() -> Presentation:
    """Racah algebra on A, B, C, D with central α, β.

    The six defining rules push products into sorted order; the commutator
    [A,B] = [B,C] = [C,A] is the extra generator 2D.
    """
    names = ("A", "B", "C", "D", "α", "β")
    lines = [
        "alphabet " + " ".join(names),
        "weights 1 1 1 1 1 1",
        "B*A -> A*B - 2*D",
        "C*B -> B*C - 2*D",
        "C*A -> A*C + 2*D",
        "D*A -> A*D - A*B + A*C + 2*D - α",
        "D*B -> B*D - B*C + A*B - β",
        "D*C -> C*D - A*C + B*C - 2*D + α + β",
    ]
    lines += _central_rules(names, ["α", "β"], ["A", "B", "C", "D"])
    system = parse_system("\n".join(lines))
    alphabet = system.alphabet
    table = {n: alphabet.gen(n) for n in names}
    gamma = -table["α"] - table["β"]
    delta = table["A"] + table["B"] + table["C"]
    table["γ"], table["δ"] = gamma, delta
    nf = system.normal_form
    omegas = {
        "Ω_A": "D^2 + 1/2*(B*A*C + C*A*B) + A^2 + B*γ - C*β - A*δ",
        "Ω_B": "D^2 + 1/2*(C*B*A + A*B*C) + B^2 + C*α - A*γ - B*δ",
        "Ω_C": "D^2 + 1/2*(A*C*B + B*C*A) + C^2 + A*β - B*α - C*δ",
    }
    defined = {"γ": nf(gamma), "δ": nf(delta)}
    for name, text in omegas.items():
        defined[name] = nf(parse_element(text, alphabet, table))
    aliases = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ",
               "Omega_A": "Ω_A", "Omega_B": "Ω_B", "Omega_C": "Ω_C"}
    return Presentation("racah", system, defined, aliases)


@lru_cache(maxsize=None)
def bannai_ito() -> Presentation:
    """Bannai-Ito algebra on X, Y, Z with central κ, λ, μ.

    Anticommutators of the main generators land back in the algebra:
    {X,Y} = Z + κ and cyclic shifts.
    """
    names = ("X", "Y", "Z", "κ", "λ", "μ")
    lines = [
        "alphabet " + " ".join(names),
        "weights 1 1 1 1 1 1",
        "Y*X -> -X*Y + Z + κ",
        "Z*Y -> -Y*Z + X + λ",
        "Z*X -> -X*Z + Y + μ",
    ]
    lines += _central_rules(names, ["κ", "λ", "μ"], ["X", "Y", "Z"])
    system = parse_system("\n".join(lines))
    alphabet = system.alphabet
    X, Y, Z = (alphabet.gen(n) for n in "XYZ")
    iota = X + Y + Z
    ell = system.normal_form(anticommutator(X, commutator(Z, Y)))
    defined = {"ι": system.normal_form(iota), "L": ell}
    aliases = {"kappa": "κ", "lambda": "λ", "mu": "μ", "iota": "ι"}
    return Presentation("bi", system, defined, aliases)


@lru_cache(maxsize=None)
def bi_rebased() -> Presentation:
    """Bannai-Ito algebra with the generator sum ι = X + Y + Z replacing Z.

    Irreducible monomials are X^i Y^j ι^k κ^r λ^s μ^t.  The term order
    gives ι weight 2, matching the weight of the Z it absorbs.
    """
    names = ("X", "Y", "ι", "κ", "λ", "μ")
    lines = [
        "alphabet " + " ".join(names),
        "weights 1 1 2 0 0 0",
        "Y*X -> -X*Y - X - Y + ι + κ",
        "ι*Y -> 2*Y^2 - Y*ι - Y + ι + κ + λ",
        "ι*X -> 2*X^2 - X*ι - X + ι + κ + μ",
    ]
    lines += _central_rules(names, ["κ", "λ", "μ"], ["X", "Y", "ι"])
    system = parse_system("\n".join(lines))
    alphabet = system.alphabet
    z = alphabet.gen("ι") - alphabet.gen("X") - alphabet.gen("Y")
    defined = {"Z": system.normal_form(z)}
    aliases = {"iota": "ι", "kappa": "κ", "lambda": "λ", "mu": "μ"}
    return Presentation("bi_rebased", system, defined, aliases)


_IDS = {"racah": racah, "bi": bannai_ito, "bannai_ito": bannai_ito,
        "bannai-ito": bannai_ito, "bi_rebased": bi_rebased,
        "bi-rebased": bi_rebased, "rebased": bi_rebased}


def by_id(pid: str) -> Presentation:
    try:
        return _IDS[pid.lower()]()
    except KeyError:
        raise ValueError(
            f"unknown presentation {pid!r}; expected one of racah, bi, bi_rebased"
        ) from None


def _substituted(e: Element, images: list, system: ReductionSystem) -> Element:
    out = system.alphabet.zero()
    for word, coeff in e.items():
        acc = system.alphabet.one()
        for rank in word:
            acc = system.normal_form(acc * images[rank])
        out = out + acc.scale(coeff)
    return out


def rebase_to_iota(e: Element) -> Element:
    """Rewrite a Bannai-Ito element over the rebased alphabet, eliminating
    Z as ι - X - Y, and reduce there."""
    source, target = bannai_ito(), bi_rebased()
    if e.alphabet != source.alphabet:
        raise ValueError(f"expected an element over {source.alphabet!r}")
    a = target.alphabet
    images = [a.gen("X"), a.gen("Y"), target.defined["Z"],
              a.gen("κ"), a.gen("λ"), a.gen("μ")]
    return _substituted(e, images, target.system)


def rebase_to_z(e: Element) -> Element:
    """Inverse of rebase_to_iota: expand ι as X + Y + Z and reduce."""
    source, target = bi_rebased(), bannai_ito()
    if e.alphabet != source.alphabet:
        raise ValueError(f"expected an element over {source.alphabet!r}")
    a = target.alphabet
    images = [a.gen("X"), a.gen("Y"), target.defined["ι"],
              a.gen("κ"), a.gen("λ"), a.gen("μ")]
    return _substituted(e, images, target.system)
