"""Frozen identity corpus backing the verification suite.

Each entry is a small named fact about the built-in presentations: an
equality of normal forms, a vanishing commutator, an image under a
verified map, a leading form, or a weighted-degree bound.  The suite in
the acceptance module and the `verify all` command run every entry and
report the ones that fail.  Entry ids are stable; tests refer to them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .casimir import CENTRAL_VARS, CommPoly, express_casimir
from .filtration import STANDARD_WEIGHTS, leading_form, weighted_degree
from .morphisms import sigma, tau, zeta
from .presentations import bannai_ito, bi_rebased, by_id, racah, rebase_to_iota
from .terms import commutator


@dataclass(frozen=True)
class Identity:
    ident: str
    kind: str
    args: tuple

    def check(self) -> bool:
        return _CHECKS[self.kind](*self.args)


def _equal(alg, left, right):
    p = by_id(alg)
    return p.reduce(left) == p.reduce(right)


def _zero(alg, expr):
    return by_id(alg).reduce(expr).is_zero


def _zeta_equal(source, target):
    return zeta().apply(source) == bannai_ito().reduce(target)


def _zeta_rebased(source, target):
    return rebase_to_iota(zeta().apply(source)) == bi_rebased().reduce(target)


def _zeta_commutes(central, source):
    p = bannai_ito()
    return p.reduce(commutator(p.reduce(central), zeta().apply(source))).is_zero


def _map_image(which, alg, source, target):
    m = sigma(alg) if which == "sigma" else tau(alg)
    return m.apply(source) == by_id(alg).reduce(target)


def _lead(weights, level, expr, expected):
    p = bannai_ito()
    return leading_form(weights, p.reduce(expr), level) == p.reduce(expected)


def _zeta_lead(weights, level, source, expected):
    return leading_form(weights, zeta().apply(source), level) == bannai_ito().reduce(expected)


def _wdeg_bound(weights, expr, bound):
    return weighted_degree(weights, bannai_ito().reduce(expr)) <= bound


def _zeta_wdeg_bound(weights, source, target, bound):
    diff = zeta().apply(source) - bannai_ito().reduce(target)
    return weighted_degree(weights, diff) <= bound


def central_variables() -> tuple:
    return tuple(CommPoly.variable(CENTRAL_VARS, n) for n in CENTRAL_VARS)


def gamma_polynomial() -> CommPoly:
    """The parameter-only part shared by the three expressed Casimirs."""
    i, k, l, m = central_variables()
    s1 = k + l + m
    s2 = k * l + l * m + m * k
    return ((2 * i + 3) * (2 * i + 1) * (2 * i - 5) * (2 * i - 7) * Fraction(3, 4096)
            - (2 * i + 1) * (6 * i - 13) * s1 / 512
            + s1 * (s1 + 4) / 64
            - (2 * i - 3) * s2 / 512
            + k * l * m / 256)


def slot_polynomial(name: str) -> CommPoly:
    """Expressed form of a distinguished Casimir, parametrized by the
    central variable (κ, λ or μ) occupying the linear slot."""
    i, k, l, m = central_variables()
    v = {"κ": k, "λ": l, "μ": m}[name]
    return (v * (v - 2 * i + 3) * (4 * i ** 2 - 8 * i - 4 * k - 4 * l - 4 * m + 7) / 1024
            - gamma_polynomial())


def _slot_formula(omega_name, var_name):
    p = racah()
    return express_casimir(p.reduce(p.defined[omega_name])) == slot_polynomial(var_name)


_CHECKS = {
    "equal": _equal,
    "zero": _zero,
    "zeta_equal": _zeta_equal,
    "zeta_rebased": _zeta_rebased,
    "zeta_commutes": _zeta_commutes,
    "map_image": _map_image,
    "lead": _lead,
    "zeta_lead": _zeta_lead,
    "wdeg_bound": _wdeg_bound,
    "zeta_wdeg_bound": _zeta_wdeg_bound,
    "slot_formula": _slot_formula,
}


def _pow(name: str, n: int) -> str:
    if n == 0:
        return ""
    if n == 1:
        return name
    return f"{name}^{n}"


def _mono(*factors) -> str:
    parts = [f for f in factors if f]
    return "*".join(parts) if parts else "1"


def _combination(terms) -> str:
    """Render (coefficient, monomial) pairs as one expression string."""
    out = ""
    for c, mono in terms:
        if not c:
            continue
        mag = abs(c)
        body = mono if mag == 1 and mono != "1" else _mono(str(mag), mono if mono != "1" else "")
        if not out:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out or "0"


def _d_power_target(n: int) -> str:
    """Leading polynomial of the n-th power of the D-image, weights (4,4,6,8,9,9)."""
    terms = []
    scale = Fraction(1, 16 ** n)
    if n % 2 == 0:
        for i in range(n // 2 + 1):
            c = scale * Fraction(-4) ** i * comb(n // 2, i)
            terms.append((c, _mono(_pow("X", 2 * i), _pow("Y", 2 * i),
                                   _pow("κ", n - 2 * i), _pow("Z", n))))
    else:
        for i in range((n - 1) // 2 + 1):
            c = scale * Fraction(-4) ** i * comb((n - 1) // 2, i)
            terms.append((c, _mono(_pow("X", 2 * i), _pow("Y", 2 * i),
                                   _pow("κ", n - 2 * i), _pow("Z", n))))
            terms.append((-2 * c, _mono(_pow("X", 2 * i + 1), _pow("Y", 2 * i + 1),
                                        _pow("κ", n - 2 * i - 1), _pow("Z", n))))
    return _combination(terms)


def _build() -> tuple:
    entries = []

    def add(ident, kind, *args):
        entries.append(Identity(ident, kind, args))

    # Completions forced by the overlapping rewriting rules.
    add("racah-completion-cba", "equal", "racah", "C*B*A",
        "-2*β + 2*A*B - 2*A*D - 2*B*C + 2*B*D - 2*C*D + A*B*C")
    add("racah-completion-dba", "equal", "racah", "D*B*A",
        "-2*β + 2*A*B - 2*A*D - A*β - 2*B*C + 2*B*D - B*α - 2*D^2"
        " + A^2*B - A*B^2 + A*B*D")
    add("racah-completion-dcb", "equal", "racah", "D*C*B",
        "-4*D + 2*α + 2*β - 2*A*C + 2*B*C - 2*B*D + B*α + B*β + 2*C*D - C*β"
        " - 2*D^2 + B^2*C - B*C^2 + B*C*D")
    add("racah-completion-dca", "equal", "racah", "D*C*A",
        "-4*D + 2*α + 2*β - 2*A*C - 2*A*D + A*α + A*β + 2*B*C + 2*C*D - C*α"
        " + 2*D^2 - A^2*C + A*C^2 + A*C*D")

    # The four defined parameters commute with every generator.
    for param in ("α", "β", "γ", "δ"):
        for gen in "ABCD":
            add(f"racah-param-central-{param}-{gen.lower()}", "zero", "racah",
                f"[{param},{gen}]")

    # Defining combinations of the anticommutator presentation.
    add("bi-kappa-definition", "equal", "bi", "{X,Y} - Z", "κ")
    add("bi-lambda-definition", "equal", "bi", "{Y,Z} - X", "λ")
    add("bi-mu-definition", "equal", "bi", "{Z,X} - Y", "μ")

    # Squared-generator brackets collapse to single brackets.
    for ident, left, right in (
            ("bi-bracket-x2y", "[X^2,Y]", "[X,Z]"),
            ("bi-bracket-y2z", "[Y^2,Z]", "[Y,X]"),
            ("bi-bracket-z2x", "[Z^2,X]", "[Z,Y]"),
            ("bi-bracket-y2x", "[Y^2,X]", "[Y,Z]"),
            ("bi-bracket-z2y", "[Z^2,Y]", "[Z,X]"),
            ("bi-bracket-x2z", "[X^2,Z]", "[X,Y]")):
        add(ident, "equal", "bi", left, right)

    # Six expressions share the normal form named L.
    for ident, expr in (
            ("bi-l-rep-y-xz", "{Y,[X,Z]}"),
            ("bi-l-rep-z-yx", "{Z,[Y,X]}"),
            ("bi-l-rep-x2y2", "[X^2,Y^2]"),
            ("bi-l-rep-y2z2", "[Y^2,Z^2]"),
            ("bi-l-rep-z2x2", "[Z^2,X^2]")):
        add(ident, "equal", "bi", expr, "{X,[Z,Y]}")
    add("bi-l-normal-form", "equal", "bi", "{X,[Z,Y]}",
        "2*X^2 + 2*X*λ - 2*Y^2 - 2*Y*μ + 2*Z^2 + 2*Z*κ - 4*X*Y*Z")

    # Generator images under the embedding.
    add("zeta-a-image", "zeta_equal", "A", "1/16*(2*X - 3)*(2*X + 1)")
    add("zeta-b-image", "zeta_equal", "B", "1/16*(2*Y - 3)*(2*Y + 1)")
    add("zeta-c-image", "zeta_equal", "C", "1/16*(2*Z - 3)*(2*Z + 1)")
    add("zeta-d-combination", "zeta_equal", "D",
        "1/32*([X,Y] + [Y,Z] + [Z,X] + {X,[Z,Y]})")
    add("zeta-d-normal-form", "zeta_equal", "D",
        "-1/32*X + 1/32*Y - 1/32*Z - 1/32*κ - 1/32*λ + 1/32*μ"
        " + 1/16*X^2 + 1/16*X*Y - 1/16*X*Z + 1/16*X*λ - 1/16*Y^2 + 1/16*Y*Z"
        " - 1/16*Y*μ + 1/16*Z^2 + 1/16*Z*κ - 1/8*X*Y*Z")
    add("zeta-alpha-image", "zeta_equal", "α", "1/64*(2*ι - κ - μ - 3)*(κ - μ)")
    add("zeta-beta-image", "zeta_equal", "β", "1/64*(2*ι - λ - κ - 3)*(λ - κ)")
    add("zeta-parameter-sum", "zeta_equal", "α + β + γ", "0")
    add("zeta-delta-rebased", "zeta_rebased", "δ",
        "1/4*(ι^2 - 2*ι - κ - λ - μ) - 9/16")

    # ι, κ, λ, μ commute with the image of every source generator.
    for central in ("ι", "κ", "λ", "μ"):
        for gen in "ABCD":
            add(f"zeta-centralizer-{central}-{gen.lower()}", "zeta_commutes",
                central, gen)

    # Antiautomorphism tables on generators and distinguished Casimirs.
    for src, tgt in (("A", "B"), ("B", "A"), ("C", "C"), ("D", "D"),
                     ("α", "-β"), ("β", "-α"),
                     ("Ω_A", "Ω_B"), ("Ω_B", "Ω_A"), ("Ω_C", "Ω_C")):
        add(f"sigma-racah-{src.lower()}", "map_image", "sigma", "racah", src, tgt)
    for src, tgt in (("A", "B"), ("B", "C"), ("C", "A"), ("D", "-D"),
                     ("α", "β"), ("β", "γ"),
                     ("Ω_A", "Ω_B"), ("Ω_B", "Ω_C"), ("Ω_C", "Ω_A")):
        add(f"tau-racah-{src.lower()}", "map_image", "tau", "racah", src, tgt)
    for src, tgt in (("X", "Y"), ("Y", "X"), ("Z", "Z"),
                     ("κ", "κ"), ("λ", "μ"), ("μ", "λ")):
        add(f"sigma-bi-{src.lower()}", "map_image", "sigma", "bi", src, tgt)
    for src, tgt in (("X", "Y"), ("Y", "Z"), ("Z", "X"),
                     ("κ", "λ"), ("λ", "μ"), ("μ", "κ")):
        add(f"tau-bi-{src.lower()}", "map_image", "tau", "bi", src, tgt)

    # Leading forms of the D-image and its square.
    add("lead-form-zeta-d", "zeta_lead", STANDARD_WEIGHTS, 14, "D",
        "1/16*Z*κ - 1/8*X*Y*Z")
    add("lead-form-zeta-d-squared", "zeta_lead", STANDARD_WEIGHTS, 28, "D^2",
        "1/256*Z^2*κ^2 - 1/64*X^2*Y^2*Z^2")

    # Powers of ι agree with powers of Z below twice the exponent.
    for n in range(1, 6):
        add(f"iota-power-congruence-{n}", "wdeg_bound", (1, 1, 2, 0, 0, 0),
            f"(X + Y + Z)^{n} - Z^{n}", 2 * n - 1)

    # Commutation laws for powers against single generators.
    for n in range(0, 6, 2):
        yn, xn, zn = _pow("Y", n), _pow("X", n), _pow("Z", n)
        for ident, lhs, rhs, bound in (
                (f"commutation-even-yx-{n}", _mono(yn, "X"), _mono("X", yn), 4 * n + 3),
                (f"commutation-even-xy-{n}", _mono(xn, "Y"), _mono("Y", xn), 4 * n + 3),
                (f"commutation-even-zy-{n}", _mono(zn, "Y"), _mono("Y", zn), 6 * n + 3),
                (f"commutation-even-yz-{n}", _mono(yn, "Z"), _mono("Z", yn), 4 * n + 5),
                (f"commutation-even-xz-{n}", _mono(xn, "Z"), _mono("Z", xn), 4 * n + 5),
                (f"commutation-even-zx-{n}", _mono(zn, "X"), _mono("X", zn), 6 * n + 3)):
            add(ident, "wdeg_bound", STANDARD_WEIGHTS, f"{lhs} - {rhs}", bound)
    for n in range(1, 6, 2):
        yn, xn, zn = _pow("Y", n), _pow("X", n), _pow("Z", n)
        add(f"commutation-odd-yx-{n}", "wdeg_bound", STANDARD_WEIGHTS,
            f"{_mono(yn, 'X')} + {_mono('X', yn)} - {_mono('κ', _pow('Y', n - 1))}",
            4 * n + 3)
        add(f"commutation-odd-xy-{n}", "wdeg_bound", STANDARD_WEIGHTS,
            f"{_mono(xn, 'Y')} + {_mono('Y', xn)} - {_mono('κ', _pow('X', n - 1))}",
            4 * n + 3)
        add(f"commutation-odd-yz-{n}", "wdeg_bound", STANDARD_WEIGHTS,
            f"{_mono(yn, 'Z')} + {_mono('Z', yn)}", 4 * n + 5)
        add(f"commutation-odd-zy-{n}", "wdeg_bound", STANDARD_WEIGHTS,
            f"{_mono(zn, 'Y')} + {_mono('Y', zn)}", 6 * n + 3)
        add(f"commutation-odd-xz-{n}", "wdeg_bound", STANDARD_WEIGHTS,
            f"{_mono(xn, 'Z')} + {_mono('Z', xn)}", 4 * n + 5)
        add(f"commutation-odd-zx-{n}", "wdeg_bound", STANDARD_WEIGHTS,
            f"{_mono(zn, 'X')} + {_mono('X', zn)}", 6 * n + 3)

    # Power laws for images of generators and parameters.
    for n in range(1, 5):
        add(f"power-law-a-{n}", "zeta_wdeg_bound", STANDARD_WEIGHTS,
            f"A^{n}", f"1/{4 ** n}*X^{2 * n}", 8 * n - 1)
        add(f"power-law-b-{n}", "zeta_wdeg_bound", STANDARD_WEIGHTS,
            f"B^{n}", f"1/{4 ** n}*Y^{2 * n}", 8 * n - 1)
        add(f"power-law-c-{n}", "zeta_wdeg_bound", STANDARD_WEIGHTS,
            f"C^{n}", f"1/{4 ** n}*Z^{2 * n}", 12 * n - 1)
        add(f"power-law-alpha-{n}", "zeta_wdeg_bound", STANDARD_WEIGHTS,
            f"α^{n}", f"1/{64 ** n}*μ^{2 * n}", 18 * n - 1)
        sign = "-" if n % 2 else ""
        add(f"power-law-beta-{n}", "zeta_wdeg_bound", STANDARD_WEIGHTS,
            f"β^{n}", f"{sign}1/{64 ** n}*λ^{2 * n}", 18 * n - 1)
        add(f"power-law-d-{n}", "zeta_wdeg_bound", STANDARD_WEIGHTS,
            f"D^{n}", _d_power_target(n), 14 * n - 1)

    # Expressed Casimirs in the centralizer variables.
    add("casimir-slot-a", "slot_formula", "Ω_A", "λ")
    add("casimir-slot-b", "slot_formula", "Ω_B", "μ")
    add("casimir-slot-c", "slot_formula", "Ω_C", "κ")

    # The distinguished Casimirs differ by parameter multiples.
    add("casimir-coset-a", "equal", "racah", "Ω_A", "Ω_C - (1 + δ)*β")
    add("casimir-coset-b", "equal", "racah", "Ω_B", "Ω_C + (1 + δ)*α")

    return tuple(entries)


CORPUS: tuple = _build()


def entries_with_prefix(prefix: str) -> tuple:
    return tuple(e for e in CORPUS if e.ident.startswith(prefix))


def run_corpus(entries=None) -> list:
    """Check every entry; returns (ident, passed) pairs in corpus order."""
    return [(e.ident, e.check()) for e in (CORPUS if entries is None else entries)]


def corpus_failures(entries=None) -> list:
    return [ident for ident, ok in run_corpus(entries) if not ok]
