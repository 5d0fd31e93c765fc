"""Maps between presentations defined by generator images.

An AlgebraMap is a homomorphism or antihomomorphism determined by one
image element per source generator.  Maps must be sealed before use:
sealing verifies that every defining rule of the source is sent to zero
in the target, so applying a sealed map is always well defined.

Built-ins: the embedding of the Racah presentation into the Bannai-Ito
presentation (zeta), and the dihedral antiautomorphisms sigma and tau
of either algebra.
"""

from __future__ import annotations

from functools import lru_cache

from .presentations import Presentation, bannai_ito, by_id, racah
from .terms import Element


class UnsealedMap(RuntimeError):
    """apply() was called before verify_on_relations passed."""


class AlgebraMap:
    """Generator-image map between two presentations."""

    def __init__(self, name: str, source: Presentation, target: Presentation,
                 images: dict, kind: str):
        if kind not in ("homo", "anti"):
            raise ValueError(f"kind must be 'homo' or 'anti', got {kind!r}")
        missing = [g for g in source.alphabet.names if g not in images]
        if missing:
            raise ValueError(f"missing images for generators {missing}")
        self.name = name
        self.source = source
        self.target = target
        self.kind = kind
        self.images = {}
        for gen_name, img in images.items():
            if isinstance(img, str):
                img = target.parse(img)
            if img.alphabet != target.alphabet:
                raise ValueError(f"image of {gen_name!r} is over the wrong alphabet")
            self.images[gen_name] = target.reduce(img)
        self._by_rank = [self.images[n] for n in source.alphabet.names]
        self._seq_cache = {(): target.alphabet.one()}
        self._sealed = False

    @property
    def sealed(self) -> bool:
        return self._sealed

    def __repr__(self):
        state = "sealed" if self._sealed else "unsealed"
        return (f"<AlgebraMap {self.name}: {self.source.id} -> "
                f"{self.target.id} ({self.kind}, {state})>")

    # -- evaluation -----------------------------------------------------

    def _word_image(self, word) -> Element:
        # antihomomorphisms multiply images in reversed word order
        seq = word[::-1] if self.kind == "anti" else word
        cache = self._seq_cache
        start = len(seq)
        acc = cache.get(seq)
        while acc is None:
            start -= 1
            acc = cache.get(seq[:start])
        nf = self.target.system.normal_form
        for j in range(start, len(seq)):
            acc = nf(acc * self._by_rank[seq[j]])
            cache[seq[:j + 1]] = acc
        return acc

    def _apply(self, e: Element) -> Element:
        if e.alphabet != self.source.alphabet:
            raise ValueError(
                f"map {self.name} expects elements over {self.source.alphabet!r}")
        out = self.target.alphabet.zero()
        for word, coeff in e.items():
            out = out + self._word_image(word).scale(coeff)
        return out

    def apply(self, e) -> Element:
        """Image of an element, in target normal form.  Requires sealing."""
        if not self._sealed:
            raise UnsealedMap(
                f"map {self.name} not sealed; call seal() or verify_on_relations()")
        if isinstance(e, str):
            e = self.source.parse(e)
        return self._apply(e)

    # -- sealing ----------------------------------------------------------

    def verify_on_relations(self):
        """Check every source rule maps to zero; seal on success.

        Returns (ok, failures) where each failure is (rule, residue).
        """
        failures = []
        for rule in self.source.system.rules:
            lhs = Element(self.source.alphabet, {rule.lhs: 1})
            residue = self._apply(lhs) - self._apply(rule.rhs)
            if not residue.is_zero:
                failures.append((rule, residue))
        if not failures:
            self._sealed = True
        return (not failures, failures)

    def seal(self) -> "AlgebraMap":
        ok, failures = self.verify_on_relations()
        if not ok:
            rule, residue = failures[0]
            lhs = "*".join(self.source.alphabet.word_names(rule.lhs))
            raise ValueError(
                f"map {self.name} breaks relation {lhs}: residue {residue}")
        return self


def apply(m: AlgebraMap, e) -> Element:
    return m.apply(e)


def compose(f: AlgebraMap, g: AlgebraMap) -> AlgebraMap:
    """f after g.  Antihomomorphisms compose to a homomorphism."""
    if g.target is not f.source and g.target.id != f.source.id:
        raise ValueError(f"cannot compose {f.name} after {g.name}: "
                         f"{g.name} lands in {g.target.id}, {f.name} starts at {f.source.id}")
    if not (f.sealed and g.sealed):
        raise UnsealedMap("compose requires both maps sealed")
    kind = "homo" if f.kind == g.kind else "anti"
    images = {name: f._apply(img) for name, img in g.images.items()}
    return AlgebraMap(f"{f.name}*{g.name}", g.source, f.target, images, kind).seal()


def identity_map(p: Presentation) -> AlgebraMap:
    images = {n: p.alphabet.gen(n) for n in p.alphabet.names}
    return AlgebraMap(f"id_{p.id}", p, p, images, "homo").seal()


def is_identity(m: AlgebraMap) -> bool:
    if m.kind != "homo" or m.source.alphabet != m.target.alphabet:
        return False
    return all(m.images[n] == m.source.alphabet.gen(n)
               for n in m.source.alphabet.names)


# -- built-in maps ----------------------------------------------------------


@lru_cache(maxsize=None)
def zeta() -> AlgebraMap:
    """The embedding of the Racah presentation into the Bannai-Ito one.

    A, B, C land on quadratic images of X, Y, Z; the commutator generator
    D lands on a combination of commutators and the element L; the central
    generators land on central quadratics.
    """
    images = {
        "A": "1/16*(2*X - 3)*(2*X + 1)",
        "B": "1/16*(2*Y - 3)*(2*Y + 1)",
        "C": "1/16*(2*Z - 3)*(2*Z + 1)",
        "D": "1/32*([X,Y] + [Y,Z] + [Z,X] + L)",
        "α": "1/64*(2*ι - κ - μ - 3)*(κ - μ)",
        "β": "1/64*(2*ι - λ - κ - 3)*(λ - κ)",
    }
    return AlgebraMap("zeta", racah(), bannai_ito(), images, "homo").seal()


_SIGMA = {
    "racah": {"A": "B", "B": "A", "C": "C", "D": "D", "α": "-β", "β": "-α"},
    "bi": {"X": "Y", "Y": "X", "Z": "Z", "κ": "κ", "λ": "μ", "μ": "λ"},
}

_TAU = {
    "racah": {"A": "B", "B": "C", "C": "A", "D": "-D", "α": "β", "β": "γ"},
    "bi": {"X": "Y", "Y": "Z", "Z": "X", "κ": "λ", "λ": "μ", "μ": "κ"},
}


@lru_cache(maxsize=None)
def sigma(pid: str = "racah") -> AlgebraMap:
    """Order-two antiautomorphism swapping the first two main generators."""
    p = by_id(pid)
    if p.id not in _SIGMA:
        raise ValueError(f"sigma is defined on racah and bi, not {pid!r}")
    return AlgebraMap(f"sigma_{p.id}", p, p, _SIGMA[p.id], "anti").seal()


@lru_cache(maxsize=None)
def tau(pid: str = "racah") -> AlgebraMap:
    """Order-six antiautomorphism cycling the three main generators."""
    p = by_id(pid)
    if p.id not in _TAU:
        raise ValueError(f"tau is defined on racah and bi, not {pid!r}")
    return AlgebraMap(f"tau_{p.id}", p, p, _TAU[p.id], "anti").seal()


def d6_element(word: str, pid: str) -> AlgebraMap:
    """Compose a word over {sigma, tau} into one map; rightmost acts first.

    'sigma*tau' is sigma after tau; '' is the identity.
    """
    factors = [f for f in word.replace("*", " ").split() if f]
    out = identity_map(by_id(pid))
    for f in reversed(factors):
        if f in ("sigma", "σ"):
            out = compose(sigma(pid), out)
        elif f in ("tau", "τ"):
            out = compose(tau(pid), out)
        else:
            raise ValueError(f"unknown dihedral factor {f!r}")
    return out


def check_d6_relations(pid: str):
    """Verify sigma^2 = tau^6 = (sigma tau)^2 = identity on a presentation.

    Returns (ok, failures) with one entry per broken relation word.
    """
    failures = []
    for relation in ("sigma sigma", "tau tau tau tau tau tau",
                     "sigma tau sigma tau"):
        m = d6_element(relation, pid)
        if not is_identity(m):
            failures.append(relation)
    return (not failures, failures)


def check_equivariance(embedding: AlgebraMap, word: str):
    """Check the dihedral action commutes with an embedding, generator-wise.

    For g the dihedral word, tests g_target(f(u)) == f(g_source(u)) for
    every source generator u.  Returns (ok, failures).
    """
    g_src = d6_element(word, embedding.source.id)
    g_tgt = d6_element(word, embedding.target.id)
    failures = []
    for name in embedding.source.alphabet.names:
        u = embedding.source.alphabet.gen(name)
        left = g_tgt.apply(embedding.apply(u))
        right = embedding.apply(g_src.apply(u))
        if left != right:
            failures.append((word, name, left - right))
    return (not failures, failures)


# -- map definition files ----------------------------------------------------


def format_map(m: AlgebraMap) -> str:
    from .terms import format_element

    lines = [f"map {m.name} : {m.source.id} -> {m.target.id} {m.kind}"]
    for name in m.source.alphabet.names:
        lines.append(f"{name} := {format_element(m.images[name])}")
    return "\n".join(lines) + "\n"


def parse_map(text: str, seal: bool = True) -> AlgebraMap:
    """Parse the map-definition format: a 'map NAME : SRC -> TGT kind'
    header, then one 'gen := expression' line per source generator."""
    header = None
    assignments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("map "):
            header = (lineno, line)
        elif ":=" in line:
            assignments.append((lineno, line))
        else:
            raise ValueError(f"line {lineno}: expected 'gen := expression', got {raw!r}")
    if header is None:
        raise ValueError("missing 'map NAME : SRC -> TGT kind' header")
    lineno, line = header
    try:
        _, rest = line.split(" ", 1)
        name, rest = rest.split(":", 1)
        src_text, rest = rest.split("->", 1)
        tgt_text, kind = rest.split()
    except ValueError:
        raise ValueError(f"line {lineno}: malformed map header {line!r}") from None
    source, target = by_id(src_text.strip()), by_id(tgt_text.strip())
    images = {}
    for lineno, line in assignments:
        gen_name, expr = line.split(":=", 1)
        gen_name = gen_name.strip()
        gen_name = source.aliases.get(gen_name, gen_name)
        try:
            images[gen_name] = target.parse(expr)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    m = AlgebraMap(name.strip(), source, target, images, kind.strip())
    return m.seal() if seal else m
