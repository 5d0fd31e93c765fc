"""File reports for the injectivity harness.

write_rank_report runs the bounded-weight rank check and writes four
files into a directory: the full result as JSON, the per-monomial check
table as CSV, and two PNG figures (the support pattern of the image
matrix with predicted leading entries marked, and the per-weight count
profile of the checked monomials).  matplotlib is imported lazily so the
rest of the package works without a plotting backend.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .casimir import RankReport, source_weights, zeta_rank_check
from .filtration import weighted_monomials
from .morphisms import zeta
from .presentations import racah
from .terms import Element, grlex_key

GENERATOR_ORDER = ("X", "Y", "Z", "κ", "λ", "μ")


def _images(max_weight: int):
    p = racah()
    z = zeta()
    monomials = weighted_monomials(p.alphabet, source_weights(), max_weight)
    return [z.apply(Element(p.alphabet, {w: 1})) for w in monomials]


def _lead_word(lead_exponents) -> tuple:
    word = ()
    for rank, e in enumerate(lead_exponents):
        word += (rank,) * e
    return word


def write_rank_report(max_weight: int = 40, out_dir=".") -> dict:
    """Write JSON, CSV and figures for one rank check; returns the paths."""
    report = zeta_rank_check(max_weight)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": out / "rank_report.json",
        "csv": out / "rank_checks.csv",
        "support": out / "image_support.png",
        "profile": out / "weight_profile.png",
    }
    paths["json"].write_text(json.dumps(report.to_json_obj(), indent=2) + "\n",
                             encoding="utf-8")
    _write_csv(report, paths["csv"])
    _render_support(report, paths["support"])
    _render_profile(report, paths["profile"])
    return {k: str(v) for k, v in paths.items()}


def _write_csv(report: RankReport, path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["i", "j", "k", "l", "r", "s", "weight"]
                        + [f"lead_{n}" for n in GENERATOR_ORDER]
                        + ["expected", "computed", "match"])
        for c in report.checks:
            writer.writerow(list(c.exponents) + [c.weight]
                            + list(c.lead_exponents)
                            + [str(c.expected), str(c.computed), c.match])


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _render_support(report: RankReport, path: Path) -> None:
    plt = _pyplot()
    images = _images(report.max_weight)
    columns = sorted({w for img in images for w in img.words()}, key=grlex_key)
    index = {w: i for i, w in enumerate(columns)}
    xs, ys, lead_xs, lead_ys = [], [], [], []
    for row, (img, check) in enumerate(zip(images, report.checks)):
        lead = index.get(_lead_word(check.lead_exponents))
        for w in img.words():
            xs.append(index[w])
            ys.append(row)
        if lead is not None:
            lead_xs.append(lead)
            lead_ys.append(row)
    fig, ax = plt.subplots(figsize=(9, 5))
    ax.scatter(xs, ys, s=3, color="#32608f", label="nonzero coefficient")
    ax.scatter(lead_xs, lead_ys, s=12, color="#c23b22", marker="x",
               label="predicted leading word")
    ax.set_xlabel("target basis word (graded-lex position)")
    ax.set_ylabel("source monomial (by weight)")
    ax.set_title(f"Image support up to weight {report.max_weight}: "
                 f"rank {report.dimension_image}/{report.dimension_source}")
    ax.invert_yaxis()
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_profile(report: RankReport, path: Path) -> None:
    plt = _pyplot()
    counts = {}
    matches = {}
    for c in report.checks:
        counts[c.weight] = counts.get(c.weight, 0) + 1
        if c.match:
            matches[c.weight] = matches.get(c.weight, 0) + 1
    weights = sorted(counts)
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(weights, [counts[w] for w in weights], width=1.6,
           color="#9db8d2", label="monomials at weight")
    ax.bar(weights, [matches.get(w, 0) for w in weights], width=1.0,
           color="#32608f", label="leading coefficient verified")
    ax.set_xlabel("weighted degree of the source monomial image")
    ax.set_ylabel("count")
    ax.set_title(f"Checked monomials by weight (max {report.max_weight})")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
