import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from src.config import OUTPUT_DIR
from src.groebner.coinvariants import CoinvariantStats, HsopBounds
from src.invariants.construction import GeneratorSet
from src.invariants.zero_sum import SchmidSweepResult
from src.models import CoinvariantSummary, OrderVerification, Report
from src.polynomials.monomials import render_monomial
from src.polynomials.poly2 import Poly2

logger = logging.getLogger(__name__)

MAX_LISTED_FAILURES = 20

def to_json(document: Any) -> str:
    if isinstance(document, BaseModel):
        document = document.model_dump(mode="json")
    return json.dumps(document, indent=2)

def parse_report(text: str) -> Report:
    return Report.model_validate_json(text)

def write_output(text: str, path: Optional[str]) -> None:
    """Print text, or save it to path. A bare filename is placed under OUTPUT_DIR."""
    if path is None:
        print(text)
        return
    directory = os.path.dirname(path)
    if not directory:
        directory = OUTPUT_DIR
        path = os.path.join(directory, path)
    os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        f.write(text + "\n")
    logger.info(f"Report saved to: {path}")

def generator_counts(full: GeneratorSet, pruned: GeneratorSet, hilbert: Sequence[Poly2]) -> Dict[str, int]:
    counts = dict(full.counts())
    counts["universal_basis"] = len(full)
    counts["pruned"] = len(pruned)
    counts["hilbert_ideal_generators"] = len(hilbert)
    return counts

def basis_document(names: Sequence[str], full: GeneratorSet, pruned: GeneratorSet,
                   hilbert: Sequence[Poly2]) -> Dict[str, Any]:
    return {
        "hilbert_ideal_generators": [f.render(names) for f in hilbert],
        "universal_basis": full.to_records(names),
        "pruned": pruned.to_records(names),
    }

def generator_table(gs: GeneratorSet, names: Sequence[str]) -> pd.DataFrame:
    return pd.DataFrame(gs.to_records(names), columns=["family", "polynomial"])

def render_basis_text(names: Sequence[str], full: GeneratorSet, pruned: GeneratorSet,
                      hilbert: Sequence[Poly2]) -> str:
    sections = [
        "Hilbert ideal generators:",
        "\n".join(f"  {f.render(names)}" for f in hilbert),
        "",
        "Universal Groebner basis (pruned):",
        generator_table(pruned, names).to_string(index=False),
        "",
        "Universal Groebner basis (full):",
        generator_table(full, names).to_string(index=False),
    ]
    return "\n".join(sections)

def coinvariant_summary(stats: CoinvariantStats, names: Sequence[str]) -> CoinvariantSummary:
    return CoinvariantSummary(
        dimension=stats.dimension,
        top_degree=stats.top_degree,
        standard_monomials=[render_monomial(m, names) for m in stats.standard_monomials],
        lt_generators=[render_monomial(m, names) for m in stats.lt_generators],
    )

def standard_monomial_table(stats: CoinvariantStats, names: Sequence[str]) -> pd.DataFrame:
    rows = [{"degree": d, "count": len(ms), "monomials": ", ".join(render_monomial(m, names) for m in ms)}
            for d, ms in sorted(stats.by_degree().items())]
    return pd.DataFrame(rows, columns=["degree", "count", "monomials"])

def bounds_table(bounds: HsopBounds, stats: CoinvariantStats) -> pd.DataFrame:
    df = pd.DataFrame({
        "quantity": ["top_degree", "dimension"],
        "bound": [bounds.top_bound, bounds.dim_bound],
        "computed": [stats.top_degree, stats.dimension],
    })
    df["within"] = df["computed"] <= df["bound"]
    df["attained"] = df["bound"] == df["computed"]
    return df

def coinvariant_document(stats: CoinvariantStats, names: Sequence[str],
                         bounds: Optional[HsopBounds] = None) -> Dict[str, Any]:
    document = coinvariant_summary(stats, names).model_dump()
    if bounds is not None:
        document["bounds"] = {
            "top_bound": bounds.top_bound,
            "dim_bound": bounds.dim_bound,
            "top_within": stats.top_degree <= bounds.top_bound,
            "dim_within": stats.dimension <= bounds.dim_bound,
            "top_attained": bounds.top_bound == stats.top_degree,
            "dim_attained": bounds.dim_bound == stats.dimension,
        }
    return document

def render_coinvariants_text(stats: CoinvariantStats, names: Sequence[str],
                             bounds: Optional[HsopBounds] = None) -> str:
    lines = [
        f"Lead-term generators: {', '.join(render_monomial(m, names) for m in stats.lt_generators)}",
        f"Dimension: {stats.dimension}",
        f"Top degree: {stats.top_degree}",
        "",
        standard_monomial_table(stats, names).to_string(index=False),
    ]
    if bounds is not None:
        lines += ["", "Bounds:", bounds_table(bounds, stats).to_string(index=False)]
    return "\n".join(lines)

def verification_table(verifications: List[OrderVerification]) -> pd.DataFrame:
    rows = []
    for v in verifications:
        row = {"order": v.order, "gb_size": v.gb_size, "dimension": v.dimension, "top_degree": v.top_degree}
        row.update(v.checks.model_dump())
        rows.append(row)
    return pd.DataFrame(rows)

def render_report_text(report: Report) -> str:
    lines = [
        f"Representation: {report.config.rep.label()}",
        f"Field: GF(2^{report.field.k}), modulus {report.field.modulus_poly:#b}, zeta {report.field.zeta}",
        f"Generators: {report.generator_counts}",
        "",
        verification_table(report.verifications).to_string(index=False),
        "",
    ]
    lines += [f"{f.name}: expected {f.expected}, computed {f.computed}" for f in report.formulas]
    lines += [f"{b.name}: bound {b.bound}, computed {b.computed}" + ("" if b.holds else " (VIOLATED)")
              for b in report.bounds]
    lines.append(f"Overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)

def render_sweep_text(result: SchmidSweepResult) -> str:
    mode = "exhaustive" if result.exhaustive else "sampled"
    if result.passed:
        return (f"p={result.p} ({mode}): all {result.pairs_checked} pairs completable "
                f"over {result.sequences_checked} sequences")
    lines = [f"p={result.p} ({mode}): {len(result.failures)} of {result.pairs_checked} pairs have no completion"]
    lines += [f"  seq={list(seq)} pair=({k1 + 1},{k2 + 1})" for seq, k1, k2 in result.failures[:MAX_LISTED_FAILURES]]
    return "\n".join(lines)
