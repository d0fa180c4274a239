import json

import pytest

from src.field_arith import build_field
from src.groebner.coinvariants import coinvariant_stats, hsop_bounds
from src.groebner.verification import verify_rep
from src.invariants.construction import hilbert_ideal_generators, prune_redundant, universal_basis
from src.invariants.zero_sum import schmid_sweep
from src.models import FormulaComparison, Report, RunConfig
from src.polynomials.orders import MonomialOrder, sample_orders
from src.reporting import (basis_document, bounds_table, coinvariant_document, coinvariant_summary,
                           generator_counts, parse_report, render_report_text, render_sweep_text,
                           standard_monomial_table, to_json, write_output)

@pytest.fixture
def config():
    return RunConfig(rep={"p": 3, "r": 1}, sampled_orders=4)

@pytest.fixture
def report(config):
    rep = config.rep
    full = universal_basis(rep)
    orders = sample_orders(rep, config.sampled_orders, config.seed)
    stats = coinvariant_stats(rep, orders[0])
    return Report.assemble(config=config, field=build_field(rep.p),
                           generator_counts=generator_counts(full, prune_redundant(full), hilbert_ideal_generators(rep)),
                           verifications=verify_rep(rep, orders),
                           coinvariants=coinvariant_summary(stats, rep.variable_names),
                           formulas=[FormulaComparison(name="top_degree", expected=3, computed=stats.top_degree)])

def test_report_round_trip(report):
    text = to_json(report)
    assert parse_report(text) == report
    assert report.passed
    assert json.loads(text)["generator_counts"]["pruned"] == 4

def test_report_fails_on_formula_mismatch(report):
    broken = Report.assemble(config=report.config, field=report.field, generator_counts=report.generator_counts,
                             verifications=report.verifications, coinvariants=report.coinvariants,
                             formulas=[FormulaComparison(name="top_degree", expected=4, computed=3)])
    assert not broken.passed

def test_render_report_text(report):
    text = render_report_text(report)
    assert "lex_swapped" in text
    assert "Overall: PASS" in text

def test_basis_document():
    rep = RunConfig(rep={"p": 3, "r": 1}).rep
    full = universal_basis(rep)
    document = basis_document(rep.variable_names, full, prune_redundant(full), hilbert_ideal_generators(rep))
    assert {r["polynomial"] for r in document["pruned"]} == {"x1*y1", "x1^3 + y1^3", "x1^4", "y1^4"}
    assert set(document["hilbert_ideal_generators"]) == {"x1*y1", "x1^3 + y1^3"}

def test_coinvariant_tables():
    rep = RunConfig(rep={"p": 3, "r": 1}).rep
    stats = coinvariant_stats(rep, MonomialOrder.lex(2))
    table = standard_monomial_table(stats, rep.variable_names)
    assert table["count"].tolist() == [1, 2, 2, 1]
    bounds = bounds_table(hsop_bounds([2, 3]), stats)
    assert bounds["attained"].all()
    assert bounds["within"].all()
    document = coinvariant_document(stats, rep.variable_names, hsop_bounds([2, 3]))
    assert document["bounds"] == {"top_bound": 3, "dim_bound": 6, "top_within": True, "dim_within": True,
                                  "top_attained": True, "dim_attained": True}
    assert "bounds" not in coinvariant_document(stats, rep.variable_names)

def test_render_sweep_text():
    assert render_sweep_text(schmid_sweep(3)).startswith("p=3 (exhaustive): all")
    assert "have no completion" in render_sweep_text(schmid_sweep(4))

def test_write_output(tmp_path, capsys):
    path = tmp_path / "out" / "report.json"
    write_output('{"a": 1}', str(path))
    assert path.read_text() == '{"a": 1}\n'
    write_output("hello", None)
    assert capsys.readouterr().out == "hello\n"

def test_bare_filename_goes_to_output_dir(tmp_path, monkeypatch):
    monkeypatch.setattr("src.reporting.OUTPUT_DIR", str(tmp_path / "reports"))
    write_output('{"a": 1}', "report.json")
    assert (tmp_path / "reports" / "report.json").read_text() == '{"a": 1}\n'
