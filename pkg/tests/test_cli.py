import json
import logging

import nbformat
import pytest

from solvcoh import __version__, setup
from solvcoh.application import Application
from solvcoh.cli import build_parser
from solvcoh.commands.base import SCHEMA, parse_params
from solvcoh.config import apply_options
from solvcoh.errors import PreconditionError
from sympy import QQ


@pytest.fixture
def app():
    app = Application()
    setup(app)
    return app


def test_setup_registers_everything(app):
    for name in ("betti", "mostow", "modify", "lattice-check", "invariants", "model", "formality",
                 "umodule", "symplectic", "lefschetz", "table1"):
        assert name in app.commands
    assert set(app.writers) == {"json", "tsv", "ipynb"}
    assert app.config["solvcoh_model_cap"] == 7


def test_duplicate_command(app):
    with pytest.raises(ValueError):
        app.add_command(app.commands["betti"])


def test_options(app):
    warnings = []
    app.config["solvcoh_options"] = "no_massey, quiet,bogus"
    apply_options(app.config, warnings.append)
    assert app.config["solvcoh_massey_max_degree"] == 0
    assert app.config["solvcoh_quiet"] is True
    assert warnings == ["Unrecognised option bogus, ignoring."]
    assert "solvcoh_quiet" in app.config.overridden()


def test_configure_rejects_unknown_values(app):
    with pytest.raises(ValueError):
        app.configure(solvcoh_colour="red")


def test_parse_params():
    assert parse_params("p=1, r=1/2") == {"p": QQ(1), "r": QQ(1, 2)}
    assert parse_params(None) == {}
    with pytest.raises(PreconditionError):
        parse_params("p")
    with pytest.raises(PreconditionError):
        parse_params("p=0.5")


def test_parser_knows_the_commands(app):
    args = build_parser(app).parse_args(["invariants", "--catalog", "g5.18+R", "--tbar", "1/3"])
    assert args.command == "invariants"
    assert args.tbar == "1/3"


def test_betti(run_cli):
    status, document = run_cli("betti", "--catalog", "g5.18+R")
    assert status == 0
    assert document["schema"] == SCHEMA
    assert document["command"] == "betti"
    assert document["inputs"] == {"catalog": "g5.18+R", "params": {}}
    assert document["results"]["betti"] == [1, 2, 3, 4, 3, 2, 1]
    assert document["results"]["poincare_duality"] is True
    assert document["provenance"] == {"tool": "solvcoh", "version": __version__, "seed": 0, "config": {}}


def test_betti_from_file(run_cli, tmp_path):
    path = tmp_path / "h3.alg"
    path.write_text("dim 3;\n[1,2] = 1*3;\n", encoding="utf-8")
    status, document = run_cli("betti", "--algebra", str(path))
    assert status == 0
    assert document["results"]["betti"] == [1, 2, 2, 1]
    assert document["inputs"]["text"] == "dim 3;\n[1,2] = 1*3;\n"


def test_invariants(run_cli):
    status, document = run_cli("invariants", "--catalog", "g5.18+R", "--tbar", "1/3")
    assert status == 0
    results = document["results"]
    assert results["betti"][1:4] == [2, 3, 4]
    assert results["action_order"] == 6
    assert results["mostow"] is False


def test_output_is_deterministic(run_cli):
    first = run_cli("invariants", "--catalog", "g3.5+R3", "--tbar", "1/2")
    second = run_cli("invariants", "--catalog", "g3.5+R3", "--tbar", "1/2")
    assert first == second


def test_mostow(run_cli):
    status, document = run_cli("mostow", "--catalog", "g6.10", "--tbar", "2")
    assert status == 0
    assert document["results"]["holds"] is False
    assert document["inputs"]["tbar"] == "2"


def test_modify(run_cli):
    status, document = run_cli("modify", "--catalog", "g3.5+R3")
    assert document["results"]["brackets"] == []
    assert document["results"]["idempotent"] is True
    assert document["results"]["betti"] == [1, 6, 15, 20, 15, 6, 1]
    assert document["results"]["identification"] == "R6"


def test_lattice_system(run_cli):
    status, document = run_cli("lattice-check", "--system", "5,6")
    assert status == 0
    assert document["results"]["satisfiable"] is True
    assert document["results"]["intervals"]


def test_lattice_check_out_of_scope(run_cli):
    status, document = run_cli("lattice-check", "--catalog", "g6.8", "--tbar", "1/2")
    assert status == 0
    assert document["results"]["integrality"]["verdict"] == "out-of-scope"


def test_lattice_check_symbolic_pass(run_cli):
    status, document = run_cli("lattice-check", "--catalog", "g6.8", "--tbar", "2")
    assert status == 0
    assert document["results"]["eigenvalues"]["verdict"] == "necessary-pass"
    integrality = document["results"]["integrality"]
    assert integrality["verdict"] == "necessary-pass"
    assert integrality["method"] == "symbolic"


def test_lattice_check_symbolic_rejects_rational_frequency(run_cli):
    status, document = run_cli("lattice-check", "--catalog", "g6.11", "--params", "p=0,s=1/2", "--tbar", "4")
    assert status == 0
    integrality = document["results"]["integrality"]
    assert integrality["verdict"] == "necessary-fail"
    assert integrality["method"] == "symbolic"
    assert "Ne(a*s, 0)" in integrality["reason"]


def test_lattice_check_with_exponential_roots(run_cli):
    status, document = run_cli("lattice-check", "--catalog", "g6.8", "--params", "p=0", "--tbar", "2",
                               "--exponential-roots", "x**3-6*x**2+5*x-1")
    assert status == 0
    integrality = document["results"]["integrality"]
    assert integrality["verdict"] == "verified-by-witness"
    assert integrality["method"] == "exact"
    assert integrality["char_poly"] == "x**5 - 8*x**4 + 18*x**3 - 17*x**2 + 7*x - 1"


def test_lattice_check_exponential_roots_must_match(run_cli):
    status, document = run_cli("lattice-check", "--catalog", "g6.8", "--tbar", "2",
                               "--exponential-roots", "x**2-3*x+1")
    assert status != 0


def test_lattice_check_verified(run_cli):
    status, document = run_cli("lattice-check", "--catalog", "g3.5+R3", "--tbar", "1/2")
    assert document["results"]["integrality"]["verdict"] == "verified-by-witness"


def test_umodule(run_cli):
    status, document = run_cli("umodule", "--catalog", "g6.8", "--params", "p=0", "--tbar", "2")
    assert status == 0
    assert document["results"]["dimensions"][1] == 2


def test_formality(run_cli):
    status, document = run_cli("formality", "--catalog", "g3.5+R3", "--tbar", "2")
    assert status == 0
    assert document["results"]["verdict"] == "formal"
    assert document["results"]["method"] == "psi-map"


def test_model_with_references(run_cli):
    status, document = run_cli("model", "--catalog", "g3.5+R3", "--tbar", "1/3")
    assert status == 0
    results = document["results"]
    assert results["verified"] is True
    assert results["counts"] == {"1": 4, "2": 1, "3": 1}
    assert all(r["agrees"] for r in results["references"])


def test_no_model_option(run_cli):
    status, document = run_cli("model", "--catalog", "g3.5+R3", "--options", "no_model")
    assert status == 0
    assert document["results"] == {"skipped": "no_model"}


def test_symplectic(run_cli):
    status, document = run_cli("symplectic", "--catalog", "g6.10")
    assert status == 0
    assert document["results"]["exists"] is True
    status, document = run_cli("symplectic", "--catalog", "g6.8")
    assert document["results"]["exists"] is False


def test_unknown_catalog(run_cli, caplog):
    status, _ = run_cli("betti", "--catalog", "g9.9")
    assert status == 2
    assert "UnknownAlgebraError" in caplog.text


def test_missing_tbar(run_cli):
    status, _ = run_cli("invariants", "--catalog", "g5.18+R")
    assert status == 2


def test_constraint_violation(run_cli, caplog):
    status, _ = run_cli("betti", "--catalog", "g6.8", "--params", "b=1,c=3")
    assert status == 2
    assert "ConstraintError" in caplog.text


def test_parse_error_exit(run_cli, tmp_path, caplog):
    path = tmp_path / "bad.alg"
    path.write_text("dim 3;\n[1,2] = 1*3\n", encoding="utf-8")
    status, _ = run_cli("betti", "--algebra", str(path))
    assert status == 2
    assert "line 2" in caplog.text


def test_unrecognised_option_warns(run_cli, caplog):
    with caplog.at_level(logging.WARNING):
        status, document = run_cli("betti", "--catalog", "g3.5+R3", "--options", "colour")
    assert status == 0
    assert "Unrecognised option colour" in caplog.text


def test_tsv_output(run_cli):
    status, text = run_cli("betti", "--catalog", "g3.5+R3", "--format", "tsv")
    assert status == 0
    assert "betti\t1 4 7 8 7 4 1" in text.splitlines()


def test_notebook_output(run_cli, tmp_path):
    path = tmp_path / "out" / "betti.ipynb"
    status, _ = run_cli("betti", "--catalog", "g5.18+R", "--format", "ipynb", "--output", str(path))
    assert status == 0
    notebook = nbformat.read(str(path), as_version=4)
    nbformat.validate(notebook)
    assert notebook.cells[-1].cell_type == "code"
    assert "g5.18+R" in notebook.cells[-1].source


def test_json_file_output(run_cli, tmp_path):
    path = tmp_path / "betti.json"
    status, out = run_cli("betti", "--catalog", "g5.18+R", "-o", str(path))
    assert status == 0
    assert out == ""
    with open(str(path), encoding="utf-8") as f:
        assert json.load(f)["results"]["betti"] == [1, 2, 3, 4, 3, 2, 1]


def test_provenance_records_overrides(run_cli):
    status, document = run_cli("betti", "--catalog", "g5.18+R", "--cap", "5", "--options", "no_massey")
    assert status == 0
    assert document["provenance"]["config"] == {"solvcoh_model_cap": 5, "solvcoh_massey_max_degree": 0,
                                                "solvcoh_options": "no_massey"}
