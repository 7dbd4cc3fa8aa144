import pytest

from solvcoh.commands import TABLE1, format_tbar
from sympy import QQ


def _euler(betti):
    b1, b2, b3 = betti
    return 2 - 2 * b1 + 2 * b2 - b3


def test_row_count():
    assert len(TABLE1) == 34
    assert {row.catalog for row in TABLE1} == {"g6.8", "g6.10", "g6.11", "g5.14+R", "g5.17+R", "g5.18+R",
                                               "g3.5+R3"}


@pytest.mark.parametrize("row", TABLE1, ids=lambda r: "{}@{}".format(r.group, r.tbar))
def test_expected_values_satisfy_duality(row):
    # a closed orientable six-manifold has Euler characteristic 2 - 2b1 + 2b2 - b3 = 0
    assert _euler(row.algebra) == 0
    assert _euler(row.quotient) == 0


def test_printed_values_that_were_corrected_violate_duality():
    printed = [row.printed for row in TABLE1 if row.printed]
    assert printed
    assert any(_euler(p["quotient"]) != 0 for p in printed if "quotient" in p)


@pytest.mark.parametrize("q, text", [(2, "2pi"), (1, "pi"), (QQ(1, 2), "pi/2"), (QQ(1, 3), "pi/3")])
def test_format_tbar(q, text):
    assert format_tbar(q) == text


def test_betti_numbers_reproduce(run_cli):
    status, document = run_cli("table1", "--no-flags")
    rows = document["results"]["rows"]
    assert len(rows) == 34
    assert [r["group"] for r in rows if r["status"] == "mismatch"] == []
    assert status == 0
    corrected = {(r["group"], r["tbar"]) for r in rows if r["status"] == "reproduced (corrected)"}
    assert ("G5.18^0xR", "2pi") in corrected
    assert ("G6.11^{p=0}", "2pi") in corrected


def test_surrogates_are_marked(run_cli):
    status, document = run_cli("table1", "--no-flags", "--rows", "g6.8")
    for row in document["results"]["rows"]:
        assert "b, c" in row["surrogate"]
        assert row["identification"] == "g4.5 + R2"


def test_flags_for_g35(run_cli):
    status, document = run_cli("table1", "--rows", "g3.5+R3")
    assert status == 0
    for row in document["results"]["rows"]:
        assert row["status"] == "reproduced"
        assert row["flags"]["F"]["computed"] is True
        assert row["flags"]["IS"]["computed"] is True
        assert row["flags"]["HL"]["computed"] is True


def test_table1_tsv(run_cli):
    status, text = run_cli("table1", "--no-flags", "--rows", "g5.18+R", "--format", "tsv")
    lines = text.splitlines()
    assert lines[0].split("\t")[:2] == ["group", "tbar"]
    assert lines[1].split("\t")[:8] == ["G5.18^0xR", "2pi", "2", "3", "4", "4", "9", "12"]


@pytest.mark.parametrize("catalog", ["g5.18+R", "g5.17+R"])
def test_rows_beyond_the_model_cap_are_reported(run_cli, catalog):
    status, document = run_cli("table1", "--rows", catalog)
    rows = document["results"]["rows"]
    assert rows and all(r["catalog"] == catalog for r in rows)
    for row in rows:
        assert row["flags"]["F"]["status"] != "mismatch"


def test_full_table_with_flags(run_cli):
    status, document = run_cli("table1")
    assert status == 0
    rows = document["results"]["rows"]
    assert len(rows) == 34
    assert document["results"]["summary"]["mismatches"] == 0
    assert all("F" in row["flags"] for row in rows)
