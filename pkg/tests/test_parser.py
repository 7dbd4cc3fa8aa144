import pytest
from sympy import QQ

from solvcoh.errors import JacobiError, ParseError
from solvcoh.lie import catalog_build, catalog_names
from solvcoh.parser import parse_algebra, print_algebra, read_algebra

G35 = """\
# g_{3.5}^0 + R3
dim 6;
[1,3] = -1*2;
[2,3] = 1*1;
"""


def test_parse_catalog_text(g35):
    assert parse_algebra(G35) == g35


def test_statements_may_share_a_line():
    g = parse_algebra("dim 3; [1,2] = 1*3;  # Heisenberg")
    assert g.bracket(0, 1) == {2: QQ(1)}


def test_params_and_fractions():
    g = parse_algebra("dim 2;\nparam a = -1/2;\n[1,2] = 3/4*1;\n")
    assert g.params == {"a": QQ(-1, 2)}
    assert g.bracket(0, 1) == {0: QQ(3, 4)}


def test_several_terms():
    g = parse_algebra("dim 3; [1,3] = 1*1 + -1*2; [2,3] = 1*1 - 2*2;")
    assert g.bracket(0, 2) == {0: QQ(1), 1: QQ(-1)}
    assert g.bracket(1, 2) == {0: QQ(1), 1: QQ(-2)}


def test_abelian():
    assert parse_algebra("dim 4;").is_abelian()


@pytest.mark.parametrize("name", catalog_names())
def test_print_parse_round_trip(name):
    g = catalog_build(name)
    again = parse_algebra(print_algebra(g))
    assert again == g
    assert again.params == g.params


@pytest.mark.parametrize("text, line, message", [
    ("dim 3;\n[1,2] = 1*3;\n[1,2] = 1*3;\n", 3, "given twice"),
    ("dim 3;\n[2,1] = 1*3;\n", 2, "1 <= i < j"),
    ("dim 3;\n[1,4] = 1*3;\n", 2, "1 <= i < j"),
    ("dim 3;\n[1,2] = 1*4;\n", 2, "outside 1..3"),
    ("[1,2] = 1*3;\ndim 3;\n", 1, "before"),
    ("dim 3;\ndim 3;\n", 2, "twice"),
    ("dim 3;\n[1,2] = 1*3\n", 2, "missing ';'"),
    ("dim 3;\nbracket 1 2;\n", 2, "unrecognised"),
    ("[1,2]", 1, "missing ';'"),
    ("# nothing\n", 1, "missing 'dim N;'"),
])
def test_parse_errors(text, line, message):
    with pytest.raises(ParseError) as info:
        parse_algebra(text)
    assert info.value.line == line
    assert message in str(info.value)


def test_parse_error_column():
    with pytest.raises(ParseError) as info:
        parse_algebra("dim 3;   [1,2] = x*3;")
    assert info.value.line == 1
    assert info.value.column > 9


def test_jacobi_error_names_the_triple():
    with pytest.raises(JacobiError) as info:
        parse_algebra("dim 3; [1,2] = 1*3; [1,3] = 1*1;")
    assert info.value.triple == (1, 2, 3)


def test_read_algebra(tmp_path, g35):
    path = tmp_path / "g35.alg"
    path.write_text(G35, encoding="utf-8")
    g = read_algebra(str(path))
    assert g == g35
    assert g.name == str(path)
