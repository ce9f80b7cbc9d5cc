import pytest

from hesitant import Universe, hfe, make_hfs, parse_expression
from hesitant.expressions import evaluate_on_hfs, variables


def _doc_sets():
    uni = Universe(["x"])
    return {
        "A": make_hfs(uni, {"x": ["0.1", "0.2", "0.3"]}),
        "B": make_hfs(uni, {"x": ["0.3", "0.4", "0.5"]}),
        "C": make_hfs(uni, {"x": ["0.3", "0.45", "0.5"]}),
    }


def _eval(text):
    sets = _doc_sets()
    return evaluate_on_hfs(parse_expression(text), sets.__getitem__)


def test_intersection_binds_tighter_than_union():
    assert _eval("A & B | C") == _eval("(A & B) | C")
    assert _eval("A | B & C") == _eval("A | (B & C)")


def test_unicode_and_ascii_operators_agree():
    assert _eval("A ∪ B") == _eval("A | B")
    assert _eval("A ∩ B") == _eval("A & B")
    assert _eval("Aᶜ") == _eval("A^c")


def test_complement_postfix_and_parentheses():
    lhs = _eval("(A | B)^c")
    sets = _doc_sets()
    assert lhs == ~(sets["A"] | sets["B"])
    assert _eval("A^c^c") == sets["A"]


def test_worked_value():
    result = _eval("(A | B) & C")
    assert result["x"] == hfe("0.5", "0.5", "0.45", "0.4", "0.3", "0.3", "0.3")


def test_variables_collected():
    assert variables(parse_expression("(A | B) & C^c")) == {"A", "B", "C"}


@pytest.mark.parametrize("bad", ["", "A |", "| A", "(A", "A @ B", "A B", "^c"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_expression(bad)


def test_statement_rendering_round_trips():
    node = parse_expression("(A & B) | C^c")
    assert parse_expression(str(node)) == node
