import pytest
from hypothesis import given
from hypothesis import strategies as st

from losemilat import Equation, Term, parse_constraint, parse_term, render
from losemilat.errors import ParseError


def test_parse_term_examples():
    assert parse_term("x1x2x3") == Term({1, 2, 3})
    assert parse_term("x2 * x2 * x1") == Term({1, 2})
    assert parse_term("x10x2") == Term({10, 2})
    assert render(parse_term("x10x2")) == "x2*x10"
    assert parse_term("  x1 x2 ") == Term({1, 2})


@pytest.mark.parametrize(
    "text",
    ["", "   ", "x", "x0", "x1*", "*x1", "x1**x2", "y1", "x1x", "x01", "x1 = x2", "x1-x2"],
)
def test_parse_term_errors(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_term("x1*x0")
    assert info.value.position == 3


def test_parse_constraint_examples():
    assert parse_constraint("x1x2 = x1x3") == Equation(Term({1, 2}), Term({1, 3}))
    assert parse_constraint("x1 <= x2") == Equation(Term({1, 2}), Term({1}))
    assert parse_constraint("x1 = x1") == Equation(Term({1}), Term({1}))
    assert parse_constraint("x2x3<=x1") == Equation(Term({1, 2, 3}), Term({2, 3}))


def test_side_order_is_preserved():
    a = parse_constraint("x1 = x2x3")
    b = parse_constraint("x2x3 = x1")
    assert a != b
    assert a.reversed() == b


@pytest.mark.parametrize(
    "text", ["x1 x2", "x1 = ", "= x2", "x1 <= x2 <= x3", "x1 = x2 = x3", "x1 == x2", "x1 < x2", "x1 =< x2"]
)
def test_parse_constraint_errors(text):
    with pytest.raises(ParseError):
        parse_constraint(text)


def test_render_examples():
    assert render(Term({3, 1})) == "x1*x3"
    assert render(Equation(Term({1, 2}), Term({1, 3}))) == "x1*x2 = x1*x3"
    assert render(parse_constraint("x2x1=x3")) == "x1*x2 = x3"
    with pytest.raises(TypeError):
        render("x1")


terms = st.frozensets(st.integers(1, 6), min_size=1).map(Term)


@given(terms)
def test_term_round_trip(t):
    assert parse_term(render(t)) == t


@given(terms, terms)
def test_equation_round_trip(t, s):
    eq = Equation(t, s)
    assert parse_constraint(render(eq)) == eq


@given(st.lists(st.integers(1, 30), min_size=1), st.sampled_from(["", "*", " * ", " "]))
def test_any_spelling_normalises(vars, sep):
    text = sep.join(f"x{v}" for v in vars)
    assert parse_term(text) == Term(vars)
    assert render(parse_term(text)) == "*".join(f"x{v}" for v in sorted(set(vars)))
