import pytest
from hypothesis import given, settings, strategies as st

from closurelab.dsl import (
    Assert,
    BinOp,
    Call,
    Define,
    ListExpr,
    Name,
    Neg,
    Num,
    ParseError,
    Pow,
    ReportStmt,
    format_expr,
    format_script,
    parse_expression,
    parse_script,
)

R2_SCRIPT = """\
ring R = quotient(poly(Q, [x,y,z]), ideal(x*y, x*z));
ideal I = ideal(R, x^3, y, z);
assert colength(I) == 3;
report check_regular(R, I, assume_unmixed=true);
"""


def test_four_statement_ast():
    script = parse_script(R2_SCRIPT)
    assert len(script) == 4
    kinds = [type(s) for s in script.statements]
    assert kinds == [Define, Define, Assert, ReportStmt]
    assert script.statements[0].kind == "ring"
    assert script.statements[3].expr.kwargs == (("assume_unmixed", Name("true")),)
    assert script.statements[1].loc.line == 2 and script.statements[1].loc.col == 1


def test_missing_operator_points_at_the_gap():
    with pytest.raises(ParseError) as info:
        parse_script("ring R = poly(Q, [x, y]);\nideal I = ideal(R, x^3 y);")
    assert (info.value.line, info.value.col) == (2, 24)
    assert "expected ',' or ')'" in str(info.value)


def test_use_before_definition():
    with pytest.raises(ParseError, match="undefined name 'I'") as info:
        parse_script("report mult(I);")
    assert (info.value.line, info.value.col) == (1, 13)


def test_arity_and_unknown_functions():
    with pytest.raises(ParseError, match="colength takes 1 positional"):
        parse_script("ring R = poly(Q, [x]);\nreport colength(maximal(R), maximal(R));")
    with pytest.raises(ParseError, match="unknown function 'frobnicate'"):
        parse_script("report frobnicate(1);")
    with pytest.raises(ParseError, match="no keyword argument 'speed'"):
        parse_script("ring R = poly(Q, [x]);\nreport mult(maximal(R), speed=3);")


def test_misc_syntax_errors():
    for bad, where in [("ring R = poly(Q, [x]) ", (1, 23)), ("report 1 +;", (1, 11)),
                       ("ideal = 3;", (1, 1)), ("report x^y;", (1, 10)), ('report "open;', (1, 8))]:
        with pytest.raises(ParseError) as info:
            parse_script(bad)
        assert (info.value.line, info.value.col) == where, bad


def test_comments_and_precedence():
    e = parse_expression("-a + b*c^2 - (d - e) # trailing")
    assert e == BinOp("-", BinOp("+", Neg(Name("a")), BinOp("*", Name("b"), Pow(Name("c"), 2))),
                      BinOp("-", Name("d"), Name("e")))


def test_pretty_print_round_trip_on_bundled_scripts():
    from closurelab.cli import GOLDEN_SCRIPTS, bundled_script

    for name, _ in GOLDEN_SCRIPTS:
        script = parse_script(bundled_script(name))
        assert parse_script(format_script(script)) == script


@pytest.mark.parametrize("e", [
    Pow(Pow(Name("a"), 2), 3),
    Pow(Neg(Name("a")), 2),
    Neg(Neg(Name("a"))),
    Neg(Pow(Name("a"), 2)),
    BinOp("-", Name("a"), BinOp("-", Name("b"), Name("c"))),
])
def test_round_trip_edge_cases(e):
    assert parse_expression(format_expr(e)) == e


names = st.sampled_from(["a", "b", "x1"])
leaves = st.one_of(st.integers(0, 20).map(Num), names.map(Name))


def _extend(children):
    return st.one_of(
        st.tuples(st.sampled_from("+-*/"), children, children).map(lambda t: BinOp(*t)),
        children.map(Neg),
        st.tuples(children, st.integers(0, 4)).map(lambda t: Pow(*t)),
        st.lists(children, max_size=3).map(lambda xs: ListExpr(tuple(xs))),
        st.tuples(st.sampled_from(["ideal", "mult"]), st.lists(children, max_size=3)).map(
            lambda t: Call(t[0], tuple(t[1]), ())),
    )


exprs = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=500)
@given(exprs)
def test_expression_round_trip(e):
    assert parse_expression(format_expr(e)) == e


@settings(max_examples=50)
@given(exprs)
def test_formatting_is_a_fixed_point(e):
    text = format_expr(e)
    assert format_expr(parse_expression(text)) == text
