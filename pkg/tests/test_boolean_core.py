import itertools

import pytest
from hypothesis import given, settings, strategies as st

from adw.boolean_core import (
    NULL,
    BooleanFunction,
    ProductTerm,
    SopExpression,
    SpecSyntaxError,
    cover_agrees,
    demorgan_dual,
    dual_rail_encode,
    equivalent,
    factor_single_kernel,
    format_function_spec,
    function_from_spec,
    is_dsop,
    minimize_cover,
    parse_expression,
    parse_function_spec,
    sop_to_dsop,
    terms_disjoint,
)

from conftest import brute_minterms


def table_of(expr, names):
    """Minterm set of ``expr``, MSB-first, by direct evaluation."""
    out = set()
    for m, bits in enumerate(itertools.product((0, 1), repeat=len(names))):
        if expr.evaluate(dict(zip(names, bits))):
            out.add(m)
    return out


@pytest.fixture
def F(F_minterms):
    return function_from_spec(4, F_minterms)


def test_F_oracle_matches_listed_minterms(F_minterms):
    # a'c + b'c + c'd written out by hand
    hand = brute_minterms(lambda a, b, c, d: (not a and c) or (not b and c) or (not c and d), 4)
    assert hand == F_minterms


def test_product_term_conflict_is_null():
    assert ProductTerm.of([("a", True), ("a", False)]) is NULL
    t = ProductTerm.of([("b", True), ("a", False)])
    assert t.literals == (("a", False), ("b", True))
    assert t.to_text() == "a'b"
    assert t.to_text(rails=True, parens=True) == "a(0)b(1)"


def test_function_from_spec_rejects_bad_input():
    with pytest.raises(ValueError):
        function_from_spec(2, [4])
    with pytest.raises(ValueError):
        function_from_spec(2, [1], [1])


def test_spec_round_trip(F):
    assert parse_function_spec(format_function_spec(F)) == F


@pytest.mark.parametrize("text,line", [
    ("vars 2\non 1 x\n", 2),
    ("names a b\non 1\n", 1),
    ("vars 2\n\nfrob 1\n", 3),
    ("vars 2\non 1\non 2\n", 3),
])
def test_spec_errors_carry_line_numbers(text, line):
    with pytest.raises(SpecSyntaxError) as err:
        parse_function_spec(text)
    assert err.value.lineno == line


def test_spec_comments_and_dc():
    f = parse_function_spec("# majority-ish\nvars 3\nnames x y z\non 3 5 6 7\ndc 0  # unused\n")
    assert f.var_names == ("x", "y", "z")
    assert f.dc_set == {0}
    assert f.off_set == {1, 2, 4}


def test_minimize_F(F):
    on = minimize_cover(F, "on")
    off = minimize_cover(F, "off")
    assert len(on) == 3 and len(off) == 2
    assert table_of(on, F.var_names) == set(F.on_set)
    assert table_of(off, F.var_names) == set(F.off_set)
    assert equivalent(on, parse_expression("a'c + b'c + c'd"))
    assert equivalent(off, parse_expression("abc + c'd'"))


def test_minimize_constants():
    zero = function_from_spec(3, [])
    assert len(minimize_cover(zero, "on")) == 0
    assert str(minimize_cover(zero, "on")) == "0"
    tauto = minimize_cover(zero, "off")
    assert len(tauto) == 1 and tauto.terms[0].is_tautology()


def test_minimize_uses_dont_cares():
    f = function_from_spec(2, [1], [3])
    assert str(minimize_cover(f, "on")) == "b"


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.integers(0, 2 ** n - 1)), st.sets(st.integers(0, 2 ** n - 1)))))
def test_minimized_covers_respect_care_set(args):
    n, on, dc = args
    f = function_from_spec(n, on, dc - on)
    for pol in ("on", "off"):
        cover = minimize_cover(f, pol)
        got = table_of(cover, f.var_names)
        target = f.on_set if pol == "on" else f.off_set
        assert got & f.care_set == set(target)
        assert cover_agrees(cover, f, pol)


def test_factor_kernel(F):
    fac = factor_single_kernel(minimize_cover(F, "on"))
    assert fac.literal_count() == 5
    assert str(fac) == "(a' + b')c + c'd"
    assert equivalent(fac.expand(), parse_expression("a'c + b'c + c'd"))


def test_factor_leaves_unfactorable_cover_alone(F):
    off = minimize_cover(F, "off")
    assert factor_single_kernel(off) == off


def test_dual_rail_encodings(F):
    enc = dual_rail_encode(F, "onoff", factor=True)
    assert enc.to_text(parens=True).splitlines() == [
        "T = [a(0) + b(0)]c(1) + c(0)d(1)",
        "F = a(1)b(1)c(1) + c(0)d(0)",
    ]
    assert enc.codeword_conflicts(F) == []
    drcl = dual_rail_encode(F, "drcl")
    assert drcl.false_rail.to_text(rails=True, parens=True) == "(a(1) + c(0))(b(1) + c(0))(c(1) + d(0))"
    assert drcl.codeword_conflicts(F) == []


def test_demorgan_dual_is_complement():
    e = parse_expression("ab + c'")
    pos = demorgan_dual(e)
    names = ("a", "b", "c")
    for bits in itertools.product((0, 1), repeat=3):
        env = dict(zip(names, bits))
        assert pos.evaluate(env) == 1 - e.evaluate(env)


@pytest.mark.parametrize("text", ["c(a+b)+dc'", "(a' + b')c + c'd", "[a(0)+b(0)]c(1)+c(0)d(1)", "a + 1", "0"])
def test_parse_preserves_meaning(text):
    e = parse_expression(text)
    assert equivalent(e, parse_expression(e.to_text()))


def test_parse_rail_spellings():
    assert parse_expression("a(0)b(1)") == parse_expression("a0b1", rails=True)
    assert parse_expression("a'b") == parse_expression("a0b1", rails=True)
    with pytest.raises(ValueError):
        parse_expression("a + $")
    with pytest.raises(ValueError):
        parse_expression("(a + b")


@pytest.mark.parametrize("text,ok,witness", [
    ("[a(0)+b(0)]c(1)+c(0)d(1)", False, {"a(0)c(1)", "b(0)c(1)"}),
    ("a(0)b(1)c(1)+b(0)c(1)+c(0)d(1)", True, None),
    ("a(0)c(1)+a(1)b(0)c(1)+c(0)d(1)", True, None),
    ("c(a+b)+dc'", False, {"ac", "bc"}),
    ("ab'c+bc+dc'", True, None),
    ("ac+a'bc+dc'", True, None),
])
def test_dsop_verdicts(text, ok, witness):
    v = is_dsop(parse_expression(text))
    assert bool(v) is ok
    if witness:
        parens = "(" in text and text[text.index("(") + 1] in "01"
        assert {t.to_text(parens, parens) for t in v.witness} == witness
    else:
        assert v.witness is None


def test_terms_disjoint():
    a = parse_expression("ac").terms[0]
    b = parse_expression("a'bc").terms[0]
    assert terms_disjoint(a, b)
    assert not terms_disjoint(a, parse_expression("bc").terms[0])


def test_sop_to_dsop_examples():
    assert str(sop_to_dsop(parse_expression("a+b"))) == "a + a'b"
    out = sop_to_dsop(parse_expression("c(a+b)+dc'"))
    assert is_dsop(out)
    assert equivalent(out, parse_expression("ac + a'bc + c'd"))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.dictionaries(st.sampled_from("abcde"), st.booleans(), min_size=1, max_size=4),
                min_size=1, max_size=6))
def test_sop_to_dsop_property(cubes):
    expr = SopExpression.of(ProductTerm.of(c) for c in cubes)
    out = sop_to_dsop(expr)
    assert is_dsop(out)
    assert equivalent(out, expr)


def test_equivalent_universe_check():
    with pytest.raises(ValueError):
        equivalent(parse_expression("a"), parse_expression("b"), ["a"])
    assert equivalent(parse_expression("a + a'b"), parse_expression("a + b"))
    assert not equivalent(parse_expression("ab"), parse_expression("a"))


def test_boolean_function_accessors(F):
    assert isinstance(F, BooleanFunction)
    assert F.value(13) == 1 and F.value(14) == 0
    assert not F.is_constant()
