from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superhopf import squsym
from superhopf.combinatorics import dc, dotted_compositions, sp, superpartitions
from superhopf.expr import (
    Basis,
    BinOp,
    ParseError,
    degree,
    evaluate_text,
    index_list,
    parse,
    render_pretty,
    terms_of,
    to_json,
)
from superhopf.kernel import LinComb

COMPS = [a for s in range(5) for m in range(s + 1) for a in dotted_compositions(s - m, m)]
SPS = [lam for s in range(5) for m in range(s + 1) for lam in superpartitions(s - m, m)]


def test_product_node():
    node = parse("M[3.,2] * M[4.,1]")
    assert node == BinOp("*", Basis("M", dc("3.,2")), Basis("M", dc("4.,1")))
    assert degree(node) == 12


def test_superpartition_literal():
    assert parse("m[1,0;]") == Basis("m", sp("1,0;"))
    assert parse("sb*[0;1]") == Basis("sb*", sp("0;1"))


def test_repeated_dots_allowed_only_for_compositions():
    assert parse("M[3.,3.]") == Basis("M", dc("3.,3."))
    with pytest.raises(ParseError):
        parse("m[3,3;]")


@pytest.mark.parametrize("text,pos", [("M[1", 0), ("M[1] +", 6), ("2 $ M[1]", 2), ("3/0", 2), ("(M[1]", 5)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


def test_scalars_and_precedence():
    v = evaluate_text("1/2 * M[1] + 3 * M[1] - M[2]")
    assert terms_of(v) == LinComb({dc("1"): Fraction(7, 2), dc("2"): -1})
    v = evaluate_text("-(M[1] + M[2]) * 2")
    assert terms_of(v) == LinComb({dc("1"): -2, dc("2"): -2})


def test_mixed_kinds_rejected():
    with pytest.raises(ParseError):
        evaluate_text("M[1] + H[1]")
    with pytest.raises(ParseError):
        evaluate_text("M[1] * m[;1]")


def test_mixed_sym_bases_go_to_m():
    v = evaluate_text("p[;2] + m[;1,1]")
    assert v.data.basis == "m"
    assert v.data.terms == LinComb({sp(";2"): 1, sp(";1,1"): 1})


def test_fundamental_evaluates_in_m():
    assert terms_of(evaluate_text("L[2]")) == squsym.fundamental_L(dc("2"))


def test_render_golden():
    assert render_pretty(squsym.antipode_M(dc("1.,3,2.")), "M") == "M[2.,3,1.] + M[5.,1.] + M[2.,4.]"
    assert render_pretty(LinComb(), "M") == "0"
    assert render_pretty(LinComb({dc("1"): Fraction(-3, 2)}), "M") == "-3/2*M[1]"


lincombs = st.dictionaries(st.sampled_from(COMPS), st.fractions(max_denominator=6).filter(bool), max_size=5)


@settings(max_examples=80)
@given(lincombs)
def test_render_parse_roundtrip(d):
    f = LinComb(d)
    text = render_pretty(f, "M")
    assert terms_of(evaluate_text(text)) == f


@settings(max_examples=60)
@given(st.dictionaries(st.sampled_from(SPS), st.integers(-5, 5).filter(bool), min_size=1, max_size=4))
def test_render_parse_roundtrip_sym(d):
    f = LinComb(d)
    assert evaluate_text(render_pretty(f, "p")).data.terms == f


def test_json_shape():
    out = to_json(LinComb({dc("3.,2"): -1, dc("1"): Fraction(1, 3)}), "M")
    assert out == {"basis": "M", "terms": [{"index": ["1"], "coeff": "1/3"},
                                           {"index": ["3.", "2"], "coeff": "-1"}]}
    assert index_list(sp("1,0;2")) == ["1,0", "2"]
