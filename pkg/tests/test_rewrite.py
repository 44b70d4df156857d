import random
from fractions import Fraction

import pytest

from fracterm.errors import NotSimple, OpenTerm, StrategyInapplicable
from fracterm.rewrite import (
    add_family,
    add_family_all,
    demote,
    flatten,
    simple_fracterm_eq,
    simplify,
)
from fracterm.semantics import BOTTOM, EvalConfig, eval_term, value_eq
from fracterm.terms import (
    Add,
    Div,
    Lit,
    Mul,
    classify,
    format_term,
    parse_term,
)

from gen import random_closed_term, random_flat_fracterm, random_simple_fracterm
from oracle import eval_exact, eval_exact_bot

CM = EvalConfig("common-meadow", "rat.pcs")


def _flat_or_division_free(t):
    f = classify(t)
    return f.flat or not f.is_fracterm


# ---------------------------------------------------------------------------
# Flattening goldens


def test_flatten_nested_quotient_golden():
    result, trace = flatten(parse_term("(1/2)/(3/4)"))
    assert result == Div(Mul(Lit("1"), Lit("4")), Mul(Lit("2"), Lit("3")))
    assert format_term(result) == "1*4/(2*3)"
    assert [s.rule for s in trace.steps] == ["div-collapse"]


def test_flatten_composite_denominator_golden():
    result, trace = flatten(parse_term("5/(1+3)"))
    assert result == Div(Lit("5"), Lit("4"))
    assert [s.rule for s in trace.steps] == ["numeral-eval"]


def test_flatten_sum_in_numerator_golden():
    result, _ = flatten(parse_term("(1+2/3)/5"))
    assert classify(result).flat
    assert value_eq(eval_term(result, CM), eval_term(parse_term("5/15"), CM))
    assert format_term(result) == "(1*3+2)/(3*5)"


def test_flatten_keeps_division_free_terms():
    t = parse_term("1+2*3")
    result, trace = flatten(t)
    assert result == t and trace.steps == ()


def test_flatten_erases_decorations():
    result, trace = flatten(parse_term("1/ft2"))
    assert result == Div(Lit("1"), Lit("2"))
    assert trace.steps[0].rule == "erase-decorations"


def test_flatten_bottom_guard():
    # x/(c/0) is bottom; the naive collapse would lose that.
    t = parse_term("1/(2/0)")
    result, trace = flatten(t)
    assert "div-collapse-bot" in [s.rule for s in trace.steps]
    assert eval_term(result, CM) == BOTTOM
    assert classify(result).flat


def test_flatten_open_term():
    with pytest.raises(OpenTerm):
        flatten(parse_term("x/2"))


# ---------------------------------------------------------------------------
# Flattening properties


def test_flatten_sound_and_complete_on_random_terms():
    rng = random.Random(2024)
    bottoms = 0
    for _ in range(700):
        t = random_closed_term(rng, 5)
        result, trace = flatten(t)
        assert _flat_or_division_free(result)
        assert value_eq(eval_term(result, CM), eval_term(t, CM))
        if eval_exact_bot(t) is None:
            bottoms += 1
        # trace validity: composes, replays, every step parses and differs
        assert trace.replay(t) == result
        for step in trace.steps:
            assert step.before != step.after
            assert parse_term(format_term(step.after)) == step.after
    assert bottoms > 20


# ---------------------------------------------------------------------------
# Simplification


def test_simplify_goldens():
    assert simplify(parse_term("4/6")) == parse_term("2/3")
    assert simplify(parse_term("2/4")) == parse_term("1/2")
    assert simplify(parse_term("-3/-9")) == parse_term("1/3")
    assert simplify(parse_term("4/2")) == parse_term("2/1")
    assert simplify(parse_term("0/7")) == parse_term("0/1")


def test_simplify_zero_denominator_class():
    assert simplify(parse_term("5/0")) == parse_term("1/0")
    assert simplify(parse_term("0/0")) == parse_term("0/0")


def test_simplify_accepts_flat_closed_fracterms():
    result, _ = flatten(parse_term("2/(4/5)"))
    assert simplify(result) == parse_term("5/2")


def test_simplify_rejects_non_flat():
    with pytest.raises(NotSimple):
        simplify(parse_term("1+2"))
    with pytest.raises(NotSimple):
        simplify(parse_term("(1/2)/3"))
    with pytest.raises(NotSimple):
        simplify(parse_term("x/2"))


def test_simplify_idempotent_and_canonical_small():
    span = range(-12, 13)
    for a in span:
        for b in span:
            t = Div(Lit(str(a)), Lit(str(b)))
            s = simplify(t)
            assert simplify(s) == s
            if b != 0:
                assert classify(s).simplified
                assert Fraction(s.left.value, s.right.value) == Fraction(a, b)


def test_demote():
    assert demote(parse_term("4/2")) == Lit("2")
    assert demote(parse_term("4/6")) == parse_term("2/3")


# ---------------------------------------------------------------------------
# Simple fracterm equivalence


def test_simple_eq_goldens():
    assert simple_fracterm_eq(parse_term("1/2"), parse_term("2/4"))
    assert simple_fracterm_eq(parse_term("1/0"), parse_term("5/0"))
    assert not simple_fracterm_eq(parse_term("1/2"), parse_term("1/3"))
    with pytest.raises(NotSimple):
        simple_fracterm_eq(parse_term("1/2"), parse_term("1+2"))


def test_simple_eq_matches_exact_rationals():
    rng = random.Random(8)
    for _ in range(500):
        t1 = random_simple_fracterm(rng, nonzero_den=True)
        t2 = random_simple_fracterm(rng, nonzero_den=True)
        expected = eval_exact(t1) == eval_exact(t2)
        assert simple_fracterm_eq(t1, t2) == expected


def test_simplify_constant_exactly_on_classes():
    rng = random.Random(9)
    for _ in range(400):
        t1 = random_simple_fracterm(rng)
        t2 = random_simple_fracterm(rng)
        same_class = simple_fracterm_eq(t1, t2)
        same_canonical = simplify(t1) == simplify(t2)
        if t1.right.value == 0 and t2.right.value == 0:
            continue  # the zero-denominator class has no simplified form
        assert same_class == same_canonical


# ---------------------------------------------------------------------------
# Addition family


def test_add_same_denominator_golden():
    got = add_family(parse_term("1/2"), parse_term("3/2"), "same-denom")
    assert got == Div(Add(Lit("1"), Lit("3")), Lit("2"))


def test_add_cross_golden():
    got = add_family(parse_term("1/2"), parse_term("3/2"), "cross")
    assert got == Div(
        Add(Mul(Lit("1"), Lit("2")), Mul(Lit("2"), Lit("3"))), Mul(Lit("2"), Lit("2"))
    )
    assert value_eq(eval_term(got, CM), eval_term(parse_term("2"), CM))


def test_add_numeral_golden():
    assert add_family(parse_term("1/2"), parse_term("3/2"), "numeral") == parse_term("8/4")


def test_add_trivial_golden():
    got = add_family(parse_term("1+1"), parse_term("1"), "trivial")
    assert got == parse_term("(1+1)+1")


def test_add_permissible_outputs_for_half_plus_three_halves():
    outputs = add_family_all(parse_term("1/2"), parse_term("3/2"))
    expected = eval_term(parse_term("2"), CM)
    for listed in ("4/2", "8/4", "(2+6)/4"):
        for result in outputs.values():
            assert value_eq(eval_term(parse_term(listed), CM), eval_term(result, CM))
    assert all(value_eq(eval_term(r, CM), expected) for r in outputs.values())


def test_same_denom_falls_through_to_cross():
    got = add_family(parse_term("1/2"), parse_term("1/3"), "same-denom")
    assert got == add_family(parse_term("1/2"), parse_term("1/3"), "cross")


def test_strategy_preconditions():
    with pytest.raises(StrategyInapplicable):
        add_family(parse_term("1/2"), parse_term("1"), "trivial")
    with pytest.raises(StrategyInapplicable):
        add_family(parse_term("(1/2)/3"), parse_term("1/2"), "cross")
    with pytest.raises(StrategyInapplicable):
        add_family(parse_term("5/(1+3)"), parse_term("1/2"), "numeral")
    with pytest.raises(StrategyInapplicable):
        add_family(parse_term("1/2"), parse_term("1/2"), "weird")


def test_addition_family_coherence_random():
    rng = random.Random(31)
    for _ in range(300):
        t1 = random_flat_fracterm(rng)
        t2 = random_flat_fracterm(rng)
        expected = eval_exact(t1) + eval_exact(t2)
        for result in add_family_all(t1, t2).values():
            assert eval_exact(result) == expected
