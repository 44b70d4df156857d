"""Acceptance suite: one test per criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
from fractions import Fraction
from importlib import resources

from fracterm.fractalk import check, parse_script
from fracterm.ratio import (
    NumOf,
    RatioNumber,
    rn_denom,
    rn_eval,
    rn_instance_eq,
    rn_label_eq,
    rn_num,
)
from fracterm.rewrite import add_family_all, flatten, simple_fracterm_eq, simplify
from fracterm.semantics import (
    BOTTOM,
    EvalConfig,
    NumberValue,
    eval_term,
    value_eq,
    value_num,
)
from fracterm.shapes import decode, get_shape, instance_eq, label_eq, normality_report
from fracterm.terms import Div, Lit, classify, format_term, num, parse_term

from gen import random_closed_term, random_flat_fracterm, random_simple_fracterm
from oracle import eval_exact

CM = EvalConfig("common-meadow", "rat.pcs")


def _report(number: int, name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({name}) failed"


def _corpus(name: str):
    text = (resources.files("fracterm") / "corpus" / f"{name}.ftk").read_text()
    return check(parse_script(text))


def test_criterion_1_paradox_corpus_fidelity():
    expected_blocks = {"A": 5, "B": 4, "Bprime": 4, "Bpp": 4, "C": 2, "Cprime": 2, "E": 2}
    expected_sound = ("D", "F")
    ok = True
    for name, step in expected_blocks.items():
        verdict = _corpus(name)
        ok = ok and verdict.overall == "paradox-blocked" and verdict.blocked_at == step
    for name in expected_sound:
        verdict = _corpus(name)
        ok = ok and verdict.overall == "sound" and all(s.valid for s in verdict.steps)
    _report(1, "paradox corpus fidelity", ok)


def test_criterion_2_tri_valued_numerator():
    t = parse_term("2/(4/5)")
    term_level = num(t) == Lit("2")

    pair = rn_eval(NumOf(t))
    ratio_level = rn_label_eq(pair, RatioNumber(10, 1))

    value_level = value_num(eval_term(t, CM)) == BOTTOM

    rewritten = simplify(flatten(t)[0])
    ssft_level = num(rewritten) == Lit("5")

    _report(2, "tri-valued numerator", term_level and ratio_level and value_level and ssft_level)


def test_criterion_3_flattening_soundness():
    rng = random.Random(12345)
    mismatches = 0
    nonflat = 0
    bottoms = 0
    for _ in range(1000):
        t = random_closed_term(rng, 5)
        result, _ = flatten(t)
        flags = classify(result)
        if flags.is_fracterm and not flags.flat:
            nonflat += 1
        a = eval_term(t, CM)
        b = eval_term(result, CM)
        if a == BOTTOM or b == BOTTOM:
            bottoms += 1
            if a != b:
                mismatches += 1
        elif not value_eq(a, b):
            mismatches += 1
    _report(3, "flattening soundness", mismatches == 0 and nonflat == 0 and bottoms > 50)


def test_criterion_4_oracle_equivalence():
    rng = random.Random(12345)
    configs = [
        EvalConfig(policy, shape)
        for policy in ("partial", "suppes-ono", "common-meadow")
        for shape in ("rat.pcs", "rat.ssft")
    ]
    mismatches = 0
    checked = 0
    for _ in range(1000):
        t = random_closed_term(rng, 5)
        try:
            expected = eval_exact(t)
        except ZeroDivisionError:
            continue
        checked += 1
        for cfg in configs:
            value = eval_term(t, cfg)
            if not isinstance(value, NumberValue) or decode(value.instance) != expected:
                mismatches += 1
    _report(4, "oracle equivalence", mismatches == 0 and checked > 200)


def test_criterion_5_normality_matrix():
    ok = True
    for shape_id in (
        "nat.sdn",
        "nat.dedekind",
        "nat.vn",
        "nat.zermelo",
        "int.signed",
        "rat.pcs",
        "rat.ssft",
    ):
        ok = ok and normality_report(shape_id, 50).normal
    for shape_id in ("nat.dec", "rat.rns"):
        report = normality_report(shape_id, 50)
        witness_ok = (
            not report.normal
            and report.witness is not None
            and label_eq(*report.witness)
            and not instance_eq(*report.witness)
        )
        ok = ok and witness_ok
    dec = get_shape("nat.dec")
    ok = ok and label_eq(dec.make("007"), dec.make("7")) and not instance_eq(
        dec.make("007"), dec.make("7")
    )
    rns = get_shape("rat.rns")
    ok = ok and label_eq(rns.make((1, 2)), rns.make((2, 4))) and not instance_eq(
        rns.make((1, 2)), rns.make((2, 4))
    )
    _report(5, "normality matrix", ok)


def test_criterion_6_ratio_number_anomalies():
    x, y = RatioNumber(1, 2), RatioNumber(2, 4)
    witness = rn_label_eq(x, y) and not rn_instance_eq(rn_num(x), rn_num(y))

    rng = random.Random(99)
    instance_congruence = True
    joint = True
    for _ in range(500):
        a = RatioNumber(rng.randint(-30, 30), rng.randint(-30, 30))
        b = RatioNumber(a.a, a.b)
        instance_congruence = instance_congruence and rn_instance_eq(
            rn_num(a), rn_num(b)
        ) and rn_instance_eq(rn_denom(a), rn_denom(b))
    for _ in range(500):
        a = RatioNumber(rng.randint(-30, 30), rng.randint(-30, 30))
        b = RatioNumber(rng.randint(-30, 30), rng.randint(-30, 30))
        if rn_instance_eq(rn_num(a), rn_num(b)) and rn_instance_eq(rn_denom(a), rn_denom(b)):
            joint = joint and rn_label_eq(a, b)
    _report(6, "ratio-number anomalies", witness and instance_congruence and joint)


def test_criterion_7_ssft_canonicity():
    goldens = (
        simplify(parse_term("4/6")) == parse_term("2/3")
        and simplify(parse_term("2/4")) == parse_term("1/2")
        and simplify(parse_term("-3/-9")) == parse_term("1/3")
    )
    ok = goldens
    by_value = {}
    by_canonical = {}
    for a in range(-30, 31):
        for b in range(-30, 31):
            t = Div(Lit(str(a)), Lit(str(b)))
            s = simplify(t)
            ok = ok and simplify(s) == s  # idempotent
            if b == 0:
                continue  # the zero-denominator class has no simplified form
            ok = ok and classify(s).simplified
            value = Fraction(a, b)
            canonical = format_term(s)
            if by_value.setdefault(value, canonical) != canonical:
                ok = False  # not constant on a class
            if by_canonical.setdefault(canonical, value) != value:
                ok = False  # one canonical form for two classes
    # spot-check agreement with the pairwise equivalence
    rng = random.Random(4)
    for _ in range(300):
        t1 = random_simple_fracterm(rng, -30, 30, nonzero_den=True)
        t2 = random_simple_fracterm(rng, -30, 30, nonzero_den=True)
        ok = ok and (simplify(t1) == simplify(t2)) == simple_fracterm_eq(t1, t2)
    _report(7, "simplified-form canonicity", ok)


def test_criterion_8_addition_family_coherence():
    rng = random.Random(777)
    ok = True
    for _ in range(500):
        t1 = random_flat_fracterm(rng)
        t2 = random_flat_fracterm(rng)
        expected = eval_exact(t1) + eval_exact(t2)
        results = add_family_all(t1, t2)
        ok = ok and len(results) >= 1
        for result in results.values():
            ok = ok and eval_exact(result) == expected
    listed = [parse_term(s) for s in ("4/2", "8/4", "(2+6)/4")]
    strategy_outputs = add_family_all(parse_term("1/2"), parse_term("3/2")).values()
    for permissible in listed:
        for output in strategy_outputs:
            ok = ok and value_eq(eval_term(permissible, CM), eval_term(output, CM))
    _report(8, "addition-family coherence", ok)


def test_criterion_9_division_by_zero_goldens():
    one_over_zero = parse_term("1/0")
    cm = eval_term(one_over_zero, CM) == BOTTOM
    so = eval_term(one_over_zero, EvalConfig("suppes-ono", "rat.pcs"))
    so_ok = isinstance(so, NumberValue) and decode(so.instance) == 0
    try:
        eval_term(one_over_zero, EvalConfig("partial", "rat.pcs"))
        partial_ok = False
    except Exception:
        partial_ok = True
    propagate = eval_term(parse_term("1/0 + 1"), CM) == BOTTOM
    zero_over_zero = eval_term(parse_term("0/0"), CM) == BOTTOM
    _report(9, "division-by-zero goldens", cm and so_ok and partial_ok and propagate and zero_over_zero)
