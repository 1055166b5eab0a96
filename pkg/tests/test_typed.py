import random
from itertools import product

import pytest

from bnkit.algebra import CIRCLE, DOT, AlgebraElement, ParseError, dpow, mul, sword
from bnkit.exact import Bigrading, field
from bnkit.typed import (
    Arrow,
    Generator,
    TypeDStructure,
    build_qn,
    identify_rational,
    match_rational,
    parse_typed,
    serialize_typed,
    shift,
    single,
    theta_of_rational,
    validate,
)


def gens_of(t):
    """Generators listed along the arrow chain, as (idem, h, q)."""
    succ = {a.src: a.dst for a in t.arrows}
    has_pred = {a.dst for a in t.arrows}
    x = next(g.id for g in t.generators if g.id not in has_pred)
    out = []
    while True:
        g = t[x]
        out.append((g.idem.value, g.grading.h, g.grading.q))
        if x not in succ:
            return out
        x = succ[x]


def labels_of(t):
    succ = {a.src: a for a in t.arrows}
    has_pred = {a.dst for a in t.arrows}
    x = next(g.id for g in t.generators if g.id not in has_pred)
    out = []
    while x in succ:
        out.append(succ[x].label.to_text())
        x = succ[x].dst
    return out


# -- Q_n ----------------------------------------------------------------------------


def test_q0():
    t = build_qn(0)
    assert gens_of(t) == [(".", 0, 0)]
    assert t.arrows == ()


def test_q1():
    t = build_qn(1)
    assert gens_of(t) == [(".", 0, 1), ("o", 1, 2)]
    assert labels_of(t) == ["1*S^1."]


def test_q2():
    t = build_qn(2)
    assert gens_of(t) == [(".", 0, 2), ("o", 1, 3), ("o", 2, 5)]
    assert labels_of(t) == ["1*S^1.", "1*D^1o"]


def test_q4_labels_and_validity():
    t = build_qn(4)
    assert labels_of(t) == ["1*S^1.", "1*D^1o", "1*S^2o", "1*D^1o"]
    assert validate(t) == []


@pytest.mark.parametrize("n", range(1, 12))
def test_positive_endpoint(n):
    assert gens_of(build_qn(n))[-1] == ("o", n, 3 * n - 1)


def test_q_minus_2():
    t = build_qn(-2)
    assert labels_of(t) == ["1*D^1o", "1*S^1o"]
    assert gens_of(t) == [("o", -2, -5), ("o", -1, -3), (".", 0, -2)]


@pytest.mark.parametrize("n", range(-11, 0))
def test_negative_leftmost_grading(n):
    # anchored at •(0, n) and propagated backwards
    assert gens_of(build_qn(n))[0] == ("o", n, 3 * n + 1)
    assert gens_of(build_qn(n))[-1] == (".", 0, n)


@pytest.mark.parametrize("n", [-2, -4, -6])
def test_literal_leftmost_prescript_is_inconsistent(n):
    t = build_qn(n)
    first = gens_of(t)[0]
    gens = tuple(
        Generator(g.id, g.idem, Bigrading(first[1], 3 * n - 1)) if g.grading.h == n else g
        for g in t.generators
    )
    assert validate(TypeDStructure(t.field, gens, t.arrows))


@pytest.mark.parametrize("c", [0, 2, 3, 5])
def test_qn_valid(c):
    for n in range(-64, 65):
        assert validate(build_qn(n, c)) == [], n


def test_grading_violation_detected():
    t = build_qn(2)
    gens = tuple(
        Generator(g.id, g.idem, Bigrading(2, 4)) if g.grading == Bigrading(2, 5) else g for g in t.generators
    )
    report = validate(TypeDStructure(t.field, gens, t.arrows))
    assert len(report) == 1 and "q=5" in report[0] and "q=4" in report[0]


def test_single_generator_valid():
    assert validate(single(CIRCLE, 3, 7)) == []


def test_idempotent_mismatch_detected():
    f = field(2)
    t = TypeDStructure(
        f,
        (Generator("a", DOT, Bigrading(0, 0)), Generator("b", DOT, Bigrading(1, 1))),
        (Arrow("a", "b", AlgebraElement.of(f, sword(DOT))),),
    )
    assert any("runs" in r for r in validate(t))


def test_delta_squared_detected():
    f = field(3)
    s = lambda v: AlgebraElement.of(f, sword(v))  # noqa: E731
    t = TypeDStructure(
        f,
        (
            Generator("a", DOT, Bigrading(0, 0)),
            Generator("b", CIRCLE, Bigrading(1, 1)),
            Generator("c", DOT, Bigrading(2, 2)),
        ),
        (Arrow("a", "b", s(DOT)), Arrow("b", "c", s(CIRCLE))),
    )
    assert any("delta^2" in r for r in validate(t))


def test_zigzag_label_products_vanish():
    # exhaustive over the label alphabet: consecutive products in a Q_n chain die
    for c in (0, 2, 3, 5):
        f = field(c)
        alphabet = {
            "S.": AlgebraElement.of(f, sword(DOT)),
            "So": AlgebraElement.of(f, sword(CIRCLE)),
            "Do": AlgebraElement.of(f, dpow(CIRCLE)),
            "SSo": AlgebraElement.of(f, sword(CIRCLE, 2)),
        }
        allowed = {("S.", "Do"), ("Do", "SSo"), ("SSo", "Do"), ("Do", "So")}
        for first, second in product(alphabet, repeat=2):
            prod = mul(alphabet[second], alphabet[first])
            if (first, second) in allowed:
                assert not prod, (first, second)


def test_duplicate_ids_rejected():
    f = field(2)
    with pytest.raises(ValueError):
        TypeDStructure(f, (Generator("a", DOT, Bigrading(0, 0)), Generator("a", DOT, Bigrading(0, 0))))


# -- shifts, recognition, theta ---------------------------------------------------------


def test_shift_identity_and_composition():
    t = build_qn(3)
    assert shift(t, 0, 0) == t
    assert shift(shift(t, 1, 2), -3, 5) == shift(t, -2, 7)
    assert validate(shift(t, 4, -9)) == []


def test_identify_examples():
    assert identify_rational(shift(build_qn(4), 2, -3)) == (4, 2, -3)
    assert identify_rational(build_qn(0)) == (0, 0, 0)


def test_identify_rejects_d_label():
    f = field(2)
    t = TypeDStructure(
        f,
        (Generator("a", DOT, Bigrading(0, 1)), Generator("b", DOT, Bigrading(1, 3))),
        (Arrow("a", "b", AlgebraElement.of(f, dpow(DOT))),),
    )
    assert validate(t) == []
    assert identify_rational(t) is None


def test_identify_rejects_wrong_label_in_chain():
    t = build_qn(3)
    f = t.field
    arrows = tuple(
        Arrow(a.src, a.dst, AlgebraElement.of(f, dpow(CIRCLE))) if a.label.to_text() == "1*S^2o" else a
        for a in t.arrows
    )
    gens = tuple(t.generators)
    m, why = match_rational(TypeDStructure(f, gens, arrows))
    assert m is None and "label" in why


def test_identify_round_trip_random_shifts():
    rng = random.Random(5)
    for n in range(-64, 65):
        for _ in range(50 if abs(n) <= 20 else 3):
            a, b = rng.randint(-30, 30), rng.randint(-30, 30)
            t = shift(build_qn(n, rng.choice([0, 2, 3, 5])), a, b)
            assert identify_rational(t) == (n, a, b)
            assert theta_of_rational(t) == n


def test_identify_ignores_generator_names():
    t = build_qn(-3)
    ren = {g.id: f"x{k}" for k, g in enumerate(reversed(t.generators))}
    t2 = TypeDStructure(
        t.field,
        tuple(Generator(ren[g.id], g.idem, g.grading) for g in t.generators),
        tuple(Arrow(ren[a.src], ren[a.dst], a.label) for a in t.arrows),
    )
    assert identify_rational(t2) == (-3, 0, 0)


def test_theta_examples():
    assert theta_of_rational(build_qn(0)) == 0
    assert theta_of_rational(build_qn(-2)) == -2
    assert theta_of_rational(shift(build_qn(6), 1, 1)) == 6


def test_theta_rejects_non_rational():
    with pytest.raises(ValueError, match="rational"):
        theta_of_rational(single(CIRCLE))


# -- file format ------------------------------------------------------------------------


def test_serialize_q0():
    assert serialize_typed(build_qn(0)) == "typed v1\nchar 2\ngen g0 idem=. h=0 q=0\n"


def test_serialize_q2():
    assert serialize_typed(build_qn(2, 3)) == (
        "typed v1\n"
        "char 3\n"
        "gen g0 idem=. h=0 q=2\n"
        "gen g1 idem=o h=1 q=3\n"
        "gen g2 idem=o h=2 q=5\n"
        "arrow g0 -> g1 label=1*S^1.\n"
        "arrow g1 -> g2 label=1*D^1o\n"
    )


@pytest.mark.parametrize("c", [0, 2, 3, 5])
def test_round_trip(c):
    for n in range(-50, 51):
        t = build_qn(n, c)
        text = serialize_typed(t)
        back = parse_typed(text)
        assert back == t
        assert serialize_typed(back) == text


def test_canonical_order_on_parse():
    text = (
        "typed v1\n# comment\nchar 2\n"
        "gen b idem=o h=1 q=3   # trailing comment\n"
        "gen a idem=. h=0 q=2\n"
        "arrow a -> b label=S^1.\n"
    )
    t = parse_typed(text)
    assert [g.id for g in t.generators] == ["a", "b"]
    assert serialize_typed(t).splitlines()[2] == "gen a idem=. h=0 q=2"


def _parse_error(text):
    with pytest.raises(ParseError) as e:
        parse_typed(text)
    return e.value


def test_undeclared_generator_location():
    e = _parse_error("typed v1\nchar 2\ngen a idem=. h=0 q=1\narrow a -> zz label=S^1.\n")
    assert (e.line, e.col) == (4, 12)
    assert "zz" in str(e)


def test_bad_header():
    e = _parse_error("typed v2\n")
    assert (e.line, e.col) == (1, 1)


def test_expected_token_in_gen_line():
    e = _parse_error("typed v1\nchar 2\ngen a idem=x h=0 q=1\n")
    assert (e.line, e.col) == (3, 7)
    assert "idem" in str(e)


def test_label_error_column():
    e = _parse_error("typed v1\nchar 2\ngen a idem=. h=0 q=1\ngen b idem=o h=1 q=2\narrow a -> b label=S^1. + X\n")
    assert (e.line, e.col) == (5, 27)


def test_bad_char():
    e = _parse_error("typed v1\nchar 6\n")
    assert e.line == 2


def test_missing_char():
    e = _parse_error("typed v1\ngen a idem=. h=0 q=1\n")
    assert e.line == 2
