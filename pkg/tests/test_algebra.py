import random
import time

import pytest

from bnkit.algebra import (
    CIRCLE,
    DOT,
    AlgebraElement,
    BasisPath,
    ParseError,
    atoms,
    atom_path,
    basis_paths,
    decompose_kH,
    dpow,
    expand_kH,
    grading,
    h_element,
    idem,
    mul,
    parse_element,
    sword,
)
from bnkit.exact import Bigrading, Poly, field

F2, F3 = field(2), field(3)


def el(f, path, c=1):
    return AlgebraElement.of(f, path, c)


# -- independent word model ----------------------------------------------------
# A path is a start vertex plus a string of letters; S toggles the vertex,
# D keeps it.  Any S next to a D is zero.


def _word(p: BasisPath) -> tuple:
    return (p.start, "" if p.kind == "1" else p.kind * p.n)


def _word_end(start, letters):
    v = start
    for ch in letters:
        if ch == "S":
            v = v.other()
    return v


def _word_product(a: BasisPath, b: BasisPath):
    """b first, then a, computed on raw letter strings."""
    (sa, la), (sb, lb) = _word(a), _word(b)
    if _word_end(sb, lb) is not sa:
        return None
    letters = lb + la
    if "SD" in letters or "DS" in letters:
        return None
    if not letters:
        return idem(sb)
    return BasisPath(letters[0], sb, len(letters))


def test_mul_matches_word_model():
    paths = basis_paths(6)
    for a in paths:
        for b in paths:
            got = mul(el(F3, a), el(F3, b))
            want = _word_product(a, b)
            assert got == (el(F3, want) if want else AlgebraElement.zero(F3)), (a, b)


# -- examples --------------------------------------------------------------------


def test_s_then_d_vanishes():
    assert not mul(el(F2, dpow(DOT)), el(F2, sword(DOT)))


def test_idempotent_action():
    s = el(F2, sword(DOT))
    assert mul(el(F2, idem(CIRCLE)), s) == s
    assert not mul(s, el(F2, idem(CIRCLE)))


def test_s_words_concatenate():
    assert mul(el(F2, sword(CIRCLE)), el(F2, sword(DOT))) == el(F2, sword(DOT, 2))


def test_h_times_s():
    for c in (0, 2, 3):
        f = field(c)
        assert mul(h_element(f), el(f, sword(DOT))) == el(f, sword(DOT, 3))


def test_gradings():
    assert grading(idem(DOT)) == Bigrading(0, 0)
    assert grading(dpow(CIRCLE, 3)) == Bigrading(0, -6)
    assert grading(sword(DOT, 5)) == Bigrading(0, -5)


def test_h_element_over_f2():
    h = h_element(F2)
    assert h.to_text() == "1*D^1. + 1*S^2. + 1*D^1o + 1*S^2o"
    assert all(grading(p) == Bigrading(0, -2) for p, _ in h)


def test_s_word_end_vertex():
    assert sword(DOT, 3).end is CIRCLE
    assert sword(DOT, 4).end is DOT


def test_bad_paths_rejected():
    with pytest.raises(ValueError):
        BasisPath("D", DOT, 0)
    with pytest.raises(ValueError):
        BasisPath("X", DOT, 1)


# -- decomposition --------------------------------------------------------------


def test_decompose_ss():
    d = decompose_kH(el(F2, sword(DOT, 2)), DOT, DOT)
    assert d["1"] == Poly.h(F2) and d["D"] == Poly.const(F2, 1)


def test_decompose_sss():
    d = decompose_kH(el(F3, sword(DOT, 3)), DOT, CIRCLE)
    assert d.coeffs == {"S": Poly.h(F3)}


@pytest.mark.parametrize("c", [0, 3, 5])
def test_decompose_d_power(c):
    f = field(c)
    minus_h = Poly(f, (0, -1))
    for k in range(1, 10):
        d = decompose_kH(el(f, dpow(CIRCLE, k)), CIRCLE, CIRCLE)
        assert d["D"] == minus_h ** (k - 1)
        assert d["1"] == 0


@pytest.mark.parametrize("c", [0, 2, 3])
def test_ss_power_formula(c):
    f = field(c)
    for m in range(1, 21):
        d = decompose_kH(el(f, sword(DOT, 2 * m)), DOT, DOT)
        assert d["1"] == Poly.monomial(f, 1, m)
        assert d["D"] == Poly.monomial(f, 1, m - 1)


def test_ss_power_via_binomial_route():
    # (H·1 + D)^m expanded with the algebra product agrees with S^(2m)
    f = field(3)
    base = el(f, sword(DOT, 2))
    acc = el(f, idem(DOT))
    for m in range(1, 12):
        acc = mul(base, acc)
        assert acc == el(f, sword(DOT, 2 * m))


def test_decompose_rejects_mixed():
    x = el(F2, sword(DOT)) + el(F2, idem(DOT))
    with pytest.raises(ValueError):
        decompose_kH(x, DOT, DOT)


def _random_element(f, rng, src, dst, max_len=12):
    paths = [p for p in basis_paths(max_len) if p.start is src and p.end is dst]
    terms = [(rng.choice(paths), rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))]
    return AlgebraElement(f, terms)


@pytest.mark.parametrize("c", [0, 2, 3, 5])
def test_decompose_expand_round_trip(c):
    f = field(c)
    rng = random.Random(77 + c)
    for _ in range(200):
        src, dst = rng.choice([DOT, CIRCLE]), rng.choice([DOT, CIRCLE])
        x = _random_element(f, rng, src, dst)
        d = decompose_kH(x, src, dst)
        assert set(d.coeffs) == set(atoms(src, dst))
        assert expand_kH(d) == x
        assert d.expand() == x


# -- algebra properties -------------------------------------------------------------


def test_associativity_all_triples():
    paths = basis_paths(8)
    f = F3
    els = {p: el(f, p) for p in paths}
    for a in paths:
        for b in paths:
            ab = mul(els[a], els[b])
            for c in paths:
                assert mul(ab, els[c]) == mul(els[a], mul(els[b], els[c]))


def test_grading_additive():
    paths = basis_paths(8)
    for a in paths:
        for b in paths:
            p = mul(el(F2, a), el(F2, b))
            for path, _ in p:
                assert grading(path).q == grading(a).q + grading(b).q


@pytest.mark.parametrize("c", [0, 2, 3, 5])
def test_h_central(c):
    f = field(c)
    h = h_element(f)
    for p in basis_paths(12):
        x = el(f, p)
        assert mul(h, x) == mul(x, h), p


def test_adjacent_d_and_s_vanish():
    for k in range(1, 6):
        for v in (DOT, CIRCLE):
            d = el(F3, dpow(v, k))
            assert not mul(d, el(F3, sword(v.other(), 1)))
            assert not mul(el(F3, sword(v, 1)), d)


def test_atom_paths():
    assert atom_path("S", CIRCLE) == sword(CIRCLE, 1)
    assert atoms(DOT, DOT) == ("1", "D")
    assert atoms(DOT, CIRCLE) == ("S",)


# -- grammar ------------------------------------------------------------------------


def test_parse_example():
    x = parse_element("1*S^2. + 2*D^1.", F3)
    assert x == AlgebraElement(F3, [(sword(DOT, 2), 1), (dpow(DOT), 2)])
    assert parse_element(x.to_text(), F3) == x


def test_parse_bare_atoms_and_signs():
    x = parse_element("1o + -1*D^2o", F3)
    assert x == AlgebraElement(F3, [(idem(CIRCLE), 1), (dpow(CIRCLE, 2), 2)])


def test_parse_rational_coefficient():
    f = field(0)
    from fractions import Fraction

    assert parse_element("3/4*S^1o", f) == el(f, sword(CIRCLE), Fraction(3, 4))


def test_parse_error_position():
    with pytest.raises(ParseError) as e:
        parse_element("1*S^2. + Q", F2, line=4, col=10)
    assert e.value.line == 4 and e.value.col == 19


def test_parse_zero_exponent():
    with pytest.raises(ParseError):
        parse_element("D^0.", F2)


def test_coefficients_reduced():
    x = AlgebraElement(F3, [(idem(DOT), 4), (idem(DOT), 2)])
    assert not x


def test_algebra_suite_is_fast():
    t = time.perf_counter()
    test_associativity_all_triples()
    for c in (0, 2, 3, 5):
        test_h_central(c)
        test_decompose_expand_round_trip(c)
    assert time.perf_counter() - t < 5
