import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goppacodes.field import FieldError, get_field
from goppacodes.poly import (
    Polynomial,
    PolynomialError,
    PolySyntaxError,
    gcd,
    inverse_mod,
    norm_poly,
    parse_poly,
    trace_poly,
    xgcd,
)


def rand_poly(F, deg, rnd):
    return Polynomial(F, [rnd.randrange(F.order) for _ in range(deg + 1)])


def X(F, *exps):
    return Polynomial.from_exponents(F, exps)


def test_canonical_form(gf256):
    p = Polynomial(gf256, [1, 0, 0])
    assert p.coeffs == (1,) and p.degree == 0
    assert Polynomial.zero(gf256).degree == -1
    with pytest.raises(FieldError):
        Polynomial(gf256, [256])


def test_basic_examples(gf256):
    F = gf256
    f = X(F, 17, 0)
    assert f * Polynomial.one(F) == f
    assert f.derivative() == X(F, 16)
    assert gcd(f, X(F, 16)) == Polynomial.one(F)
    assert f.is_squarefree()
    with pytest.raises(ZeroDivisionError):
        f % Polynomial.zero(F)


@pytest.mark.parametrize("m", [4, 6, 8])
def test_ring_laws(m):
    F = get_field(m)
    rnd = random.Random(m)
    for _ in range(40):
        a, b, c = (rand_poly(F, rnd.randrange(0, 12), rnd) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if not b.is_zero() and not a.is_zero():
            assert (a * b).degree == a.degree + b.degree
            assert ((a * b) % b).is_zero()
            q, r = a.divmod(b)
            assert q * b + r == a and r.degree < b.degree
        assert (a + b) ** 2 == a**2 + b**2


def test_eval_remainder_theorem(gf256):
    rnd = random.Random(5)
    F = gf256
    for _ in range(100):
        f = rand_poly(F, rnd.randrange(0, 30), rnd)
        a = rnd.randrange(256)
        r = f % Polynomial(F, [a, 1])
        assert f.eval(a) == (r.coeffs[0] if r.coeffs else 0)


def test_eval_examples(gf256):
    assert X(gf256, 17, 0).eval(1) == 0
    assert X(gf256, 16, 1).eval(0) == 0


def test_root_counts(gf256):
    assert len(X(gf256, 17, 0).roots()) == 17
    assert len(X(gf256, 16, 1).roots()) == 16
    assert len(X(gf256, 15, 0).roots()) == 15
    with pytest.raises(PolynomialError):
        Polynomial.zero(gf256).roots()


def _brute_has_root(f):
    return any(f.eval(a) == 0 for a in f.field.elements())


def test_irreducible_examples(gf256):
    F = gf256
    for a in (0, 1, 0x53):
        assert Polynomial(F, [a, 1]).is_irreducible()
    assert not X(F, 17, 0).is_irreducible()
    with pytest.raises(PolynomialError):
        Polynomial.one(F).is_irreducible()
    c = next(c for c in range(256) if F.abs_trace(c) == 1)
    quad = Polynomial(F, [c, 1, 1])
    # brute-force factor search: a monic quadratic is reducible iff some x - r divides it
    assert all(not (quad % Polynomial(F, [r, 1])).is_zero() for r in range(256))
    assert quad.is_irreducible()
    c0 = next(c for c in range(1, 256) if F.abs_trace(c) == 0)
    assert not Polynomial(F, [c0, 1, 1]).is_irreducible()


def test_irreducible_matches_root_search_low_degree(gf16):
    # degree 2 and 3: irreducible iff no root in the field
    rnd = random.Random(7)
    for _ in range(300):
        deg = rnd.choice([2, 3])
        f = Polynomial(gf16, [rnd.randrange(16) for _ in range(deg)] + [rnd.randrange(1, 16)])
        assert f.is_irreducible() == (not _brute_has_root(f))


def test_irreducible_degree4_against_factor_search():
    F = get_field(2)
    monic = {d: [Polynomial(F, list(c) + [1]) for c in itertools.product(range(4), repeat=d)] for d in (1, 2)}
    for coeffs in itertools.product(range(4), repeat=4):
        f = Polynomial(F, list(coeffs) + [1])
        reducible = any((f % h).is_zero() for d in (1, 2) for h in monic[d])
        assert f.is_irreducible() == (not reducible)


def test_squarefree_against_brute_force(gf16):
    F = gf16
    monic = [Polynomial(F, list(c) + [1]) for d in (1, 2, 3) for c in itertools.product(range(16), repeat=d)]
    rnd = random.Random(11)
    cases = []
    for _ in range(12):
        cases.append(rand_poly(F, rnd.randrange(2, 7), rnd))
    for _ in range(6):
        h = Polynomial(F, [rnd.randrange(16), rnd.randrange(16), 1][: rnd.randrange(2, 4)])
        h = h if h.degree >= 1 else X(F, 1)
        cases.append(h * h * rand_poly(F, rnd.randrange(0, 7 - 2 * h.degree), rnd))
    for f in cases:
        if f.degree < 1:
            continue
        has_square = any((f % (h * h)).is_zero() for h in monic if 2 * h.degree <= f.degree)
        assert f.is_squarefree() == (not has_square)


def test_xgcd_and_inverse(gf256):
    rnd = random.Random(13)
    g = X(gf256, 17, 0) ** 2
    for _ in range(30):
        a = rand_poly(gf256, rnd.randrange(1, 20), rnd)
        b = rand_poly(gf256, rnd.randrange(1, 20), rnd)
        d, s, t = xgcd(a, b)
        assert s * a + t * b == d
        assert d == gcd(a, b)
    for a in (3, 0x40, 0x99):
        lin = Polynomial(gf256, [a, 1])
        inv = inverse_mod(lin, g)
        assert (inv * lin) % g == Polynomial.one(gf256)


def test_trace_norm_constructors(gf256):
    F = gf256
    assert trace_poly(F, 4) == X(F, 16, 1)
    assert norm_poly(F, 4) + 1 == X(F, 17, 0)
    q, r = trace_poly(F, 4).divmod(X(F, 1))
    assert q == X(F, 15, 0) and r.is_zero()
    with pytest.raises(FieldError):
        trace_poly(F, 3)
    with pytest.raises(FieldError):
        norm_poly(F, 5)


def test_parse_examples(gf256):
    F = gf256
    g = parse_poly("(x^17 + 1)^6", F)
    assert g.degree == 102
    assert g == X(F, 17, 0) ** 6
    assert parse_poly("x + x", F).is_zero()
    base = X(F, 16, 1)
    acc = Polynomial.one(F)
    for _ in range(6):
        acc = acc * base
    assert parse_poly("(x^16 + x)^6", F) == acc and acc.degree == 96


def test_parse_forms(gf256):
    F = gf256
    assert parse_poly("3x^2 + 2x + 1", F) == X(F, 2, 0)
    assert parse_poly("0x1D*x^2", F) == Polynomial(F, [0, 0, 0x1D])
    assert parse_poly("0x1Dx", F) == Polynomial(F, [0, 0x1D])
    assert parse_poly("x*x*x", F) == X(F, 3)
    assert parse_poly("(x+1)(x+1)", F) == X(F, 2, 0)
    assert parse_poly(" x ^ 2\n+ 1 ", F) == X(F, 2, 0)


@pytest.mark.parametrize(
    "text", ["", "x^", "x +", "(x + 1", "x^17 + 1)", "x $ 1", "x^100000", "0x100", "x^x"]
)
def test_parse_errors(gf256, text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text, gf256)


def test_parse_error_position(gf256):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x + $", gf256)
    assert info.value.pos == 4


def test_render(gf256):
    F = gf256
    assert X(F, 17, 0).render() == "x^17 + 1"
    assert Polynomial(F, [0x1D, 1, 0x80]).render() == "0x80*x^2 + x + 0x1D"
    assert Polynomial.zero(F).render() == "0"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 255), max_size=111))
def test_render_parse_roundtrip(coeffs):
    F = get_field(8)
    p = Polynomial(F, coeffs)
    assert parse_poly(p.render(), F) == p
