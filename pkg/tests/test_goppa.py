import random

import pytest

from _oracles import brute_min_distance, random_goppa_polys, random_irreducible
from goppacodes import get_field, parse_poly
from goppacodes.gf2 import nullspace, row_space_equal
from goppacodes.goppa import (
    EmptySupportError,
    GoppaError,
    GoppaSpec,
    build_goppa_code,
    build_parity_check,
    definitional_member,
    goppa_code,
    max_support,
)
from goppacodes.poly import Polynomial


def test_max_support(gf256):
    F = gf256
    assert len(max_support(F, parse_poly("(x^17+1)^6", F))) == 239
    assert len(max_support(F, parse_poly("(x^16+x)^6", F))) == 240
    assert len(max_support(F, parse_poly("(x^15+1)^6", F))) == 241
    L = max_support(F, Polynomial.one(F))
    assert L == list(range(256))
    assert max_support(F, parse_poly("x^15+1", F)) == sorted(max_support(F, parse_poly("x^15+1", F)))
    F1 = get_field(1)
    with pytest.raises(EmptySupportError):
        max_support(F1, parse_poly("x^2+x", F1))


def test_spec_invariants(gf16):
    g = parse_poly("x^2+x+1", gf16)
    with pytest.raises(GoppaError):
        GoppaSpec(gf16, g, (3, 3))
    root = next(iter(g.roots()))
    with pytest.raises(GoppaError):
        GoppaSpec(gf16, g, (root,))
    with pytest.raises(GoppaError):
        GoppaSpec(gf16, Polynomial.one(gf16), (1,))


def test_single_coordinate_code(gf256):
    spec = GoppaSpec(gf256, parse_poly("x", gf256), (1,))
    H = build_parity_check(spec)
    assert H.shape == (8, 1) and H.rows[0] == 1 and not any(H.rows[1:])
    C = build_goppa_code(spec)
    assert (C.n, C.k) == (1, 0)


def test_parity_check_shape_239(gf256):
    spec = GoppaSpec.maximal(gf256, parse_poly("(x^17+1)^6", gf256))
    H = build_parity_check(spec)
    assert H.shape == (816, 239)
    assert nullspace(H).nrows == 21


def _assert_definitional_agreement(spec):
    C = build_goppa_code(spec)
    members = 0
    for v in range(1 << spec.n):
        ok = definitional_member(v, spec)
        assert ok == C.contains(v), v
        members += ok
    assert members == 1 << C.k


def test_definitional_agreement_gf16_quadratic(gf16):
    F = gf16
    c = next(c for c in range(16) if F.abs_trace(c) == 1)
    g = Polynomial(F, [c, 1, 1])
    assert g.is_irreducible()
    spec = GoppaSpec.maximal(F, g)
    assert spec.n == 16
    _assert_definitional_agreement(spec)


def test_definitional_agreement_gf8_linear():
    F = get_field(3)
    alpha = F.generator
    g = Polynomial(F, [alpha, 1])
    spec = GoppaSpec.maximal(F, g)
    assert spec.n == 7 and alpha not in spec.support
    _assert_definitional_agreement(spec)


def test_definitional_examples(gf16):
    spec = GoppaSpec.maximal(gf16, parse_poly("x^2+x+0x8", gf16))
    assert definitional_member(0, spec)
    assert definitional_member([0] * spec.n, spec)
    for i in range(spec.n):
        assert not definitional_member(1 << i, spec)
    with pytest.raises(GoppaError):
        definitional_member([0, 1], spec)


def test_related_codes(gf256):
    C = goppa_code(gf256, parse_poly("x^17+1", gf256))
    assert (C.n, C.k) == (239, 123)
    C2 = goppa_code(gf256, parse_poly("(x^17+1)^2", gf256))
    assert row_space_equal(C.generator, C2.generator)
    F6 = get_field(6)
    D = goppa_code(F6, parse_poly("x^9+1", F6))
    assert (D.n, D.k) == (55, 16)


def test_dimension_and_distance_bounds(gf16):
    rnd = random.Random(21)
    for g in random_goppa_polys(gf16, 15, rnd):
        spec = GoppaSpec.maximal(gf16, g)
        C = build_goppa_code(spec)
        assert C.k >= spec.n - 4 * spec.t
        if C.k:
            assert brute_min_distance(C.rows, C.n) >= spec.t + 1


def test_squaring_irreducible_gives_same_code(gf16):
    rnd = random.Random(22)
    for deg in (1, 2, 3, 2, 3):
        g = random_irreducible(gf16, deg, rnd)
        spec = GoppaSpec.maximal(gf16, g)
        C1 = build_goppa_code(spec)
        C2 = build_goppa_code(GoppaSpec(gf16, g * g, spec.support))
        assert row_space_equal(C1.generator, C2.generator)


def test_explicit_support(gf16):
    g = parse_poly("x^2+x+0x8", gf16)
    full = GoppaSpec.maximal(gf16, g)
    sub = full.support[:10]
    C = goppa_code(gf16, g, sub)
    assert C.n == 10
    # shortening the full code on the dropped coordinates gives the same code
    Cfull = build_goppa_code(full)
    tail = sum(1 << i for i in range(10, full.n))
    kept = [r for r in Cfull.codewords() if not r & tail]
    assert sorted(kept) == sorted(C.codewords())
