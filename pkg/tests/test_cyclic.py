import random

import numpy as np
import pytest

from skewz4 import ring
from skewz4.analysis import build_code, load_manifest
from skewz4.cyclic import (
    RCode,
    closure_check,
    dot,
    enumerate_span,
    free_code_from_divisor,
    generator_matrix,
    generator_matrix_display,
    in_code_by_cofactor,
    parity_check_matrix,
    poly_of,
    reduce_mod_xn_minus_1,
    res_generators,
    res_generators_closed_form,
    shift,
    subcode_generators,
    times_transpose,
    tor_generators,
    tor_generators_closed_form,
    vector_of,
)
from skewz4.errors import (
    DegreeTooLarge,
    NonUnitLeadingCoefficient,
    NotARightDivisor,
    NotFreeCode,
    OddLength,
    SpanTooLarge,
)
from skewz4.poly import SkewPoly
from skewz4.ring import DerivationKind, RingElem
from skewz4.textform import parse_poly
from skewz4.z4 import Z4Code, enumerate_z4_codewords

KINDS = list(DerivationKind)
E = RingElem
MANIFEST = load_manifest()
FREE_ROWS = [e for e in MANIFEST if e.k == "free"]


def rand_vec(rng, n):
    return tuple(ring.ELEMENTS[rng.randrange(16)] for _ in range(n))


def z4_span(rows, n):
    return set(enumerate_z4_codewords(Z4Code(rows, n=n)))


@pytest.mark.parametrize("kind", KINDS)
def test_shift_matches_multiplication_by_x(kind):
    rng = random.Random(17)
    x = SkewPoly.x(kind)
    for t in range(10_000):
        n = 2 + t % 7
        c = rand_vec(rng, n)
        assert shift(c, kind) == vector_of(reduce_mod_xn_minus_1(x * poly_of(c, kind), n), n)


def test_shift_examples():
    assert shift((E(0),) * 5) == (E(0),) * 5
    assert shift((ring.V, ring.ZERO)) == (E(1), E(1, 3))


def test_vector_poly_round_trip():
    rng = random.Random(1)
    for _ in range(200):
        c = rand_vec(rng, 6)
        assert vector_of(poly_of(c), 6) == c
    assert poly_of((E(3), E(1), E(0), E(0))) == parse_poly("3+x")
    assert vector_of(reduce_mod_xn_minus_1(SkewPoly.monomial(1, 4), 4), 4) == (E(1), E(0), E(0), E(0))
    with pytest.raises(DegreeTooLarge):
        vector_of(SkewPoly.monomial(1, 4), 4)


def test_free_code_examples():
    code = free_code_from_divisor(parse_poly("3+x"), 4)
    assert code.free_rank == 3
    assert len(enumerate_span(code)) == 4096
    zero = free_code_from_divisor(SkewPoly.xn_minus_1(4), 4)
    assert zero.free_rank == 0 and len(enumerate_span(zero)) == 1
    full = free_code_from_divisor(SkewPoly.constant(1), 3)
    assert full.free_rank == 3 and len(enumerate_span(full)) == 16**3
    with pytest.raises(NotARightDivisor):
        free_code_from_divisor(parse_poly("1+vx+x^2"), 5)
    with pytest.raises(NonUnitLeadingCoefficient):
        free_code_from_divisor(parse_poly("1+vx"), 4)


def test_generator_matrix_example():
    code = free_code_from_divisor(parse_poly("3+x"), 4)
    assert generator_matrix(code) == (
        (E(3), E(1), E(0), E(0)),
        (E(0), E(3), E(1), E(0)),
        (E(0), E(0), E(3), E(1)),
    )
    with pytest.raises(NotFreeCode):
        generator_matrix(subcode_generators(parse_poly("3+x"), 4, 2))


@pytest.mark.parametrize("entry", FREE_ROWS, ids=lambda e: e.label)
def test_generator_matrix_matches_display(entry):
    g = entry.poly()
    code = free_code_from_divisor(g, entry.n)
    G = generator_matrix(code)
    assert len(G) == entry.n - g.degree
    assert G == generator_matrix_display(g, entry.n)
    assert G[0] == vector_of(g, entry.n)


@pytest.mark.parametrize("kind", KINDS)
def test_subcode_generators_match_display_on_random_polys(kind):
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(4, 10)
        d = rng.randint(0, n - 2)
        g = SkewPoly(list(rand_vec(rng, d)) + [ring.UNITS[rng.randrange(4)]], kind)
        code = subcode_generators(g, n, n - d)
        assert code.generators == generator_matrix_display(g, n)


def test_subcode_examples():
    g3 = parse_poly("(1+3v)+2vx+(2+2v)x^2+2vx^3+(1+3v)x^4")
    code = subcode_generators(g3, 5, 3)
    assert len(code.generators) == 3
    assert code.generators[0] == vector_of(g3, 5)
    x = SkewPoly.x()
    for i, gi in enumerate(code.generators):
        assert gi == vector_of(reduce_mod_xn_minus_1((x**i) * g3, 5), 5)
    assert subcode_generators(g3, 5, 1).generators == (vector_of(g3, 5),)


def test_parity_check_example():
    H = parity_check_matrix(parse_poly("3+x"), 4)
    assert H == ((E(1), E(1), E(1), E(1)),)
    with pytest.raises(OddLength):
        parity_check_matrix(parse_poly("3+x"), 5)
    with pytest.raises(NotARightDivisor):
        parity_check_matrix(parse_poly("1+vx+x^2"), 4)


@pytest.mark.parametrize("entry", FREE_ROWS, ids=lambda e: e.label)
def test_parity_check_orthogonal(entry):
    g = entry.poly()
    code = free_code_from_divisor(g, entry.n)
    H = parity_check_matrix(g, entry.n)
    assert len(H) == g.degree
    assert all(x == ring.ZERO for row in times_transpose(generator_matrix(code), H) for x in row)


@pytest.mark.parametrize("kind", KINDS)
def test_parity_check_orthogonal_random_divisors(kind):
    rng = random.Random(23)
    checked = 0
    for _ in range(4000):
        n = rng.choice((2, 4, 6, 8))
        d = rng.randint(1, min(n, 4))
        g = SkewPoly(list(rand_vec(rng, d)) + [ring.UNITS[rng.randrange(4)]], kind)
        try:
            code = free_code_from_divisor(g, n)
        except NotARightDivisor:
            continue
        H = parity_check_matrix(g, n)
        assert all(dot(r, h) == ring.ZERO for r in code.generators for h in H)
        checked += 1
    assert checked > 20


@pytest.mark.parametrize("entry", FREE_ROWS, ids=lambda e: e.label)
def test_membership_by_cofactor(entry):
    g = entry.poly()
    code = free_code_from_divisor(g, entry.n)
    span = enumerate_span(code)
    assert len(span) == 16**code.free_rank
    h = code.cofactor
    rng = np.random.default_rng(4)
    words = span.codes()
    sample = words if len(words) <= 4096 else words[rng.choice(len(words), 4096, replace=False)]
    for row in sample:
        assert in_code_by_cofactor([ring.ELEMENTS[c] for c in row], h, entry.n)
    for _ in range(500):
        c = [ring.ELEMENTS[int(x)] for x in rng.integers(0, 16, entry.n)]
        assert in_code_by_cofactor(c, h, entry.n) == (c in span)


def test_enumerate_span_examples():
    one = RCode(4, ((E(1), E(0), E(0), E(0)),))
    assert len(enumerate_span(one)) == 16
    with pytest.raises(SpanTooLarge):
        enumerate_span(subcode_generators(parse_poly("3+x"), 8, 7))


def test_enumerate_span_worker_independent():
    code = subcode_generators(parse_poly("(1+v)+3x+vx^2"), 6, 5)
    a = enumerate_span(code, workers=1)
    b = enumerate_span(code, workers=4)
    assert np.array_equal(a.keys, b.keys)


def test_enumerate_span_matches_naive():
    code = subcode_generators(parse_poly("(1+v)+(2+2v)x+(1+3v)x^2"), 4, 2)
    naive = set()
    for r in ring.ELEMENTS:
        for s in ring.ELEMENTS:
            naive.add(tuple(r * p + s * q for p, q in zip(*code.generators)))
    assert set(enumerate_span(code)) == naive


def test_closure_examples():
    rep = closure_check(RCode(2, ((ring.V, ring.ZERO),)))
    assert not rep.is_delta_closed
    for n, text in ((4, "3+x"), (3, "3+x"), (5, "3+x")):
        rep = closure_check(free_code_from_divisor(parse_poly(text), n))
        assert rep.is_delta_closed
        if n % 2:
            assert rep.is_cyclic
        else:
            assert rep.is_quasicyclic_2


@pytest.mark.parametrize("kind", KINDS)
def test_free_codes_closed_under_shift(kind):
    rng = random.Random(31)
    seen = {0: 0, 1: 0}
    for _ in range(3000):
        n = rng.randint(2, 7)
        d = rng.randint(1, min(n, 3))
        g = SkewPoly(list(rand_vec(rng, d)) + [ring.UNITS[rng.randrange(4)]], kind)
        try:
            code = free_code_from_divisor(g, n)
        except NotARightDivisor:
            continue
        if code.free_rank > 4:
            continue
        rep = closure_check(code)
        assert rep.is_delta_closed
        assert rep.is_cyclic if n % 2 else rep.is_quasicyclic_2
        seen[n % 2] += 1
    assert seen[0] > 5 and seen[1] > 5


def test_res_tor_all_z4_generators():
    code = subcode_generators(parse_poly("1+2x+3x^3"), 5, 2)
    assert res_generators(code) == tor_generators(code)


@pytest.mark.parametrize("kind", KINDS)
def test_closed_forms_match_shifted_generators(kind):
    rng = random.Random(12)
    for _ in range(500):
        n = rng.randint(2, 12)
        g = SkewPoly(rand_vec(rng, n), kind)
        k = rng.randint(1, n)
        code = subcode_generators(g, n, k)
        assert res_generators_closed_form(g, n, k) == res_generators(code)
        assert tor_generators_closed_form(g, n, k) == tor_generators(code)


def test_res_tor_oracle_small():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(2, 6)
        k = rng.randint(1, min(n, 3))
        kind = KINDS[rng.randrange(2)]
        g = SkewPoly(rand_vec(rng, n), kind)
        code = subcode_generators(g, n, k)
        span = enumerate_span(code)
        assert z4_span(res_generators_closed_form(g, n, k), n) == span.residue_set()
        assert z4_span(tor_generators_closed_form(g, n, k), n) == span.torsion_set()


def test_example_subcode_types():
    g3 = parse_poly("(1+3v)+2vx+(2+2v)x^2+2vx^3+(1+3v)x^4")
    res = Z4Code(res_generators(build_code(g3, 5, 3)), n=5)
    assert (res.k1, res.k2) == (2, 1)
