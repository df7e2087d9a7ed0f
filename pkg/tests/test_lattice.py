import itertools
import math

import pytest

from z2kgray import (
    DegenerateCode, GeneratorSpec, LengthMismatch, OutOfRange, SizeLimitExceeded, ZkVector,
    check_propelinear, info_rates, min_hamming_distance_binary, min_lee_distance, minimize_type,
    span, star,
)
from z2kgray.algebra import lee_weight_value

from conftest import build


def span_oracle(spec):
    """All integer combinations of the generators, coefficients 0..max modulus - 1."""
    mods = [m for m, n in spec.blocks for _ in range(n)]
    top = max(mods)
    out = set()
    for coeffs in itertools.product(range(top), repeat=len(spec.generators)):
        out.add(tuple(sum(a * g[i] for a, g in zip(coeffs, spec.generators)) % mods[i]
                      for i in range(len(mods))))
    if not spec.generators:
        out.add((0,) * len(mods))
    return out


def lee_oracle(code):
    mods = [m for m, n in code.type.blocks for _ in range(n)]
    return min(sum(lee_weight_value(a - b, m) for a, b, m in zip(u, v, mods))
               for u, v in itertools.combinations(code.codewords, 2))


def test_span_examples():
    assert span(GeneratorSpec(((6, 1),), ((2,),))).codewords == ((0,), (2,), (4,))
    c = span(GeneratorSpec(((4, 2),), ((1, 2),)))
    assert c.codewords == ((0, 0), (1, 2), (2, 0), (3, 2))
    assert span(GeneratorSpec(((6, 1),), ((3,),))).codewords == ((0,), (3,))


def test_span_matches_oracle(any_code):
    assert set(any_code.codewords) == span_oracle(any_code.spec)
    assert list(any_code.codewords) == sorted(any_code.codewords)
    assert any_code.type.order % any_code.size == 0


def test_span_is_a_subgroup(any_code):
    words = set(any_code.codewords)
    assert any_code.zero in words
    for u, v in itertools.product(words, repeat=2):
        assert any_code.add(u, v) in words


def test_span_limits_and_validation():
    with pytest.raises(SizeLimitExceeded):
        span(GeneratorSpec.full([(6, 3)]), size_limit=100)
    with pytest.raises(LengthMismatch):
        GeneratorSpec(((4, 2),), ((1,),))
    with pytest.raises(OutOfRange):
        GeneratorSpec(((4, 1),), ((4,),))
    with pytest.raises(OutOfRange):
        GeneratorSpec(((5, 1),), ((1,),))


def test_decomposability():
    assert build("Z6 x Z2^4").decomposable
    assert not build("Z2 x Z4 diag").decomposable
    assert build("Z12 x Z2").decomposable  # (4,1) generates Z3 x Z2


def test_min_distances_examples():
    c = build("span(2) in Z6")
    assert min_lee_distance(c) == 2 and min_hamming_distance_binary(c) == 2
    assert {str(c.binary_word(w)) for w in c.codewords} == {"000", "011", "110"}
    c = build("Z4")
    assert min_lee_distance(c) == 1
    c = build("span(1,2) in Z4^2")
    assert min_hamming_distance_binary(c) == 2
    c = build("span(3) in Z6")
    assert min_lee_distance(c) == min_hamming_distance_binary(c) == 3
    with pytest.raises(DegenerateCode):
        min_lee_distance(span(GeneratorSpec(((4, 1),), ())))


def test_metric_identity(any_code):
    d = min_lee_distance(any_code)
    assert d == lee_oracle(any_code)
    assert min_hamming_distance_binary(any_code) == d


def test_rates_examples():
    r = info_rates(build("Z4"))
    assert r.R == pytest.approx(1, abs=1e-12) and r.R_prime == pytest.approx(1, abs=1e-12)
    r = info_rates(build("span(2) in Z6"))
    assert r.R == pytest.approx(math.log2(3) / math.log2(6), abs=1e-12)
    assert r.R_prime == pytest.approx(math.log2(3) / 3, abs=1e-12)
    assert round(r.R, 4) == 0.6131 and round(r.R_prime, 4) == 0.5283
    r = info_rates(build("span(1,2) in Z4^2"))
    assert r.R_prime == pytest.approx(r.R, abs=1e-12)
    with pytest.raises(OutOfRange):
        info_rates(build("Z6 x Z2^4"))


@pytest.mark.parametrize("k", range(1, 7))
def test_rate_relation_on_cyclic_codes(k):
    m = 2 * k
    for g in range(m):
        code = span(GeneratorSpec(((m, 2),), ((g, 1),)))
        r = info_rates(code)
        assert abs(r.R_prime - r.predicted_ratio * r.R) <= 1e-12
        if k >= 3 and code.size >= 2:
            assert r.R_prime < r.R


def test_minimize_type_examples():
    red = minimize_type(build("span(3) in Z6"))
    assert red.type.blocks == ((2, 1),) and red.generators == ((1,),)
    assert minimize_type(build("Z6^2")).type.blocks == ((6, 2),)
    red = minimize_type(build("span(2) in Z6"))
    assert red.type.blocks == ((6, 1),) and red.evenness_restored == (True,)
    assert red.notes
    assert minimize_type(build("Z12 x Z2")).type.blocks == ((6, 1), (2, 1))
    assert minimize_type(build("Z10 span(5)")).type.blocks == ((2, 1),)


def test_minimized_block_embeds(any_code):
    # rescaled projection of each block is a subgroup of the reduced modulus
    red = minimize_type(any_code)
    start = 0
    for (m, n), (m2, _), s in zip(any_code.type.blocks, red.type.blocks, red.scales):
        assert m2 % 2 == 0 and m % m2 == 0 and m2 * s == m
        for c in any_code.codewords:
            assert all(v % s == 0 and v // s < m2 for v in c[start:start + n])
        start += n


def test_image_is_propelinear_and_isomorphic(any_code):
    image = any_code.binary_image()
    assert len(image) == any_code.size
    assert check_propelinear(image).passed
    for u, v in itertools.product(any_code.codewords, repeat=2):
        assert any_code.binary_word(any_code.add(u, v)) == star(
            image, any_code.binary_word(u), any_code.binary_word(v))


def test_zk_vector_roundtrip_through_type():
    c = build("Z6 x Z2^4")
    blocks = c.type.split((5, 1, 0, 1, 0))
    assert blocks == [ZkVector((5,), 6), ZkVector((1, 0, 1, 0), 2)]
    assert str(c.binary_word((5, 1, 0, 1, 0))) == "1001010"
