import itertools
from types import SimpleNamespace

import pytest

from z2kgray import (
    BinaryWord, CandidateGrayMap, OutOfRange, ParityError, enumerate_gray_maps,
    is_hamming_compatible_map, parity_report, uniqueness_report,
)
from z2kgray.search import (
    count_gray_maps, is_distance_preserving, is_weight_preserving, standard_map,
    weight_parity_alternates,
)

W = BinaryWord.from_str


def gray_maps_oracle(r, m):
    """All injective r-sequences of m-bit words, filtered for cyclic adjacency."""
    words = [BinaryWord.from_int(v, m) for v in range(2**m)]
    out = []
    for seq in itertools.permutations(words, r):
        if all((seq[i] + seq[(i + 1) % r]).weight == 1 for i in range(r)):
            out.append(seq)
    return sorted(out)


@pytest.mark.parametrize("r,m", [(2, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3), (5, 3), (6, 3), (8, 3)])
def test_enumeration_matches_oracle(r, m):
    got = [c.images for c in enumerate_gray_maps(r, m)]
    assert got == gray_maps_oracle(r, m)
    assert count_gray_maps(r, m) == len(got)


def test_enumeration_examples():
    assert len(enumerate_gray_maps(4, 2)) == 8
    assert enumerate_gray_maps(3, 2) == []
    assert [str(c) for c in enumerate_gray_maps(2, 1)] == ["0,1", "1,0"]
    with pytest.raises(OutOfRange):
        enumerate_gray_maps(4, 7)


def test_candidate_validation():
    with pytest.raises(OutOfRange):
        CandidateGrayMap(4, 2, (W("00"), W("01"), W("10"), W("11")))
    with pytest.raises(OutOfRange):
        CandidateGrayMap(2, 1, (W("0"), W("0")))


def test_compatibility_examples():
    assert is_hamming_compatible_map(standard_map(2))
    shifted = CandidateGrayMap(4, 2, tuple(map(W, ["01", "11", "10", "00"])))
    assert not is_hamming_compatible_map(shifted)
    swapped = CandidateGrayMap(4, 2, tuple(map(W, ["00", "10", "11", "01"])))
    assert is_hamming_compatible_map(swapped)
    # no odd-length Gray map can be built, so hand over a bare stand-in
    with pytest.raises(ParityError):
        is_hamming_compatible_map(SimpleNamespace(r=3, images=tuple(map(W, ["00", "01", "11"]))))


def test_compatibility_matches_brute_force_over_all_maps():
    # rooted search must find every compatible map among all maps
    for r, m in [(4, 2), (6, 3), (4, 3)]:
        every = [c for c in enumerate_gray_maps(r, m) if is_hamming_compatible_map(c)]
        assert every == uniqueness_report(r, m).survivors


@pytest.mark.parametrize("k,total,compatible", [(1, 2, 1), (2, 8, 2), (3, 192, 6)])
def test_uniqueness_counts(k, total, compatible):
    rep = uniqueness_report(2 * k, k)
    assert rep.total == total == len(gray_maps_oracle(2 * k, k))
    assert rep.compatible == compatible
    assert rep.orbits == 1
    assert rep.unique


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_survivors_are_exactly_permuted_standard_map(k):
    rep = uniqueness_report(2 * k, k)
    assert rep.compatible == len(list(itertools.permutations(range(k))))
    assert rep.survivors_are_standard_permutations and rep.standard_permutations_survive
    assert rep.all_start_at_zero and rep.all_distance_preserving
    for c in rep.survivors:
        assert c.images[0] == BinaryWord.zero(k)
        assert is_weight_preserving(c) and is_distance_preserving(c)


def test_extra_coordinates_unused():
    rep = uniqueness_report(4, 3)
    assert rep.compatible == 6 and rep.unused_coordinates


@pytest.mark.parametrize("r,m_max", [(3, 4), (5, 5), (7, 4)])
def test_parity(r, m_max):
    rep = parity_report(r, m_max)
    assert rep.all_zero and set(rep.counts) == set(range(1, m_max + 1))


def test_parity_rejects_even():
    with pytest.raises(ParityError):
        parity_report(4, 2)


@pytest.mark.parametrize("r,m", [(4, 2), (6, 3), (8, 3), (8, 4), (10, 4)])
def test_weight_parity_alternates(r, m):
    for c in enumerate_gray_maps(r, m):
        assert weight_parity_alternates(c)
