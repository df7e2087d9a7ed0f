"""Exhaustive search over Gray maps Z_r -> Z_2^m.

Used to confirm at small sizes that no Gray map exists for odd r, and that
the Hamming-compatible ones for r = 2k, m = k are exactly the coordinate
permutations of the standard map.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import lee_weight_value
from .errors import LimitExceeded, OutOfRange, ParityError
from .gray import gray_table
from .propelinear import BinaryWord

MAX_M = 6
MAX_R = 12
DEFAULT_LIMIT = 10**7


@dataclass(frozen=True, order=True)
class CandidateGrayMap:
    r: int
    m: int
    images: tuple[BinaryWord, ...]

    def __post_init__(self):
        if len(self.images) != self.r:
            raise OutOfRange("need exactly r images")
        if len(set(self.images)) != self.r:
            raise OutOfRange("images must be pairwise distinct")
        for a in range(self.r):
            if (self.images[a] + self.images[(a + 1) % self.r]).weight != 1:
                raise OutOfRange(f"images {a} and {a + 1} are not adjacent")

    def permute_coordinates(self, mu: tuple[int, ...]) -> CandidateGrayMap:
        """Apply ``mu`` (bit at p moves to mu[p]) to every image."""
        out = []
        for w in self.images:
            bits = [0] * self.m
            for p, b in enumerate(w.bits):
                bits[mu[p]] = b
            out.append(BinaryWord(tuple(bits)))
        return CandidateGrayMap(self.r, self.m, tuple(out))

    def __str__(self) -> str:
        return ",".join(map(str, self.images))


def standard_map(k: int) -> CandidateGrayMap:
    return CandidateGrayMap(2 * k, k, gray_table(k).entries)


def _check_caps(r: int, m: int):
    if r < 2 or m < 1:
        raise OutOfRange(f"need r >= 2 and m >= 1, got r={r}, m={m}")
    if m > MAX_M or r > MAX_R:
        raise OutOfRange(f"search capped at r <= {MAX_R}, m <= {MAX_M}")


def enumerate_gray_maps(r: int, m: int, limit: int = DEFAULT_LIMIT,
                        start: BinaryWord | None = None) -> list[CandidateGrayMap]:
    """All injective cyclic sequences of r words in Z_2^m with consecutive words adjacent.

    Backtracking over bitmask integers; a branch is cut once the current word
    is farther from the first word than the steps left to close the cycle.
    Results come out in lexicographic order of the image sequence. ``start``
    pins the image of 0.
    """
    _check_caps(r, m)
    if r > 2**m:
        return []
    found: list[tuple[int, ...]] = []
    path: list[int] = []
    used = [False] * (2**m)
    flips = [1 << b for b in range(m)]

    def extend():
        cur = path[-1]
        left = r - len(path)
        if left == 0:
            if (cur ^ path[0]).bit_count() == 1:
                found.append(tuple(path))
                if len(found) > limit:
                    raise LimitExceeded(f"more than {limit} Gray maps")
            return
        for f in flips:
            nxt = cur ^ f
            if used[nxt] or (nxt ^ path[0]).bit_count() > left:
                continue
            used[nxt] = True
            path.append(nxt)
            extend()
            path.pop()
            used[nxt] = False

    starts = range(2**m) if start is None else [start.to_int()]
    for first in starts:
        used[first] = True
        path.append(first)
        extend()
        path.pop()
        used[first] = False
    found.sort()
    return [CandidateGrayMap(r, m, tuple(BinaryWord.from_int(v, m) for v in seq)) for seq in found]


def count_gray_maps(r: int, m: int, limit: int = DEFAULT_LIMIT) -> int:
    """Number of Gray maps Z_r -> Z_2^m.

    Adding a fixed word to every image is a bijection between maps with
    different images of 0, so the count is 2^m times the count with phi(0) = 0.
    """
    return 2**m * len(enumerate_gray_maps(r, m, limit, start=BinaryWord.zero(m)))


def is_hamming_compatible_map(cand: CandidateGrayMap) -> bool:
    """True iff d(phi(i), phi(i + j)) == wt(phi(j)) for all i, j (product phi(i).phi(j) = phi(i+j))."""
    if cand.r % 2:
        raise ParityError(f"the product needs even r, got {cand.r}")
    im = cand.images
    r = cand.r
    return all((im[i] + im[(i + j) % r]).weight == im[j].weight
               for i in range(r) for j in range(r))


def is_weight_preserving(cand: CandidateGrayMap) -> bool:
    return all(w.weight == lee_weight_value(j, cand.r) for j, w in enumerate(cand.images))


def is_distance_preserving(cand: CandidateGrayMap) -> bool:
    im = cand.images
    return all((im[i] + im[j]).weight == lee_weight_value(i - j, cand.r)
               for i in range(cand.r) for j in range(cand.r))


def canonical_form(cand: CandidateGrayMap) -> tuple[BinaryWord, ...]:
    """Lexicographically least image sequence over all m! coordinate permutations."""
    return min(cand.permute_coordinates(mu).images
               for mu in itertools.permutations(range(cand.m)))


@dataclass
class UniquenessReport:
    r: int
    m: int
    total: int
    compatible: int
    orbits: int
    all_start_at_zero: bool
    all_distance_preserving: bool
    survivors_are_standard_permutations: bool
    standard_permutations_survive: bool
    unused_coordinates: bool | None = None
    survivors: list = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return (self.orbits == 1 and self.survivors_are_standard_permutations
                and self.standard_permutations_survive)


def uniqueness_report(r: int, m: int | None = None, limit: int = DEFAULT_LIMIT) -> UniquenessReport:
    """Enumerate Gray maps Z_r -> Z_2^m, keep the Hamming-compatible ones, group them by coordinate permutation.

    With m == r/2 both inclusions {survivors} = {mu o phi} are checked. With
    m > r/2 the survivors are checked to leave m - r/2 coordinates unused;
    with m < r/2 there can be no survivors.
    """
    if r % 2:
        raise ParityError(f"r must be even, got {r}")
    k = r // 2
    m = k if m is None else m
    # i = j = 0 in the compatibility condition forces wt(phi(0)) = 0
    zero = BinaryWord.zero(m)
    rooted = enumerate_gray_maps(r, m, limit, start=zero)
    survivors = [c for c in rooted if is_hamming_compatible_map(c)]
    orbits = {canonical_form(c) for c in survivors}
    report = UniquenessReport(
        r, m, 2**m * len(rooted), len(survivors), len(orbits),
        all(c.images[0] == zero for c in survivors),
        all(is_distance_preserving(c) and is_weight_preserving(c) for c in survivors),
        False, False, survivors=survivors)
    if m == k:
        base = standard_map(k)
        expected = {base.permute_coordinates(mu) for mu in itertools.permutations(range(k))}
        got = set(survivors)
        report.survivors_are_standard_permutations = got <= expected
        report.standard_permutations_survive = expected <= got
    elif m > k:
        used = [sum(1 for p in range(m) if any(w.bits[p] for w in c.images)) for c in survivors]
        report.unused_coordinates = all(u == k for u in used)
    return report


@dataclass
class ParityReport:
    r: int
    counts: dict[int, int]

    @property
    def all_zero(self) -> bool:
        return not any(self.counts.values())


def parity_report(r: int, m_max: int, limit: int = DEFAULT_LIMIT) -> ParityReport:
    """Count Gray maps Z_r -> Z_2^m for each m <= m_max (odd r: all counts should be 0)."""
    if r % 2 == 0:
        raise ParityError(f"expected odd r, got {r}")
    if m_max > MAX_M:
        raise OutOfRange(f"m_max capped at {MAX_M}")
    return ParityReport(r, {m: len(enumerate_gray_maps(r, m, limit)) for m in range(1, m_max + 1)})


def weight_parity_alternates(cand: CandidateGrayMap) -> bool:
    """wt(phi(i)) mod 2 == wt(phi(0)) + i mod 2 along the sequence."""
    p0 = cand.images[0].weight % 2
    return all(w.weight % 2 == (p0 + i) % 2 for i, w in enumerate(cand.images))
