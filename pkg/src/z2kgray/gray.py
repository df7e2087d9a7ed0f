"""The distance-preserving Gray map Z_2k -> Z_2^k and its extensions.

``phi(i) = (0^(k-i) | 1^i)`` for ``0 <= i < k`` and ``phi(i + k) = phi(i) + 1^k``.
Each residue j carries the permutation ``sigma_j`` (j cyclic left shifts on
k positions), and ``phi(i) + sigma_i(phi(j)) == phi(i + j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .algebra import Residue, ZkVector, lee_weight_value
from .errors import LengthMismatch, ModulusMismatch, NotInImage, OutOfRange
from .propelinear import BinaryWord, CoordinatePermutation


@dataclass(frozen=True)
class GrayTable:
    k: int
    entries: tuple[BinaryWord, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: j for j, w in enumerate(self.entries)})

    @property
    def modulus(self) -> int:
        return 2 * self.k

    def __getitem__(self, j: int) -> BinaryWord:
        return self.entries[j % self.modulus]

    def index(self, w: BinaryWord) -> int:
        try:
            return self._index[w]
        except KeyError:
            raise NotInImage(f"{w} is not in the image of phi for k={self.k}") from None

    def rows(self) -> list[tuple[int, BinaryWord, int]]:
        return [(j, w, lee_weight_value(j, self.modulus)) for j, w in enumerate(self.entries)]


def _check_k(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise OutOfRange(f"k must be a positive integer, got {k!r}")
    return k


def _phi_direct(j: int, k: int) -> BinaryWord:
    if j < k:
        return BinaryWord((0,) * (k - j) + (1,) * j)
    return BinaryWord(tuple(1 - b for b in _phi_direct(j - k, k).bits))


@lru_cache(maxsize=None)
def gray_table(k: int) -> GrayTable:
    _check_k(k)
    return GrayTable(k, tuple(_phi_direct(j, k) for j in range(2 * k)))


def _residue_value(j, k: int) -> int:
    if isinstance(j, Residue):
        if j.modulus != 2 * k:
            raise ModulusMismatch(f"residue modulus {j.modulus} vs 2k={2 * k}")
        return j.value
    if not 0 <= j < 2 * k:
        raise OutOfRange(f"{j} not in [0, {2 * k})")
    return j


def phi(j: int | Residue, k: int) -> BinaryWord:
    return gray_table(k)[_residue_value(j, k)]


def phi_inverse(w: BinaryWord, k: int) -> int:
    if len(w) != k:
        raise LengthMismatch(f"word length {len(w)} vs k={k}")
    return gray_table(k).index(w)


@lru_cache(maxsize=None)
def sigma(j: int, k: int) -> CoordinatePermutation:
    """j cyclic left shifts on k positions: (x_1..x_k) -> (x_{1+j}..x_k, x_1..x_j)."""
    _check_k(k)
    s = j % k
    return CoordinatePermutation(tuple((p - s) % k for p in range(k)))


def gray_product(a: BinaryWord, b: BinaryWord, k: int) -> BinaryWord:
    """``phi(i) . w = phi(i) + sigma_i(w)`` for ``a = phi(i)``."""
    return a + sigma(phi_inverse(a, k), k).apply(b)


def big_phi(v: ZkVector) -> BinaryWord:
    if v.modulus % 2:
        raise ModulusMismatch(f"odd modulus {v.modulus}")
    table = gray_table(v.modulus // 2)
    bits: tuple[int, ...] = ()
    for c in v.coords:
        bits += table[c].bits
    return BinaryWord(bits)


def big_phi_inverse(w: BinaryWord, k: int) -> ZkVector:
    _check_k(k)
    if len(w) % k or not len(w):
        raise LengthMismatch(f"word length {len(w)} is not a positive multiple of k={k}")
    table = gray_table(k)
    coords = [table.index(BinaryWord(w.bits[s:s + k])) for s in range(0, len(w), k)]
    return ZkVector(tuple(coords), 2 * k)


def pi_x(v: ZkVector) -> CoordinatePermutation:
    """Block-diagonal permutation applying sigma_{v_r} inside block r."""
    k = v.modulus // 2
    return CoordinatePermutation.direct_sum(sigma(c, k) for c in v.coords)


def mixed_phi(blocks: Sequence[ZkVector]) -> BinaryWord:
    """Concatenate the per-block images, in the declared block order."""
    bits: tuple[int, ...] = ()
    for block in blocks:
        bits += big_phi(block).bits
    return BinaryWord(bits)


def mixed_pi(blocks: Sequence[ZkVector]) -> CoordinatePermutation:
    return CoordinatePermutation.direct_sum(pi_x(b) for b in blocks)


def mixed_phi_inverse(w: BinaryWord, moduli_lengths: Sequence[tuple[int, int]]) -> list[ZkVector]:
    expected = sum((m // 2) * n for m, n in moduli_lengths)
    if len(w) != expected:
        raise LengthMismatch(f"word length {len(w)} vs type length {expected}")
    out, pos = [], 0
    for m, n in moduli_lengths:
        size = (m // 2) * n
        out.append(big_phi_inverse(BinaryWord(w.bits[pos:pos + size]), m // 2))
        pos += size
    return out
