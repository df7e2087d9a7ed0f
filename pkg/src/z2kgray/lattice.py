"""Z_2k-codes and mixed group codes: spanning, metrics, rates, type minimization."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .algebra import ZkVector, check_modulus, lee_weight_value
from .errors import DegenerateCode, LengthMismatch, OutOfRange, SizeLimitExceeded
from .gray import mixed_phi, mixed_pi
from .propelinear import BinaryWord, PropelinearCode

DEFAULT_SIZE_LIMIT = 10**6

Block = tuple[int, int]  # (modulus, length)


@dataclass(frozen=True)
class MixedGroupType:
    """Ordered blocks ``Z_{m_1}^{l_1} x ... x Z_{m_r}^{l_r}`` with even moduli."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple((int(m), int(n)) for m, n in self.blocks)
        if not blocks:
            raise LengthMismatch("a type needs at least one block")
        for m, n in blocks:
            check_modulus(m)
            if n < 1:
                raise LengthMismatch(f"block length must be >= 1, got {n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.blocks)

    @property
    def length(self) -> int:
        return sum(n for _, n in self.blocks)

    @property
    def binary_length(self) -> int:
        return sum((m // 2) * n for m, n in self.blocks)

    @property
    def order(self) -> int:
        return math.prod(m**n for m, n in self.blocks)

    def split(self, flat: Sequence[int]) -> list[ZkVector]:
        out, pos = [], 0
        for m, n in self.blocks:
            out.append(ZkVector(tuple(flat[pos:pos + n]), m))
            pos += n
        return out

    def __str__(self) -> str:
        return " x ".join(f"Z{m}^{n}" for m, n in self.blocks)


@dataclass(frozen=True)
class GeneratorSpec:
    blocks: tuple[Block, ...]
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        kind = MixedGroupType(self.blocks)
        object.__setattr__(self, "blocks", kind.blocks)
        gens = tuple(tuple(int(c) for c in g) for g in self.generators)
        for g in gens:
            if len(g) != kind.length:
                raise LengthMismatch(f"generator {g} has length {len(g)}, expected {kind.length}")
            kind.split(g)  # range-checks every coordinate
        object.__setattr__(self, "generators", gens)

    @property
    def type(self) -> MixedGroupType:
        return MixedGroupType(self.blocks)

    @classmethod
    def single(cls, modulus: int, generators: Iterable[Sequence[int]], n: int | None = None):
        gens = [tuple(g) for g in generators]
        n = n if n is not None else len(gens[0])
        return cls(((modulus, n),), tuple(gens))

    @classmethod
    def full(cls, blocks: Sequence[Block]) -> GeneratorSpec:
        """Unit vectors in every coordinate: the whole ambient group."""
        kind = MixedGroupType(tuple(blocks))
        size = kind.length
        gens = tuple(tuple(int(i == p) for i in range(size)) for p in range(size))
        return cls(kind.blocks, gens)


@dataclass(frozen=True)
class SpannedCode:
    spec: GeneratorSpec
    codewords: tuple[tuple[int, ...], ...]
    decomposable: bool = False

    @property
    def type(self) -> MixedGroupType:
        return self.spec.type

    @property
    def size(self) -> int:
        return len(self.codewords)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.type.length

    def nonzero(self):
        z = self.zero
        return (c for c in self.codewords if c != z)

    def add(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        return _add(self.type.blocks, u, v)

    def binary_word(self, vector: Sequence[int]) -> BinaryWord:
        return mixed_phi(self.type.split(vector))

    def binary_image(self) -> PropelinearCode:
        """Phi(C) with ``pi_x`` attached to each image word."""
        kind = self.type
        perm_of = {}
        for c in self.codewords:
            blocks = kind.split(c)
            perm_of[mixed_phi(blocks)] = mixed_pi(blocks)
        return PropelinearCode(kind.binary_length, perm_of)

    def projection(self, block: int) -> set[tuple[int, ...]]:
        start = sum(n for _, n in self.type.blocks[:block])
        n = self.type.blocks[block][1]
        return {c[start:start + n] for c in self.codewords}

    def coordinate_projection(self, coord: int) -> set[int]:
        return {c[coord] for c in self.codewords}


def _moduli_per_coordinate(blocks: Sequence[Block]) -> list[int]:
    return [m for m, n in blocks for _ in range(n)]


def _add(blocks, u, v) -> tuple[int, ...]:
    return tuple((a + b) % m for a, b, m in zip(u, v, _moduli_per_coordinate(blocks)))


def span(spec: GeneratorSpec, size_limit: int = DEFAULT_SIZE_LIMIT) -> SpannedCode:
    """Smallest additive subgroup containing the generators (breadth-first closure)."""
    mods = _moduli_per_coordinate(spec.blocks)
    zero = (0,) * len(mods)
    seen = {zero}
    queue = deque([zero])
    while queue:
        c = queue.popleft()
        for g in spec.generators:
            s = tuple((a + b) % m for a, b, m in zip(c, g, mods))
            if s not in seen:
                seen.add(s)
                if len(seen) > size_limit:
                    raise SizeLimitExceeded(f"closure exceeds {size_limit} codewords")
                queue.append(s)
    words = tuple(sorted(seen))
    sizes, start = [], 0
    for _, n in spec.blocks:
        sizes.append(len({c[start:start + n] for c in words}))
        start += n
    return SpannedCode(spec, words, math.prod(sizes) == len(words))


def vector_lee_weight_mixed(code: SpannedCode, vector: Sequence[int]) -> int:
    return sum(lee_weight_value(c, m) for c, m in zip(vector, _moduli_per_coordinate(code.type.blocks)))


def _require_nontrivial(code: SpannedCode):
    if code.size < 2:
        raise DegenerateCode("need at least two codewords")


def min_lee_distance(code: SpannedCode) -> int:
    # group code: minimum distance equals minimum nonzero weight
    _require_nontrivial(code)
    return min(vector_lee_weight_mixed(code, c) for c in code.nonzero())


def min_hamming_distance_binary(code: SpannedCode) -> int:
    _require_nontrivial(code)
    return min(code.binary_word(c).weight for c in code.nonzero())


@dataclass(frozen=True)
class Rates:
    N: int
    n: int
    k: int
    R: float
    R_prime: float

    @property
    def predicted_ratio(self) -> float:
        return (1 + math.log2(self.k)) / self.k


def info_rates(code: SpannedCode) -> Rates:
    """Information rate over Z_2k and over the binary image."""
    if len(code.type.blocks) != 1:
        raise OutOfRange("rates are defined for single-modulus codes")
    if code.size < 1:
        raise DegenerateCode("empty code")
    m, n = code.type.blocks[0]
    k = m // 2
    N = code.size
    return Rates(N, n, k, math.log(N) / (n * math.log(m)), math.log2(N) / (k * n))


@dataclass(frozen=True)
class TypeReduction:
    type: MixedGroupType
    scales: tuple[int, ...]
    evenness_restored: tuple[bool, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def notes(self) -> list[str]:
        out = []
        for b, fired in enumerate(self.evenness_restored):
            if fired:
                out.append(f"block {b}: natural reduction has odd order; "
                           f"kept even modulus {self.type.blocks[b][0]}")
        return out


def reduce_modulus(values: Iterable[int], modulus: int) -> tuple[int, int, bool]:
    """Smallest even modulus a set of residues embeds into by rescaling.

    Returns ``(reduced_modulus, scale, evenness_restored)``.
    """
    t = reduce(math.gcd, values, modulus)
    reduced = modulus // t
    if reduced % 2:
        # t is even whenever modulus/t is odd, so doubling stays a divisor
        return reduced * 2, t // 2, True
    return reduced, t, False


def minimize_type(code: SpannedCode) -> TypeReduction:
    blocks, scales, fired = [], [], []
    start = 0
    for m, n in code.type.blocks:
        values = (c[i] for c in code.codewords for i in range(start, start + n))
        reduced, scale, restored = reduce_modulus(values, m)
        blocks.append((reduced, n))
        scales.append(scale)
        fired.append(restored)
        start += n
    per_coord = [s for s, (_, n) in zip(scales, code.type.blocks) for _ in range(n)]
    gens = tuple(tuple(v // s for v, s in zip(g, per_coord)) for g in code.spec.generators)
    return TypeReduction(MixedGroupType(tuple(blocks)), tuple(scales), tuple(fired), gens)
