"""Exact arithmetic over Z_2k and Z_2k^n, with the Lee metric."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthMismatch, ModulusMismatch, OutOfRange


def check_modulus(modulus: int) -> int:
    if not isinstance(modulus, int) or modulus < 2 or modulus % 2:
        raise OutOfRange(f"modulus must be an even integer >= 2, got {modulus!r}")
    return modulus


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z_m, stored canonically in [0, m)."""

    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise OutOfRange(f"{self.value} not in [0, {self.modulus})")

    @classmethod
    def of(cls, value: int, modulus: int) -> Residue:
        """Build from any integer representative."""
        check_modulus(modulus)
        return cls(value % modulus, modulus)

    def __add__(self, other: Residue) -> Residue:
        return residue_add(self, other)

    def __neg__(self) -> Residue:
        return Residue((-self.value) % self.modulus, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        return residue_add(self, -other)


@dataclass(frozen=True, order=True)
class ZkVector:
    """A vector in Z_m^n."""

    coords: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if not self.coords:
            raise LengthMismatch("vector length must be >= 1")
        for c in self.coords:
            if not 0 <= c < self.modulus:
                raise OutOfRange(f"coordinate {c} not in [0, {self.modulus})")

    @classmethod
    def of(cls, coords: Sequence[int], modulus: int) -> ZkVector:
        check_modulus(modulus)
        return cls(tuple(c % modulus for c in coords), modulus)

    @classmethod
    def zero(cls, n: int, modulus: int) -> ZkVector:
        return cls((0,) * n, modulus)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: ZkVector) -> ZkVector:
        return vector_add(self, other)

    def __neg__(self) -> ZkVector:
        return vector_negate(self)

    def __sub__(self, other: ZkVector) -> ZkVector:
        return vector_add(self, vector_negate(other))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def _same_modulus(a, b) -> int:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli differ: {a.modulus} vs {b.modulus}")
    return a.modulus


def residue_add(a: Residue, b: Residue) -> Residue:
    m = _same_modulus(a, b)
    return Residue((a.value + b.value) % m, m)


def lee_weight_value(value: int, modulus: int) -> int:
    value %= modulus
    return min(value, modulus - value)


def lee_weight(a: Residue) -> int:
    return lee_weight_value(a.value, a.modulus)


def lee_distance(a: Residue, b: Residue) -> int:
    m = _same_modulus(a, b)
    return lee_weight_value(a.value - b.value, m)


def vector_add(u: ZkVector, v: ZkVector) -> ZkVector:
    m = _same_modulus(u, v)
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    return ZkVector(tuple((x + y) % m for x, y in zip(u.coords, v.coords)), m)


def vector_negate(u: ZkVector) -> ZkVector:
    return ZkVector(tuple((-x) % u.modulus for x in u.coords), u.modulus)


def vector_lee_weight(u: ZkVector) -> int:
    return sum(lee_weight_value(c, u.modulus) for c in u.coords)


def vector_lee_distance(u: ZkVector, v: ZkVector) -> int:
    return vector_lee_weight(u - v)
