"""Binary words, coordinate permutations, and propelinear codes.

A propelinear code pairs every codeword ``x`` with a coordinate permutation
``pi_x``; the action ``x * v = x + pi_x(v)`` then makes the code a group.
The checkers here never raise on a mathematical failure; they return a
report carrying the first counterexample found.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import LengthMismatch, NotACodeword, OutOfRange

DEFAULT_EXHAUSTIVE_LIMIT = 2**20
DEFAULT_SAMPLES = 10**5
DEFAULT_SEED = 0


@dataclass(frozen=True, order=True)
class BinaryWord:
    """Fixed-length bit vector; position 1 is the leftmost bit."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise OutOfRange(f"bits must be 0/1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_str(cls, s: str) -> BinaryWord:
        s = s.strip().replace("|", "")
        if not s or set(s) - {"0", "1"}:
            raise OutOfRange(f"not a bit string: {s!r}")
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def from_int(cls, value: int, n: int) -> BinaryWord:
        return cls(tuple((value >> (n - 1 - p)) & 1 for p in range(n)))

    @classmethod
    def zero(cls, n: int) -> BinaryWord:
        return cls((0,) * n)

    def to_int(self) -> int:
        out = 0
        for b in self.bits:
            out = (out << 1) | b
        return out

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, p):
        return self.bits[p]

    def __add__(self, other: BinaryWord) -> BinaryWord:
        if len(self) != len(other):
            raise LengthMismatch(f"word lengths differ: {len(self)} vs {len(other)}")
        return BinaryWord(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __or__(self, other: BinaryWord) -> BinaryWord:
        """Concatenation, written ``(x | y)``."""
        return BinaryWord(self.bits + other.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"BinaryWord('{self}')"


def weight(x: BinaryWord) -> int:
    return x.weight


def hamming_distance(x: BinaryWord, y: BinaryWord) -> int:
    return (x + y).weight


def all_words(n: int) -> Iterator[BinaryWord]:
    for value in range(2**n):
        yield BinaryWord.from_int(value, n)


@dataclass(frozen=True)
class CoordinatePermutation:
    """Bijection on positions; ``images[p]`` is where position ``p`` goes (0-based).

    Applying to a word moves the bit at ``p`` to ``images[p]``.
    ``a.compose(b)`` is ``a o b``: apply ``b`` first.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise OutOfRange(f"not a permutation: {self.images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> CoordinatePermutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> CoordinatePermutation:
        """Build from 1-based cycle notation, e.g. ``[(1, 3, 2)]`` sends 1->3->2->1."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def direct_sum(cls, perms: Iterable[CoordinatePermutation]) -> CoordinatePermutation:
        images: list[int] = []
        for perm in perms:
            offset = len(images)
            images.extend(offset + i for i in perm.images)
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def apply(self, w: BinaryWord) -> BinaryWord:
        if len(w) != len(self):
            raise LengthMismatch(f"word length {len(w)} vs permutation degree {len(self)}")
        out = [0] * len(w)
        for p, b in enumerate(w.bits):
            out[self.images[p]] = b
        return BinaryWord(tuple(out))

    __call__ = apply

    def compose(self, other: CoordinatePermutation) -> CoordinatePermutation:
        if len(other) != len(self):
            raise LengthMismatch("permutation degrees differ")
        return CoordinatePermutation(tuple(self.images[i] for i in other.images))

    def __matmul__(self, other: CoordinatePermutation) -> CoordinatePermutation:
        return self.compose(other)

    def inverse(self) -> CoordinatePermutation:
        inv = [0] * len(self)
        for p, q in enumerate(self.images):
            inv[q] = p
        return CoordinatePermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(p == q for p, q in enumerate(self.images))

    def __pow__(self, e: int) -> CoordinatePermutation:
        base = self if e >= 0 else self.inverse()
        out = CoordinatePermutation.identity(len(self))
        for _ in range(abs(e)):
            out = out.compose(base)
        return out


@dataclass(frozen=True)
class PropelinearCode:
    """A binary code with an explicit (candidate) permutation per codeword.

    Nothing about the axioms is enforced here, so deliberately broken
    assignments can be built and fed to the checkers.
    """

    length: int
    perm_of: Mapping[BinaryWord, CoordinatePermutation]
    codewords: tuple[BinaryWord, ...] = field(init=False)

    def __post_init__(self):
        if not self.perm_of:
            raise LengthMismatch("a code needs at least one codeword")
        for x, perm in self.perm_of.items():
            if len(x) != self.length or len(perm) != self.length:
                raise LengthMismatch(f"codeword {x} or its permutation has wrong length")
        object.__setattr__(self, "perm_of", dict(self.perm_of))
        object.__setattr__(self, "codewords", tuple(sorted(self.perm_of)))

    @classmethod
    def linear(cls, words: Iterable[BinaryWord]) -> PropelinearCode:
        """Every codeword gets the identity permutation."""
        words = list(words)
        n = len(words[0])
        ident = CoordinatePermutation.identity(n)
        return cls(n, {w: ident for w in words})

    def __len__(self) -> int:
        return len(self.codewords)

    def __contains__(self, w) -> bool:
        return w in self.perm_of

    def permutation(self, x: BinaryWord) -> CoordinatePermutation:
        try:
            return self.perm_of[x]
        except KeyError:
            raise NotACodeword(f"{x} is not a codeword") from None

    def star(self, x: BinaryWord, v: BinaryWord) -> BinaryWord:
        return star(self, x, v)


def star(code: PropelinearCode, x: BinaryWord, v: BinaryWord) -> BinaryWord:
    """``x * v = x + pi_x(v)``."""
    if len(v) != code.length:
        raise LengthMismatch(f"vector length {len(v)} vs code length {code.length}")
    return x + code.permutation(x).apply(v)


def codeword_inverse(code: PropelinearCode, x: BinaryWord) -> BinaryWord:
    return code.permutation(x).inverse().apply(x)


def translation_witness(k: int) -> BinaryWord:
    """The word ``(1, 0, ..., 0, 1)`` of length k that breaks translation invariance of Phi(Z_2k)."""
    if k <= 2:
        raise OutOfRange(f"witness exists only for k > 2, got k={k}")
    return BinaryWord((1,) + (0,) * (k - 2) + (1,))


# -- reports -----------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    passed: bool
    checked: int
    exhaustive: bool = True
    witness: dict | None = None


@dataclass
class PropelinearReport:
    axioms: list[AxiomResult]
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def __getitem__(self, name: str) -> AxiomResult:
        for a in self.axioms:
            if a.name == name:
                return a
        raise KeyError(name)


@dataclass
class CompatibilityReport:
    passed: bool
    exhaustive: bool
    vectors_checked: int
    seed: int | None = None
    witness: dict | None = None


@dataclass
class TranslationReport:
    invariant: bool
    exhaustive: bool
    triples_checked: int
    seed: int | None = None
    witness: dict | None = None


def _space(n: int, limit: int, samples: int, seed: int) -> tuple[bool, list[BinaryWord]]:
    if 2**n <= limit:
        return True, list(all_words(n))
    rng = random.Random(seed)
    return False, [BinaryWord.from_int(rng.getrandbits(n), n) for _ in range(samples)]


def _pairs(items: Sequence, limit: int, samples: int, rng: random.Random, arity: int):
    if len(items) ** arity <= limit:
        return True, itertools.product(items, repeat=arity)
    return False, (tuple(rng.choice(items) for _ in range(arity)) for _ in range(samples))


def check_propelinear(
    code: PropelinearCode,
    pair_limit: int = 10**6,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> PropelinearReport:
    """Check identity, closure, coherence, inverses and associativity of the star product.

    Quantifiers over pairs/triples are exhaustive while the number of tuples stays
    under ``pair_limit``; otherwise ``samples`` tuples are drawn with ``seed``.
    """
    words = code.codewords
    n = code.length
    zero = BinaryWord.zero(n)
    rng = random.Random(seed)
    sampled = False
    axioms = []

    if zero not in code:
        axioms.append(AxiomResult("identity", False, 1, witness={"missing": zero}))
    else:
        ok = code.permutation(zero).is_identity()
        axioms.append(AxiomResult("identity", ok, 1, witness=None if ok else {
            "x": zero, "permutation": list(code.permutation(zero).images)}))

    closure = AxiomResult("closure", True, 0)
    coherence = AxiomResult("coherence", True, 0)
    exhaustive, pairs = _pairs(words, pair_limit, samples, rng, 2)
    closure.exhaustive = coherence.exhaustive = exhaustive
    sampled |= not exhaustive
    table: dict[tuple[BinaryWord, BinaryWord], BinaryWord] = {}
    for x, y in pairs:
        z = star(code, x, y)
        if exhaustive:
            table[x, y] = z
        closure.checked += 1
        if z not in code:
            if closure.passed:
                closure.passed = False
                closure.witness = {"x": x, "y": y, "x*y": z}
            continue
        coherence.checked += 1
        if coherence.passed and code.permutation(z) != code.permutation(x) @ code.permutation(y):
            coherence.passed = False
            coherence.witness = {"x": x, "y": y, "z": z}
    axioms += [closure, coherence]

    inverses = AxiomResult("inverses", True, 0)
    for x in words:
        inverses.checked += 1
        inv = codeword_inverse(code, x)
        if inv not in code:
            inverses.passed = False
            inverses.witness = {"x": x, "inverse": inv}
            break
    axioms.append(inverses)

    assoc = AxiomResult("associativity", True, 0)
    if closure.passed:
        exhaustive, triples = _pairs(words, pair_limit, samples, rng, 3)
        assoc.exhaustive = exhaustive
        sampled |= not exhaustive
        if table and exhaustive:
            def prod(a, b):
                return table[a, b]
        else:
            def prod(a, b):
                return star(code, a, b)
        for x, y, z in triples:
            assoc.checked += 1
            left = prod(prod(x, y), z)
            right = prod(x, prod(y, z))
            if left != right:
                assoc.passed = False
                assoc.witness = {"x": x, "y": y, "z": z}
                break
    else:
        assoc.passed = False
        assoc.witness = {"reason": "closure failed"}
    axioms.append(assoc)
    return PropelinearReport(axioms, seed if sampled else None)


def check_hamming_compatible(
    code: PropelinearCode,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    action=None,
) -> CompatibilityReport:
    """Verify ``d(x, x * v) == wt(v)`` for every codeword x and every (or sampled) v.

    ``action(x, v)`` overrides the star action; with the star action of a
    genuine permutation the identity holds automatically.
    """
    n = code.length
    exhaustive = 2**n <= exhaustive_limit
    if exhaustive:
        ints = np.arange(2**n, dtype=np.int64)
    else:
        rng = random.Random(seed)
        ints = np.array([rng.getrandbits(n) for _ in range(samples)], dtype=np.int64)
    seed_used = None if exhaustive else seed
    # rows are vectors, column p is position p + 1
    space = ((ints[:, None] >> np.arange(n - 1, -1, -1)) & 1).astype(np.uint8)
    weights = space.sum(axis=1)
    checked = 0
    for x in code.codewords:
        if action is None:
            xb = np.array(x.bits, dtype=np.uint8)
            moved = space[:, np.argsort(code.permutation(x).images)]
            dist = ((moved ^ xb) ^ xb).sum(axis=1)
            bad = np.flatnonzero(dist != weights)
            if bad.size:
                v = BinaryWord(tuple(int(b) for b in space[bad[0]]))
                return CompatibilityReport(False, exhaustive, checked + int(bad[0]) + 1, seed_used,
                                           {"x": x, "v": v, "distance": int(dist[bad[0]]),
                                            "weight": v.weight})
            checked += len(space)
            continue
        for row in space:
            v = BinaryWord(tuple(int(b) for b in row))
            checked += 1
            d = hamming_distance(x, action(x, v))
            if d != v.weight:
                return CompatibilityReport(False, exhaustive, checked, seed_used,
                                           {"x": x, "v": v, "distance": d, "weight": v.weight})
    return CompatibilityReport(True, exhaustive, checked, seed_used)


def check_translation_invariant(
    code: PropelinearCode,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    candidates: Iterable[BinaryWord] = (),
) -> TranslationReport:
    """Decide whether ``d(x, y) == d(x * u, y * u)`` for all codewords x, y and vectors u.

    Vectors in ``candidates`` are tried before the rest of the space, which
    lets callers put a known witness first so the reported one is stable.
    """
    exhaustive, space = _space(code.length, exhaustive_limit, samples, seed)
    candidates = list(candidates)
    seen = set(candidates)
    ordered = candidates + [u for u in space if u not in seen]
    words = code.codewords
    checked = 0
    for u in ordered:
        moved = [star(code, x, u) for x in words]
        for a, x in enumerate(words):
            for b in range(a + 1, len(words)):
                checked += 1
                before = hamming_distance(x, words[b])
                after = hamming_distance(moved[a], moved[b])
                if before != after:
                    return TranslationReport(False, exhaustive, checked, None if exhaustive else seed, {
                        "x": x, "y": words[b], "u": u, "d(x,y)": before, "d(x*u,y*u)": after})
    return TranslationReport(True, exhaustive, checked, None if exhaustive else seed)
