"""Binary linear codes with words packed into Python ints (bit i = coordinate i)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CapacityError, DimensionError, InconsistentInputError, InputError

MAX_ENUM_DIM = 26
MAX_SUPPORT_BOUND = 4


def bits_to_int(bits: Sequence[int]) -> int:
    word = 0
    for i, b in enumerate(bits):
        if b & 1:
            word |= 1 << i
    return word


def int_to_bits(word: int, n: int) -> tuple[int, ...]:
    return tuple((word >> i) & 1 for i in range(n))


def popcount(word: int) -> int:
    return bin(word).count("1")


def cyclic_shift_bits(word: int, n: int, k: int = 1) -> int:
    k %= n
    mask = (1 << n) - 1
    return ((word << k) | (word >> (n - k))) & mask


def _rref(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivot of a row is its lowest set bit."""
    basis: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for b, p in zip(basis, pivots):
            if (r >> p) & 1:
                r ^= b
        if r:
            p = (r & -r).bit_length() - 1
            for i, b in enumerate(basis):
                if (b >> p) & 1:
                    basis[i] = b ^ r
            basis.append(r)
            pivots.append(p)
    order = sorted(range(len(basis)), key=pivots.__getitem__)
    return [basis[i] for i in order], [pivots[i] for i in order]


@dataclass(frozen=True)
class BinaryWeightDistribution:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise DimensionError(f"expected {self.n + 1} counts, got {len(self.counts)}")

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    def min_weight(self) -> int | None:
        return next((w for w, c in enumerate(self.counts) if w and c), None)


@dataclass(frozen=True)
class BinaryCode:
    length: int
    generators: tuple[int, ...]
    basis: tuple[int, ...] = field(init=False, repr=False, compare=False)
    pivots: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, length: int, generators: Iterable[int | Sequence[int]] = ()):
        if length < 1:
            raise DimensionError("code length must be positive")
        gens = []
        for g in generators:
            if not isinstance(g, int):
                if len(g) != length:
                    raise DimensionError(f"generator of length {len(g)} in a length-{length} code")
                g = bits_to_int(g)
            elif g >> length:
                raise DimensionError("generator has bits beyond the code length")
            gens.append(g)
        basis, pivots = _rref(gens)
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def from_text(cls, text: str) -> BinaryCode:
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise InputError("empty generator matrix")
        n = len(rows[0])
        for r in rows:
            if len(r) != n or set(r) - {"0", "1"}:
                raise InputError(f"bad generator row {r!r}")
        return cls(n, [[int(c) for c in r] for r in rows])

    def to_text(self) -> str:
        return "\n".join("".join(map(str, int_to_bits(b, self.length))) for b in self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __contains__(self, word: int | Sequence[int]) -> bool:
        if not isinstance(word, int):
            word = bits_to_int(word)
        for b, p in zip(self.basis, self.pivots):
            if (word >> p) & 1:
                word ^= b
        return word == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.length == other.length and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.length, self.basis))

    def codewords(self):
        """Iterate all 2^k codewords (Gray-code order)."""
        if self.dimension > MAX_ENUM_DIM:
            raise CapacityError(f"dimension {self.dimension} exceeds enumeration limit {MAX_ENUM_DIM}")
        x = 0
        yield x
        for step in range(1, 1 << self.dimension):
            x ^= self.basis[(step & -step).bit_length() - 1]
            yield x

    def parity_check_columns(self) -> list[int]:
        """Syndrome of each unit vector with respect to the dual basis."""
        h = dual(self).basis
        return [sum(((row >> i) & 1) << r for r, row in enumerate(h)) for i in range(self.length)]

    def subcode_vanishing_on(self, positions: Iterable[int]) -> BinaryCode:
        """The subcode of words that are zero on all given coordinates."""
        positions = list(positions)
        rows = list(self.basis)
        for p in positions:
            idx = next((i for i, r in enumerate(rows) if (r >> p) & 1), None)
            if idx is None:
                continue
            piv = rows.pop(idx)
            rows = [r ^ piv if (r >> p) & 1 else r for r in rows]
        return BinaryCode(self.length, rows)


def dimension(code: BinaryCode) -> int:
    return code.dimension


def dual(code: BinaryCode) -> BinaryCode:
    n = code.length
    pivset = set(code.pivots)
    rows = []
    for f in range(n):
        if f in pivset:
            continue
        v = 1 << f
        for b, p in zip(code.basis, code.pivots):
            if (b >> f) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode(n, rows)


def weight_distribution(code: BinaryCode) -> BinaryWeightDistribution:
    k, n = code.dimension, code.length
    if k > MAX_ENUM_DIM:
        raise CapacityError(
            f"dimension {k} exceeds enumeration limit {MAX_ENUM_DIM}; use a closed form or MacWilliams")
    if n <= 64:
        counts = kernels.binary_weight_counts(list(code.basis), n)
        return BinaryWeightDistribution(n, tuple(int(c) for c in counts))
    counts = [0] * (n + 1)
    for w in code.codewords():
        counts[popcount(w)] += 1
    return BinaryWeightDistribution(n, tuple(counts))


def krawtchouk(n: int, j: int, i: int) -> int:
    return sum((-1) ** l * comb(i, l) * comb(n - i, j - l) for l in range(j + 1))


def macwilliams(dist: BinaryWeightDistribution, k: int) -> BinaryWeightDistribution:
    """Dual weight distribution of an [n, k] code with distribution ``dist``."""
    n = dist.n
    denom = 1 << k
    out = []
    for j in range(n + 1):
        num = sum(a * krawtchouk(n, j, i) for i, a in enumerate(dist.counts) if a)
        if num % denom or num < 0:
            raise InconsistentInputError(
                f"A'_{j} = {num}/{denom} is not a non-negative integer; distribution and k={k} disagree")
        out.append(num // denom)
    return BinaryWeightDistribution(n, tuple(out))


def is_even(code: BinaryCode, confirm: bool = False) -> bool:
    ok = all(popcount(b) % 2 == 0 for b in code.basis)
    if ok and confirm and code.dimension <= MAX_ENUM_DIM:
        ok = all(w % 2 == 0 for w, c in weight_distribution(code).nonzero().items())
    return ok


def is_doubly_even(code: BinaryCode, confirm: bool = False) -> bool:
    # doubly-even generators that meet pairwise in an even number of points
    basis = code.basis
    ok = all(popcount(b) % 4 == 0 for b in basis) and all(
        popcount(x & y) % 2 == 0 for x, y in itertools.combinations(basis, 2))
    if ok and confirm and code.dimension <= MAX_ENUM_DIM:
        ok = all(w % 4 == 0 for w in weight_distribution(code).nonzero())
    return ok


def contains_all_ones(code: BinaryCode) -> bool:
    return (1 << code.length) - 1 in code


def is_self_orthogonal(code: BinaryCode) -> bool:
    return all(popcount(x & y) % 2 == 0 for x in code.basis for y in code.basis)


def is_self_dual(code: BinaryCode) -> bool:
    return 2 * code.dimension == code.length and is_self_orthogonal(code)


def is_cyclic(code: BinaryCode) -> bool:
    return all(cyclic_shift_bits(b, code.length) in code for b in code.basis)


def min_distance(code: BinaryCode) -> int | None:
    return weight_distribution(code).min_weight()


def min_weight_codewords(code: BinaryCode, bound: int) -> list[tuple[int, ...]]:
    """All codewords of weight <= bound, found by support enumeration with a
    parity-check membership test. Sorted by (weight, support)."""
    if bound > MAX_SUPPORT_BOUND:
        raise CapacityError(f"support bound {bound} exceeds limit {MAX_SUPPORT_BOUND}")
    n = code.length
    cols = code.parity_check_columns()
    found: list[tuple[int, ...]] = [tuple([0] * n)]
    wide = n - code.dimension > 64
    syn = None if wide else np.array(cols, dtype=np.uint64)
    for w in range(1, bound + 1):
        combos = list(itertools.combinations(range(n), w))
        if not combos:
            continue
        if wide:
            hits = [c for c in combos if not _xor_all(cols[i] for i in c)]
        else:
            idx = np.array(combos, dtype=np.int64)
            acc = np.bitwise_xor.reduce(syn[idx], axis=1)
            hits = [combos[i] for i in np.flatnonzero(acc == 0)]
        for c in hits:
            v = [0] * n
            for i in c:
                v[i] = 1
            found.append(tuple(v))
    return found


def _xor_all(values) -> int:
    acc = 0
    for v in values:
        acc ^= v
    return acc
