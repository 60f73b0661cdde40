"""Vectors over Z4: symbol counts, weights, inner products and the Gray map."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionError, InputError

# psi(0)=00, psi(1)=01, psi(2)=11, psi(3)=10
GRAY_PAIRS = ((0, 0), (0, 1), (1, 1), (1, 0))


class SymbolCounts(NamedTuple):
    n0: int
    n1: int
    n2: int
    n3: int


class Weights(NamedTuple):
    hamming: int
    lee: int
    euclidean: int


@dataclass(frozen=True)
class Z4Vector:
    """Immutable vector over Z4, stored as a tuple of residues 0..3."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        ent = tuple(int(e) % 4 for e in entries)
        if not ent:
            raise DimensionError("Z4Vector must have positive length")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_string(cls, text: str) -> Z4Vector:
        """Parse a digit string such as ``"01010321"``."""
        text = text.strip()
        bad = [i for i, ch in enumerate(text) if ch not in "0123"]
        if bad or not text:
            pos = bad[0] if bad else 0
            raise InputError(f"invalid Z4 digit string {text!r} (position {pos})")
        return cls(int(ch) for ch in text)

    @classmethod
    def zero(cls, n: int) -> Z4Vector:
        return cls([0] * n)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "".join(map(str, self.entries))

    def __add__(self, other: Z4Vector) -> Z4Vector:
        return add(self, other)

    def __neg__(self) -> Z4Vector:
        return scale(3, self)

    def __rmul__(self, c: int) -> Z4Vector:
        return scale(c, self)

    @property
    def length(self) -> int:
        return len(self.entries)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.entries) if e)

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self.entries)


def _check_lengths(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} != {len(y)}")


def counts(v: Sequence[int]) -> SymbolCounts:
    c = [0, 0, 0, 0]
    for e in v:
        c[e % 4] += 1
    return SymbolCounts(*c)


def weights(v: Sequence[int]) -> Weights:
    _, n1, n2, n3 = counts(v)
    return Weights(n1 + n2 + n3, n1 + 2 * n2 + n3, n1 + 4 * n2 + n3)


def hamming_weight(v: Sequence[int]) -> int:
    return weights(v).hamming


def lee_weight(v: Sequence[int]) -> int:
    return weights(v).lee


def euclidean_weight(v: Sequence[int]) -> int:
    return weights(v).euclidean


def inner_product(x: Sequence[int], y: Sequence[int]) -> int:
    _check_lengths(x, y)
    return sum(a * b for a, b in zip(x, y)) % 4


def gray_map(v: Sequence[int]) -> tuple[int, ...]:
    """Componentwise Gray map; output has length ``2 * len(v)``."""
    out: list[int] = []
    for e in v:
        out.extend(GRAY_PAIRS[e % 4])
    return tuple(out)


def add(x: Sequence[int], y: Sequence[int]) -> Z4Vector:
    _check_lengths(x, y)
    return Z4Vector((a + b) % 4 for a, b in zip(x, y))


def scale(c: int, x: Sequence[int]) -> Z4Vector:
    return Z4Vector((c * a) % 4 for a in x)


def product(x: Sequence[int], y: Sequence[int]) -> Z4Vector:
    """Componentwise product ``(x1*y1, ..., xn*yn)``."""
    _check_lengths(x, y)
    return Z4Vector((a * b) % 4 for a, b in zip(x, y))


def cyclic_shift(x: Sequence[int], k: int = 1) -> Z4Vector:
    """Right shift: the entry at index i moves to index (i + k) mod n."""
    n = len(x)
    k %= n
    ent = tuple(x)
    return Z4Vector(ent[n - k:] + ent[:n - k])


def to_masks(v: Sequence[int]) -> tuple[int, int]:
    """Split into bit masks (lo, hi) with v[i] = lo_i + 2*hi_i; bit i is coordinate i."""
    lo = hi = 0
    for i, e in enumerate(v):
        if e & 1:
            lo |= 1 << i
        if e & 2:
            hi |= 1 << i
    return lo, hi


def from_masks(lo: int, hi: int, n: int) -> Z4Vector:
    return Z4Vector(((lo >> i) & 1) | (((hi >> i) & 1) << 1) for i in range(n))
