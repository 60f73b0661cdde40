"""Boolean and generalized (Z4-valued) Boolean functions.

Truth tables are indexed so that x1 is the most significant bit of the index,
i.e. table[i] = f(x1, ..., xn) with i = x1*2^(n-1) + ... + xn.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ANFSyntaxError, InputError, PreconditionError
from .z4vec import Z4Vector

MAX_BENT_ARITY = 6


class GaussianInteger(NamedTuple):
    re: int
    im: int

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im


# omega = i, so omega^k for k = 0..3
_OMEGA_POWERS = (GaussianInteger(1, 0), GaussianInteger(0, 1),
                 GaussianInteger(-1, 0), GaussianInteger(0, -1))


def _check_table(table: Sequence[int], modulus: int) -> tuple[int, int]:
    size = len(table)
    n = size.bit_length() - 1
    if size < 2 or 1 << n != size:
        raise InputError(f"truth table length {size} is not 2^n with n >= 1")
    if any(not 0 <= t < modulus for t in table):
        raise InputError(f"truth table entries must lie in 0..{modulus - 1}")
    return n, size


@dataclass(frozen=True)
class BooleanFunction:
    arity: int
    table: tuple[int, ...]

    def __init__(self, table: Sequence[int]):
        tab = tuple(int(t) for t in table)
        n, _ = _check_table(tab, 2)
        object.__setattr__(self, "arity", n)
        object.__setattr__(self, "table", tab)

    @classmethod
    def from_string(cls, bits: str) -> BooleanFunction:
        bits = bits.strip()
        if not bits or set(bits) - {"0", "1"}:
            raise InputError(f"invalid truth table string {bits!r}")
        return cls(int(b) for b in bits)

    @classmethod
    def from_anf(cls, text: str, arity: int) -> BooleanFunction:
        return anf_parse(text, arity)

    def __str__(self) -> str:
        return "".join(map(str, self.table))

    def zero_count(self) -> int:
        return self.table.count(0)


@dataclass(frozen=True)
class GeneralizedBooleanFunction:
    arity: int
    table: tuple[int, ...]

    def __init__(self, table: Sequence[int]):
        tab = tuple(int(t) for t in table)
        n, _ = _check_table(tab, 4)
        object.__setattr__(self, "arity", n)
        object.__setattr__(self, "table", tab)

    def __str__(self) -> str:
        return "".join(map(str, self.table))


# ---------------------------------------------------------------------------
# ANF parsing

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<const>[01])|(?P<op>[+*]))")


def anf_parse(text: str, arity: int) -> BooleanFunction:
    """Parse an algebraic normal form such as ``"x1 + x1*x2"``.

    Grammar: ``expr := term ('+' term)*``, ``term := '0' | '1' | factor ('*' factor)*``,
    ``factor := 'x' <index>``. Products must be written with ``*``.
    """
    if arity < 1:
        raise InputError("arity must be positive")
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ANFSyntaxError(f"unexpected character {text[at]!r}", at)
        if m.group("var"):
            idx = int(m.group("idx"))
            if not 1 <= idx <= arity:
                raise InputError(f"variable x{idx} out of range 1..{arity} at position {m.start('var')}")
            tokens.append(("var", idx, m.start("var")))
        elif m.group("const"):
            tokens.append(("const", int(m.group("const")), m.start("const")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    end = len(text)

    # each term is a frozenset of variable indices (empty set = constant 1), or None for 0
    terms: list[frozenset[int] | None] = []
    i = 0

    def expect_operand(i: int) -> int:
        if i >= len(tokens):
            raise ANFSyntaxError("unexpected end of expression", end)
        return i

    while True:
        i = expect_operand(i)
        kind, val, at = tokens[i]
        if kind == "const":
            terms.append(frozenset() if val == 1 else None)
            i += 1
        elif kind == "var":
            mono = {val}
            i += 1
            while i < len(tokens) and tokens[i][:2] == ("op", "*"):
                i = expect_operand(i + 1)
                k2, v2, at2 = tokens[i]
                if k2 != "var":
                    raise ANFSyntaxError("expected variable after '*'", at2)
                mono.add(v2)
                i += 1
            terms.append(frozenset(mono))
        else:
            raise ANFSyntaxError(f"unexpected operator {val!r}", at)
        if i == len(tokens):
            break
        kind, val, at = tokens[i]
        if (kind, val) != ("op", "+"):
            raise ANFSyntaxError(f"expected '+' but found {val!r}", at)
        i += 1

    table = []
    for idx in range(1 << arity):
        bits = [(idx >> (arity - j)) & 1 for j in range(1, arity + 1)]
        val = 0
        for term in terms:
            if term is not None and all(bits[v - 1] for v in term):
                val ^= 1
        table.append(val)
    return BooleanFunction(table)


# ---------------------------------------------------------------------------
# Walsh-Hadamard transforms

def _fwht(values: np.ndarray) -> np.ndarray:
    """In-place butterfly over the last axis (length 2^n), exact int64."""
    a = np.array(values, dtype=np.int64, copy=True)
    size = a.shape[-1]
    h = 1
    while h < size:
        a = a.reshape(a.shape[:-1] + (size // (2 * h), 2, h))
        x = a[..., 0, :].copy()
        y = a[..., 1, :]
        a[..., 0, :] = x + y
        a[..., 1, :] = x - y
        a = a.reshape(a.shape[:-3] + (size,))
        h *= 2
    return a


def walsh_hadamard(f: BooleanFunction) -> list[int]:
    signs = 1 - 2 * np.asarray(f.table, dtype=np.int64)
    return [int(w) for w in _fwht(signs)]


def is_bent(f: BooleanFunction) -> bool:
    n = f.arity
    if n % 2:
        return False
    target = 1 << (n // 2)
    return all(abs(w) == target for w in walsh_hadamard(f))


def enumerate_bent(n: int) -> list[BooleanFunction]:
    """All bent functions of arity 2 or 4 in lexicographic truth-table order."""
    if n not in (2, 4):
        raise PreconditionError(f"bent enumeration supports arity 2 or 4, not {n}")
    size = 1 << n
    idx = np.arange(1 << size, dtype=np.int64)
    # row r is the table whose entry j is bit (size-1-j) of r, so row order is lexicographic
    shifts = np.arange(size - 1, -1, -1, dtype=np.int64)
    tables = (idx[:, None] >> shifts[None, :]) & 1
    spectra = _fwht(1 - 2 * tables)
    bent = np.all(np.abs(spectra) == 1 << (n // 2), axis=1)
    return [BooleanFunction(row) for row in tables[bent].tolist()]


def zero_count_values(n: int) -> set[int]:
    """Admissible zero counts of a bent function: 2^(n-1) +- 2^(n/2-1)."""
    if n < 2 or n % 2:
        raise PreconditionError(f"bent functions need even arity >= 2, got {n}")
    half = 1 << (n // 2 - 1)
    return {(1 << (n - 1)) - half, (1 << (n - 1)) + half}


def gbent_from_bent_pair(a: BooleanFunction, b: BooleanFunction) -> GeneralizedBooleanFunction:
    """f(x, y) = 2a(x)(1+y) + 2b(x)y + y with y as the least significant index bit."""
    if a.arity != b.arity:
        raise PreconditionError(f"arity mismatch: {a.arity} != {b.arity}")
    if a.arity > MAX_BENT_ARITY:
        raise PreconditionError(f"arity {a.arity} exceeds supported maximum {MAX_BENT_ARITY}")
    for name, g in (("a", a), ("b", b)):
        if not is_bent(g):
            raise PreconditionError(f"{name} = {g} is not bent")
    table = []
    for ax, bx in zip(a.table, b.table):
        table.append((2 * ax) % 4)
        table.append((2 * bx + 1) % 4)
    return GeneralizedBooleanFunction(table)


def generalized_walsh_hadamard(f: GeneralizedBooleanFunction) -> list[GaussianInteger]:
    re_part = np.array([_OMEGA_POWERS[t].re for t in f.table], dtype=np.int64)
    im_part = np.array([_OMEGA_POWERS[t].im for t in f.table], dtype=np.int64)
    re_w, im_w = _fwht(re_part), _fwht(im_part)
    return [GaussianInteger(int(r), int(i)) for r, i in zip(re_w, im_w)]


def is_gbent(f: GeneralizedBooleanFunction) -> bool:
    # squared modulus avoids the irrational 2^(n/2) for odd n
    target = 1 << f.arity
    return all(w.norm() == target for w in generalized_walsh_hadamard(f))


def truth_vector(f: GeneralizedBooleanFunction | BooleanFunction) -> Z4Vector:
    return Z4Vector(f.table)


def bent_pairs(n: int) -> list[tuple[BooleanFunction, BooleanFunction]]:
    """All ordered pairs of bent functions of arity n (n in {2, 4})."""
    bents = enumerate_bent(n)
    return list(itertools.product(bents, repeat=2))
