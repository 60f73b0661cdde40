"""Linear codes over Z4.

A code is held as a list of generators; its standard form (unit pivots first,
then 2-pivots, both chosen leftmost-column / lowest-row) is computed once and
cached. Enumeration walks the decomposition C = {sum of b_i g_i} + 2*torsion,
b_i in {0, 1}, with the inner XOR walk delegated to the compiled kernel.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence

import numpy as np

from . import kernels
from .bincode import MAX_SUPPORT_BOUND, BinaryCode, min_weight_codewords, popcount
from .errors import CapacityError, ConstructionError, DimensionError, InputError
from .z4vec import Z4Vector, cyclic_shift, from_masks, inner_product, to_masks, weights

MAX_ENUM_BITS = 26
MAX_RESIDUE_ENUM_BITS = 20
MAX_LOW_WEIGHT_CANDIDATES = 20_000_000
MAX_EQUIV_LENGTH = 8

WeightKind = Literal["hamming", "lee", "euclidean"]
KINDS: tuple[WeightKind, ...] = ("hamming", "lee", "euclidean")


def kind_weight(kind: str, j: int, k: int) -> int:
    """Weight of a word with j odd entries and k entries equal to 2."""
    if kind == "hamming":
        return j + k
    if kind == "lee":
        return j + 2 * k
    if kind == "euclidean":
        return j + 4 * k
    raise InputError(f"unknown weight kind {kind!r}")


class Certificate(NamedTuple):
    holds: bool
    method: str

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class StandardForm:
    """Result of the Z4 row reduction.

    ``permutation[j]`` is the original coordinate placed at position j, so the
    permuted generator matrix is ``[[I, A, B1 + 2*B2], [0, 2I, 2D]]``.
    Rows are kept in original coordinates.
    """

    n: int
    unit_rows: tuple[tuple[int, ...], ...]
    unit_pivots: tuple[int, ...]
    two_rows: tuple[tuple[int, ...], ...]
    two_pivots: tuple[int, ...]
    permutation: tuple[int, ...]

    @property
    def k1(self) -> int:
        return len(self.unit_rows)

    @property
    def k2(self) -> int:
        return len(self.two_rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.unit_rows + self.two_rows

    def matrix(self) -> np.ndarray:
        """Generator matrix in permuted coordinates."""
        if not self.rows:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)[:, list(self.permutation)]

    def blocks(self) -> dict[str, np.ndarray]:
        k1, k2 = self.k1, self.k2
        g = self.matrix()
        b = g[:k1, k1 + k2:]
        return {
            "A": g[:k1, k1:k1 + k2],
            "B1": b % 2,
            "B2": b // 2,
            "D": g[k1:, k1 + k2:] // 2,
        }


def _standard_form(gens: np.ndarray, n: int) -> StandardForm:
    rest = gens.copy() % 4
    unit = np.zeros((0, n), dtype=np.int64)
    unit_piv: list[int] = []
    while rest.shape[0]:
        odd = rest % 2 == 1
        cols = np.flatnonzero(odd.any(axis=0))
        if cols.size == 0:
            break
        c = int(cols[0])
        r = int(np.flatnonzero(odd[:, c])[0])
        row = rest[r] * rest[r, c] % 4  # 1*1 = 3*3 = 1 mod 4
        rest = np.delete(rest, r, axis=0)
        rest = (rest - np.outer(rest[:, c], row)) % 4
        unit = (unit - np.outer(unit[:, c], row)) % 4
        unit = np.vstack([unit, row])
        unit_piv.append(c)
    halves = rest // 2  # all remaining entries are even
    two = np.zeros((0, n), dtype=np.int64)
    two_piv: list[int] = []
    while halves.shape[0]:
        nz = halves.any(axis=0)
        cols = np.flatnonzero(nz)
        if cols.size == 0:
            break
        c = int(cols[0])
        r = int(np.flatnonzero(halves[:, c])[0])
        row = halves[r].copy()
        halves = np.delete(halves, r, axis=0)
        halves = (halves + np.outer(halves[:, c], row)) % 2
        two = (two + np.outer(two[:, c], row)) % 2
        two = np.vstack([two, row])
        two_piv.append(c)
    # reduce the A block of unit rows to {0, 1}
    for t, c in enumerate(two_piv):
        high = unit[:, c] >= 2
        unit[high] = (unit[high] - 2 * two[t]) % 4
    used = set(unit_piv) | set(two_piv)
    perm = tuple(unit_piv + two_piv + [c for c in range(n) if c not in used])
    return StandardForm(
        n=n,
        unit_rows=tuple(tuple(int(x) for x in r) for r in unit),
        unit_pivots=tuple(unit_piv),
        two_rows=tuple(tuple(int(2 * x) for x in r) for r in two),
        two_pivots=tuple(two_piv),
        permutation=perm,
    )


@dataclass(frozen=True)
class SweTable:
    """Symmetrized weight enumerator: (n1+n3, n2) -> count."""

    n: int
    terms: dict[tuple[int, int], int]

    def total(self) -> int:
        return sum(self.terms.values())

    def distribution(self, kind: WeightKind) -> Z4WeightDistribution:
        out: dict[int, int] = {}
        for (j, k), c in self.terms.items():
            w = kind_weight(kind, j, k)
            out[w] = out.get(w, 0) + c
        return Z4WeightDistribution(kind, dict(sorted(out.items())))

    def as_list(self) -> list[dict[str, int]]:
        return [{"j": j, "k": k, "count": c} for (j, k), c in sorted(self.terms.items())]


@dataclass(frozen=True)
class Z4WeightDistribution:
    kind: str
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def min_nonzero(self) -> int | None:
        return next((w for w in sorted(self.counts) if w and self.counts[w]), None)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(c for _, c in sorted(self.counts.items()) if c)


class Z4Code:
    """Z4-submodule of Z4^n given by generators."""

    def __init__(self, length: int, generators: Iterable[Sequence[int]] = ()):
        if length < 1:
            raise DimensionError("code length must be positive")
        gens = []
        for g in generators:
            if len(g) != length:
                raise DimensionError(f"generator of length {len(g)} in a length-{length} code")
            gens.append(tuple(int(x) % 4 for x in g))
        self.length = length
        self.generators: tuple[tuple[int, ...], ...] = tuple(gens)
        self._sf: StandardForm | None = None
        self._lock = threading.Lock()

    @classmethod
    def from_text(cls, text: str) -> Z4Code:
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise InputError("empty generator matrix")
        n = len(rows[0])
        for r in rows:
            if len(r) != n or set(r) - set("0123"):
                raise InputError(f"bad generator row {r!r}")
        return cls(n, [[int(c) for c in r] for r in rows])

    def to_text(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.standard_form().rows)

    def __repr__(self) -> str:
        return f"Z4Code(length={self.length}, type=4^{self.k1} 2^{self.k2})"

    def standard_form(self) -> StandardForm:
        if self._sf is None:
            with self._lock:
                if self._sf is None:
                    g = np.array(self.generators, dtype=np.int64).reshape(-1, self.length)
                    self._sf = _standard_form(g, self.length)
        return self._sf

    @property
    def k1(self) -> int:
        return self.standard_form().k1

    @property
    def k2(self) -> int:
        return self.standard_form().k2

    def type(self) -> tuple[int, int]:
        return self.k1, self.k2

    def cardinality(self) -> int:
        return 4 ** self.k1 * 2 ** self.k2

    def __contains__(self, v: Sequence[int]) -> bool:
        return membership(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Z4Code):
            return NotImplemented
        return (self.length == other.length and self.type() == other.type()
                and all(g in other for g in self.standard_form().rows))

    __hash__ = None  # mutable cache, compare by value only

    # -- enumeration plumbing -------------------------------------------------

    def _odd_parts(self) -> tuple[list[int], list[int]]:
        """Masks of sum(b_i g_i), b in {0,1}^k1, over the unit rows."""
        sf = self.standard_form()
        parts = [(0, 0)]
        for row in sf.unit_rows:
            glo, ghi = to_masks(row)
            new = []
            for lo, hi in parts:
                # Z4 addition on (lo, hi) masks
                new.append((lo ^ glo, hi ^ ghi ^ (lo & glo)))
            parts += new
        return [p[0] for p in parts], [p[1] for p in parts]

    def _even_basis(self) -> list[int]:
        """Hi-masks spanning 2*torsion: lo(g) for unit rows, hi(g) for 2-rows."""
        sf = self.standard_form()
        basis = [to_masks(r)[0] for r in sf.unit_rows]
        basis += [to_masks(r)[1] for r in sf.two_rows]
        return basis

    def codewords(self, limit_bits: int = 16) -> Iterator[Z4Vector]:
        """Iterate all codewords; intended for small codes."""
        bits = 2 * self.k1 + self.k2
        if bits > limit_bits:
            raise CapacityError(f"code has 2^{bits} words; iteration limited to 2^{limit_bits}")
        los, his = self._odd_parts()
        even = self._even_basis()
        n = self.length
        for lo, hi in zip(los, his):
            x = hi
            yield from_masks(lo, x, n)
            for step in range(1, 1 << len(even)):
                x ^= even[(step & -step).bit_length() - 1]
                yield from_masks(lo, x, n)

    def word_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(c.entries for c in self.codewords())


# ---------------------------------------------------------------------------

def standard_form(code: Z4Code) -> StandardForm:
    return code.standard_form()


def type_of(code: Z4Code) -> tuple[int, int]:
    return code.type()


def cardinality(code: Z4Code) -> int:
    return code.cardinality()


def membership(code: Z4Code, v: Sequence[int]) -> bool:
    if len(v) != code.length:
        raise DimensionError(f"vector length {len(v)} != code length {code.length}")
    sf = code.standard_form()
    w = [int(x) % 4 for x in v]
    for row, p in zip(sf.unit_rows, sf.unit_pivots):
        a = w[p]
        if a:
            w = [(x - a * r) % 4 for x, r in zip(w, row)]
    for row, p in zip(sf.two_rows, sf.two_pivots):
        if w[p] == 2:
            w = [(x - r) % 4 for x, r in zip(w, row)]
    return not any(w)


def _membership_matrix(code: Z4Code) -> np.ndarray:
    """Columns whose products with a word vanish mod 4 iff the word is in the code."""
    h = dual(code).standard_form().rows
    if not h:
        return np.zeros((code.length, 0), dtype=np.int64)
    return np.array(h, dtype=np.int64).T


def contains_rows(code: Z4Code, words: np.ndarray, hmat: np.ndarray | None = None) -> np.ndarray:
    """Vectorized membership for an (N, n) array of words."""
    if hmat is None:
        hmat = _membership_matrix(code)
    if hmat.shape[1] == 0:
        return np.ones(words.shape[0], dtype=bool)
    out = np.empty(words.shape[0], dtype=bool)
    hf = hmat.astype(np.float64)
    for s in range(0, words.shape[0], 200_000):
        chunk = words[s:s + 200_000].astype(np.float64)
        prod = np.rint(chunk @ hf).astype(np.int64) % 4
        out[s:s + 200_000] = ~prod.any(axis=1)
    return out


def dual(code: Z4Code) -> Z4Code:
    """Annihilator of the code, from the standard form, self-verified."""
    sf = code.standard_form()
    n, k1, k2 = code.length, sf.k1, sf.k2
    k3 = n - k1 - k2
    g = sf.matrix()
    a = g[:k1, k1:k1 + k2] % 4
    b = g[:k1, k1 + k2:] % 4
    d = g[k1:, k1 + k2:] // 2
    rows = []
    if k3:
        top = np.zeros((k3, n), dtype=np.int64)
        top[:, :k1] = (-(b.T + d.T @ a.T)) % 4
        top[:, k1:k1 + k2] = d.T % 4
        top[:, k1 + k2:] = np.eye(k3, dtype=np.int64)
        rows.append(top)
    if k2:
        bot = np.zeros((k2, n), dtype=np.int64)
        bot[:, :k1] = 2 * a.T % 4
        bot[:, k1:k1 + k2] = 2 * np.eye(k2, dtype=np.int64)
        rows.append(bot)
    perm = list(sf.permutation)
    gens = []
    for block in rows:
        for r in block:
            orig = [0] * n
            for j, c in enumerate(perm):
                orig[c] = int(r[j])
            gens.append(orig)
    out = Z4Code(n, gens)
    for x in out.generators:
        for y in sf.rows:
            if inner_product(x, y):
                raise ConstructionError("dual generator not orthogonal to the code")
    if code.cardinality() * out.cardinality() != 4 ** n:
        raise ConstructionError(
            f"|C|*|C^perp| = {code.cardinality() * out.cardinality()} != 4^{n}")
    return out


def residue(code: Z4Code) -> BinaryCode:
    sf = code.standard_form()
    return BinaryCode(code.length, [[x % 2 for x in r] for r in sf.unit_rows])


def torsion(code: Z4Code) -> BinaryCode:
    sf = code.standard_form()
    rows = [[x % 2 for x in r] for r in sf.unit_rows]
    rows += [[x // 2 for x in r] for r in sf.two_rows]
    return BinaryCode(code.length, rows)


def is_self_orthogonal(code: Z4Code) -> bool:
    rows = code.standard_form().rows
    return all(inner_product(x, y) == 0 for i, x in enumerate(rows) for y in rows[i:])


def is_self_dual(code: Z4Code) -> bool:
    return is_self_orthogonal(code) and 2 * code.k1 + code.k2 == code.length


def is_type_II(code: Z4Code) -> Certificate:
    if not is_self_dual(code):
        return Certificate(False, "not self-dual")
    if any(weights(r).euclidean % 8 for r in code.standard_form().rows):
        return Certificate(False, "generator Euclidean weight not divisible by 8")
    if 2 * code.k1 + code.k2 <= MAX_ENUM_BITS:
        ok = all(w % 8 == 0 for w in swe(code).distribution("euclidean").counts)
        return Certificate(ok, "generators+enumeration")
    return Certificate(True, "generators")


def type_iv_structural(code: Z4Code) -> bool:
    """For a Type II code, every Hamming weight is even iff every residue
    word has weight divisible by 8 (wt_E = j + 4k = 0 mod 8 forces k even
    exactly when j = 0 mod 8)."""
    res = residue(code)
    if res.dimension > MAX_RESIDUE_ENUM_BITS:
        raise CapacityError(f"residue dimension {res.dimension} too large for the structural test")
    return all(popcount(w) % 8 == 0 for w in res.codewords())


def is_type_IV(code: Z4Code, samples: int = 1_000_000, seed: int = 0) -> Certificate:
    if not is_self_dual(code):
        return Certificate(False, "not self-dual")
    if 2 * code.k1 + code.k2 <= MAX_ENUM_BITS:
        table = swe(code)
        return Certificate(all((j + k) % 2 == 0 for j, k in table.terms), "enumeration")
    if not is_type_II(code):
        raise CapacityError("code too large to enumerate and not Type II; Type IV undecided")
    if not type_iv_structural(code):
        return Certificate(False, "structural")
    sampled = sample_swe(code, samples, seed)
    ok = all((j + k) % 2 == 0 for j, k in sampled.terms)
    if not ok:
        raise ConstructionError("structural Type IV certificate contradicted by sampling")
    return Certificate(True, f"structural+sampling({samples},seed={seed})")


def swe(code: Z4Code, limit_bits: int = MAX_ENUM_BITS) -> SweTable:
    """Exact symmetrized weight enumerator by full enumeration."""
    bits = 2 * code.k1 + code.k2
    if bits > limit_bits:
        raise CapacityError(
            f"code has 2^{bits} words (limit 2^{limit_bits}); use the closed form instead")
    n = code.length
    los, his = code._odd_parts()
    even = code._even_basis()
    if n <= 64:
        hist = kernels.z4_swe_counts(los, his, even, n)
        terms = {(int(j), int(k)): int(hist[j, k]) for j, k in zip(*np.nonzero(hist))}
    else:
        terms = {}
        for c in code.codewords(limit_bits):
            _, n1, n2, n3 = (c.entries.count(s) for s in range(4))
            terms[(n1 + n3, n2)] = terms.get((n1 + n3, n2), 0) + 1
    return SweTable(n, terms)


def z4_weight_distribution(code: Z4Code, kind: WeightKind, limit_bits: int = MAX_ENUM_BITS
                           ) -> Z4WeightDistribution:
    return swe(code, limit_bits).distribution(kind)


def sample_codewords(code: Z4Code, count: int, seed: int) -> np.ndarray:
    """``count`` uniformly random codewords as an (count, n) int array.

    Randomness comes from numpy's PCG64 seeded with ``seed``.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    sf = code.standard_form()
    gens = np.array(sf.rows, dtype=np.float64).reshape(-1, code.length)
    out = np.empty((count, code.length), dtype=np.int8)
    for s in range(0, count, 100_000):
        m = min(100_000, count - s)
        coeff = np.concatenate([rng.integers(0, 4, size=(m, sf.k1)),
                                rng.integers(0, 2, size=(m, sf.k2))], axis=1)
        words = np.rint(coeff.astype(np.float64) @ gens).astype(np.int64) % 4
        out[s:s + m] = words
    return out


def sample_swe(code: Z4Code, count: int, seed: int) -> SweTable:
    words = sample_codewords(code, count, seed)
    j = np.count_nonzero(words % 2 == 1, axis=1)
    k = np.count_nonzero(words == 2, axis=1)
    pairs, freq = np.unique(np.stack([j, k], axis=1), axis=0, return_counts=True)
    return SweTable(code.length, {(int(a), int(b)): int(c) for (a, b), c in zip(pairs, freq)})


def is_cyclic_z4(code: Z4Code) -> bool:
    return all(membership(code, cyclic_shift(g, 1)) for g in code.standard_form().rows)


# ---------------------------------------------------------------------------
# low-weight search

def _value_patterns(w: int, kind: str, budget: int) -> list[tuple[int, ...]]:
    """Nonzero value tuples of length w whose kind-weight is at most budget."""
    out = []
    for vals in itertools.product((1, 2, 3), repeat=w):
        j = sum(1 for v in vals if v != 2)
        if kind_weight(kind, j, w - j) <= budget:
            out.append(vals)
    return out


def _direct_search(code: Z4Code, kind: str, bound: int, hmat: np.ndarray) -> set[tuple[int, ...]]:
    """All words of Hamming weight <= 4 in the code with kind-weight <= bound."""
    n = code.length
    r = hmat.shape[1]
    # syndrome of value v at position i
    synd = np.stack([(v * hmat) % 4 for v in range(4)], axis=1)  # (n, 4, r)
    found: set[tuple[int, ...]] = set()
    for w in range(1, min(4, bound, n) + 1):
        patterns = _value_patterns(w, kind, bound)
        if not patterns:
            continue
        combos = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
        for vals in patterns:
            acc = np.zeros((combos.shape[0], r), dtype=np.int64)
            for t, v in enumerate(vals):
                acc += synd[combos[:, t], v]
            hits = np.flatnonzero(~(acc % 4).any(axis=1)) if r else np.arange(combos.shape[0])
            for h in hits:
                word = [0] * n
                for t, v in enumerate(vals):
                    word[combos[h, t]] = v
                found.add(tuple(word))
    return found


def _lift_search(code: Z4Code, kind: str, bound: int, hmat: np.ndarray) -> set[tuple[int, ...]]:
    """Residue-guided search: choose a residue word, signs on its support and
    the positions of the 2s off the support, then test membership."""
    n = code.length
    res = residue(code)
    if res.dimension > MAX_RESIDUE_ENUM_BITS:
        raise CapacityError(f"residue dimension {res.dimension} too large for lifting")
    found: set[tuple[int, ...]] = set()
    # even words are 2*y with y in the torsion code
    tor = torsion(code)
    kmax = 0
    while kind_weight(kind, 0, kmax + 1) <= bound:
        kmax += 1
    if kmax:
        if kmax > MAX_SUPPORT_BOUND:
            if tor.dimension > MAX_ENUM_BITS:
                raise CapacityError("even-word search needs torsion weight > 4 on a large code")
            ys = [w for w in tor.codewords() if 0 < popcount(w) <= kmax]
            ys = [tuple((w >> i) & 1 for i in range(n)) for w in ys]
        else:
            ys = [y for y in min_weight_codewords(tor, kmax) if any(y)]
        for y in ys:
            found.add(tuple(2 * b for b in y))
    budget = 0
    for rw in res.codewords():
        j = popcount(rw)
        if j == 0 or kind_weight(kind, j, 0) > bound:
            continue
        supp = [i for i in range(n) if (rw >> i) & 1]
        off = [i for i in range(n) if not (rw >> i) & 1]
        signs = np.array(list(itertools.product((1, 3), repeat=j)), dtype=np.int64)
        k = 0
        while kind_weight(kind, j, k) <= bound:
            budget += len(signs) * math.comb(len(off), k)
            if budget > MAX_LOW_WEIGHT_CANDIDATES:
                raise CapacityError("low-weight search exceeds the candidate budget")
            for twos in itertools.combinations(off, k):
                words = np.zeros((len(signs), n), dtype=np.int64)
                words[:, supp] = signs
                if twos:
                    words[:, list(twos)] = 2
                ok = contains_rows(code, words, hmat)
                for wrow in words[ok]:
                    found.add(tuple(int(x) for x in wrow))
            k += 1
    return found


def low_weight_codewords(code: Z4Code, kind: WeightKind, bound: int,
                         strategies: Sequence[str] = ("direct", "lift")) -> list[Z4Vector]:
    """All nonzero codewords of the given weight kind at most ``bound``."""
    if kind not in KINDS:
        raise InputError(f"unknown weight kind {kind!r}")
    if bound > 16 or (kind == "hamming" and bound > 8):
        raise CapacityError(f"bound {bound} too large for low-weight search")
    hmat = _membership_matrix(code)
    found: set[tuple[int, ...]] = set()
    if "direct" in strategies:
        found |= _direct_search(code, kind, bound, hmat)
    if "lift" in strategies:
        found |= _lift_search(code, kind, bound, hmat)
    return [Z4Vector(w) for w in sorted(found, key=lambda w: (getattr(weights(w), kind), w))]


def min_weights(code: Z4Code, max_bound: int = 8) -> tuple[int, int, int]:
    """(d_H, d_L, d_E) over nonzero codewords."""
    if 2 * code.k1 + code.k2 <= MAX_ENUM_BITS:
        table = swe(code)
        dists = [table.distribution(k).min_nonzero() for k in KINDS]
        if None in dists:
            raise CapacityError("zero code has no minimum weight")
        return tuple(dists)  # type: ignore[return-value]
    out = []
    for kind in KINDS:
        limit = min(max_bound, 8) if kind == "hamming" else max_bound
        # raise the bound step by step so the search stays as small as possible
        for bound in range(1, limit + 1):
            words = low_weight_codewords(code, kind, bound)
            if words:
                out.append(min(getattr(weights(w), kind) for w in words))
                break
        else:
            raise CapacityError(f"no nonzero {kind} word of weight <= {limit}")
    return tuple(out)  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# equivalence and automorphisms (n <= 8)

def _column_profile(words: Sequence[tuple[int, ...]], i: int, signs: bool) -> tuple[int, ...]:
    c = [0, 0, 0, 0]
    for w in words:
        c[w[i]] += 1
    return (c[0], c[1] + c[3], c[2]) if signs else tuple(c)


def _search(words1: list[tuple[int, ...]], set2: frozenset[tuple[int, ...]], n: int,
            signs: bool, count_all: bool):
    words2 = list(set2)
    prof1 = [_column_profile(words1, i, signs) for i in range(n)]
    prof2 = [_column_profile(words2, i, signs) for i in range(n)]
    sign_opts = (1, 3) if signs else (1,)
    proj_cache: dict[tuple[int, ...], frozenset] = {}

    def proj2(cols: tuple[int, ...]) -> frozenset:
        if cols not in proj_cache:
            proj_cache[cols] = frozenset(tuple(w[c] for c in cols) for w in words2)
        return proj_cache[cols]

    image: list[int] = []
    sgn: list[int] = []
    used = [False] * n
    count = 0
    witness = None

    def rec(t: int, partial: list[tuple[int, ...]]):
        nonlocal count, witness
        if t == n:
            count += 1
            if witness is None:
                witness = (tuple(image), tuple(sgn))
            return not count_all
        for target in range(n):
            if used[target] or prof1[t] != prof2[target]:
                continue
            for s in sign_opts:
                ext = [p + ((s * w[t]) % 4,) for p, w in zip(partial, words1)]
                cols = tuple(image) + (target,)
                if frozenset(ext) != proj2(cols):
                    continue
                used[target] = True
                image.append(target)
                sgn.append(s)
                stop = rec(t + 1, ext)
                image.pop()
                sgn.pop()
                used[target] = False
                if stop:
                    return True
        return False

    rec(0, [() for _ in words1])
    return count, witness


def _small_words(code: Z4Code) -> list[tuple[int, ...]]:
    if code.length > MAX_EQUIV_LENGTH:
        raise CapacityError(f"equivalence search limited to length {MAX_EQUIV_LENGTH}")
    return sorted(code.word_set())


def permutation_equivalent(c1: Z4Code, c2: Z4Code, signs: bool = False):
    """Witness (perm, signs) mapping c1 onto c2, or None.

    ``perm[i]`` is the coordinate of c2 receiving coordinate i of c1; with
    ``signs=True`` coordinate negations are allowed (monomial equivalence).
    """
    w1, w2 = _small_words(c1), _small_words(c2)
    if c1.length != c2.length or len(w1) != len(w2):
        return None
    _, witness = _search(w1, frozenset(w2), c1.length, signs, count_all=False)
    if witness is None:
        return None
    return witness if signs else witness[0]


def monomially_equivalent(c1: Z4Code, c2: Z4Code):
    return permutation_equivalent(c1, c2, signs=True)


def paut_order(code: Z4Code) -> int:
    words = _small_words(code)
    count, _ = _search(words, frozenset(words), code.length, signs=False, count_all=True)
    return count


def apply_permutation(code: Z4Code, perm: Sequence[int]) -> Z4Code:
    """Move coordinate i to position perm[i]."""
    n = code.length
    gens = []
    for g in code.generators:
        out = [0] * n
        for i, x in enumerate(g):
            out[perm[i]] = x
        gens.append(out)
    return Z4Code(n, gens)
