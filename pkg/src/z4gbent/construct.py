"""Code constructions from pairs of bent functions.

c_f -> circulant code C_f -> self-dual extension (Type II, and Type IV-II for
m >= 5) -> Gray images, together with the closed-form weight distributions of
the extended code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bincode
from .bincode import BinaryCode, bits_to_int
from .boolfn import BooleanFunction, gbent_from_bent_pair, truth_vector
from .errors import ConstructionError, NonlinearImageError, PreconditionError
from .z4code import (
    SweTable,
    Z4Code,
    is_cyclic_z4,
    is_self_dual,
    is_self_orthogonal,
    is_type_II,
    membership,
    residue,
    sample_codewords,
    torsion,
)
from .z4vec import Z4Vector, cyclic_shift, gray_map, product, scale

I2_TILDE = np.array([[1, 1], [0, 1]], dtype=np.int64)

# B matrices listed for the four Type II codes sharing a residue code
REFERENCE_B_MATRICES = {
    3: ([[0, 1], [1, 0]], [[0, 1], [1, 1]], [[1, 1], [1, 0]], [[1, 1], [1, 1]]),
    5: ([[0, 0], [0, 0]], [[0, 0], [0, 1]], [[1, 0], [0, 0]], [[1, 0], [0, 1]]),
}


def _odd_m(n: int) -> int:
    m = n.bit_length() - 1
    if n != 1 << m or m < 3 or m % 2 == 0:
        raise PreconditionError(f"length {n} is not 2^m with m odd and m >= 3")
    return m


def build_cf(a: BooleanFunction, b: BooleanFunction) -> Z4Vector:
    return truth_vector(gbent_from_bent_pair(a, b))


def circulant_code(c: Sequence[int]) -> Z4Code:
    """Code generated by all cyclic shifts of ``c``."""
    n = len(c)
    return Z4Code(n, [cyclic_shift(c, i) for i in range(n)])


@dataclass
class Extension:
    """Self-dual extension of C_f.

    ``code`` lives in the coordinates of the standard form of C_f;
    ``permutation[j]`` is the original coordinate at position j.
    """

    code: Z4Code
    permutation: tuple[int, ...]
    k2: int
    k3: int
    extension_rows: tuple[tuple[int, ...], ...]

    def in_original_coordinates(self) -> Z4Code:
        n = self.code.length
        gens = []
        for g in self.code.generators:
            out = [0] * n
            for j, c in enumerate(self.permutation):
                out[c] = g[j]
            gens.append(out)
        return Z4Code(n, gens)


def extend_type_II(cf_code: Z4Code) -> Extension:
    """Append the rows [O | 2I_k3 | H] to the standard form of C_f."""
    n = cf_code.length
    _odd_m(n)
    if not is_cyclic_z4(cf_code):
        raise PreconditionError("C_f is not cyclic")
    if not is_self_orthogonal(cf_code):
        raise PreconditionError("C_f is not self-orthogonal")
    sf = cf_code.standard_form()
    if sf.k1 != 2:
        raise PreconditionError(f"C_f has type 4^{sf.k1} 2^{sf.k2}; expected k1 = 2")
    k2 = sf.k2
    k3 = n - 4 - k2
    if k3 < 0:
        raise PreconditionError(f"k3 = {k3} is negative")
    rows = []
    for i in range(1, k3 + 1):
        r = [0] * n
        r[k2 + 2 + i - 1] = 2
        first = (i % 2 == 1) == (k2 % 2 == 0)  # (2,0) vs (0,2)
        r[n - 2 if first else n - 1] = 2
        rows.append(tuple(r))
    g = [tuple(int(x) for x in row) for row in sf.matrix()]
    code = Z4Code(n, g + rows)
    if not (is_self_dual(code) and is_type_II(code)):
        raise ConstructionError("extended code is not a self-dual Type II code")
    return Extension(code, sf.permutation, k2, k3, tuple(rows))


def four_variant_codes(cf_code: Z4Code) -> list[tuple[np.ndarray, Z4Code]]:
    """The four Type II codes [F | I2~(I + 2B); 2H | O] with residue [F | I2~].

    F is binary: its rows are the all-ones word and the indicator of the odd
    coordinates, restricted to the first n-2 positions. H spans the torsion
    words vanishing on the last two positions.
    """
    n = cf_code.length
    m = _odd_m(n)
    ext = extend_type_II(cf_code).in_original_coordinates()
    res = residue(ext)
    ones = [1] * n
    odd = [i % 2 for i in range(n)]
    if BinaryCode(n, [ones, odd]) != res:
        raise ConstructionError("residue code is not spanned by the all-ones and odd-indicator words")
    h = torsion(ext).subcode_vanishing_on([n - 2, n - 1])
    if h.dimension != n - 4:
        raise ConstructionError(f"H has dimension {h.dimension}, expected {n - 4}")
    lower = [[2 * ((w >> i) & 1) for i in range(n)] for w in h.basis]
    out = []
    for bmat in REFERENCE_B_MATRICES[3 if m == 3 else 5]:
        b = np.array(bmat, dtype=np.int64)
        tail = (I2_TILDE + 2 * ((I2_TILDE @ b) % 2)) % 4
        u1 = ones[:n - 2] + [int(x) for x in tail[0]]
        u2 = odd[:n - 2] + [int(x) for x in tail[1]]
        code = Z4Code(n, [u1, u2] + lower)
        if code.type() != (2, n - 4) or not is_self_dual(code) or not is_type_II(code):
            raise ConstructionError(f"variant B={bmat} is not a self-dual Type II code")
        out.append((b, code))
    return out


# ---------------------------------------------------------------------------
# closed forms

@dataclass(frozen=True)
class ClosedFormDistributions:
    m: int
    torsion: tuple[int, ...]
    euclidean: dict[int, int]
    lee: dict[int, int] | None
    swe: dict[tuple[int, int], int]
    swe_literal: dict[tuple[int, int], int]
    s: dict[int, int]
    t: dict[int, int]
    u: dict[int, int]

    @property
    def n(self) -> int:
        return 1 << self.m

    def swe_table(self) -> SweTable:
        return SweTable(self.n, dict(self.swe))


def torsion_distribution(m: int) -> tuple[int, ...]:
    n, h = 1 << m, 1 << (m - 1)
    out = []
    for j in range(n + 1):
        if j % 2:
            out.append(0)
            continue
        total = math.comb(n, j) + sum((-1) ** l * math.comb(h, l) * math.comb(h, j - l)
                                      for l in range(j + 1))
        if total % 2:
            raise ConstructionError(f"A'_{j} is not an integer")
        out.append(total // 2)
    return tuple(out)


def _s(m: int, i: int) -> int:
    return 1 << ((1 << m) - 2) if i == 1 << m else 0


def _t(m: int, i: int) -> int:
    h = 1 << (m - 1)
    if not h <= i <= 5 * h or (2 * i - (1 << m)) % 8:
        return 0
    return (1 << h) * math.comb(h, (2 * i - (1 << m)) // 8)


def _u(m: int, i: int) -> int:
    h = 1 << (m - 1)
    if not h <= i <= 3 * h or (2 * i - (1 << m)) % 4:
        return 0
    return (1 << h) * math.comb(h, (2 * i - (1 << m)) // 4)


def closed_form(m: int) -> ClosedFormDistributions:
    if m < 3 or m % 2 == 0:
        raise PreconditionError(f"closed forms need odd m >= 3, got {m}")
    n, h = 1 << m, 1 << (m - 1)
    tor = torsion_distribution(m)
    eu = {i: tor[i // 4] + _s(m, i) + _t(m, i) for i in range(0, 4 * n + 1, 8)}
    eu = {i: c for i, c in eu.items() if c}
    lee = None
    if m >= 5:
        lee = {i: tor[i // 2] + _s(m, i) + _u(m, i) for i in range(0, 2 * n + 1, 4)}
        lee = {i: c for i, c in lee.items() if c}
    # swe keyed by (n1 + n3, n2)
    base: dict[tuple[int, int], int] = {(n, 0): _s(m, n)}
    for i in range(n + 1):
        if tor[i]:
            base[(0, i)] = base.get((0, i), 0) + tor[i]
    literal = dict(base)
    restricted = dict(base)
    q = 1 << (m - 3)
    for i in range(n + 1):
        coeff = _t(m, 4 * i)
        if not coeff:
            continue
        n2 = i - q
        literal[(h, n2)] = literal.get((h, n2), 0) + coeff
        if (h + 4 * n2) % 8 == 0:
            restricted[(h, n2)] = restricted.get((h, n2), 0) + coeff
    s = {n: _s(m, n)}
    t = {i: _t(m, i) for i in range(4 * n + 1) if _t(m, i)}
    u = {i: _u(m, i) for i in range(2 * n + 1) if _u(m, i)}
    return ClosedFormDistributions(
        m=m, torsion=tor, euclidean=eu, lee=lee,
        swe={k: v for k, v in restricted.items() if v},
        swe_literal={k: v for k, v in literal.items() if v},
        s=s, t=t, u=u,
    )


def gray_image_closed_form(m: int) -> dict[int, int]:
    """Weight distribution of the Gray image of the extended code, m >= 5."""
    if m < 5 or m % 2 == 0:
        raise PreconditionError("the Gray-image closed form needs odd m >= 5")
    n = 1 << m
    tor = torsion_distribution(m)
    out = {}
    for i in range(0, 2 * n + 1, 4):
        w = tor[i // 2] + _s(m, i) + _u(m, i)
        if w:
            out[i] = w
    return out


# ---------------------------------------------------------------------------
# Gray images

def gray_int(v: Sequence[int]) -> int:
    return bits_to_int(gray_map(v))


def gray_linearity_criterion(code: Z4Code) -> bool:
    """2 * g_i * g_j lies in the code for all pairs of unit rows."""
    units = code.standard_form().unit_rows
    for i, gi in enumerate(units):
        for gj in units[i:]:
            if not membership(code, scale(2, product(gi, gj))):
                return False
    return True


def gray_image_code(code: Z4Code, verify_samples: int = 10_000, seed: int = 0) -> BinaryCode:
    if not gray_linearity_criterion(code):
        raise NonlinearImageError("2*g_i*g_j is not in the code; the Gray image is not linear")
    sf = code.standard_form()
    gens = [gray_int(r) for r in sf.unit_rows]
    gens += [gray_int(scale(2, r)) for r in sf.unit_rows]
    gens += [gray_int(r) for r in sf.two_rows]
    image = BinaryCode(2 * code.length, gens)
    if image.dimension != 2 * sf.k1 + sf.k2:
        raise ConstructionError(f"Gray image has dimension {image.dimension}, expected {2 * sf.k1 + sf.k2}")
    if code.cardinality() <= 1 << 16:
        if any(gray_int(c) not in image for c in code.codewords()):
            raise ConstructionError("Gray image of a codeword is outside the spanned code")
    else:
        for w in sample_codewords(code, verify_samples, seed):
            if gray_int(w) not in image:
                raise ConstructionError("Gray image of a sampled codeword is outside the spanned code")
    return image


def gray_parameters(image: BinaryCode) -> dict:
    """[n, k, d] plus evenness flags; d only when enumerable."""
    out = {"n": image.length, "k": image.dimension, "d": None,
           "even": bincode.is_even(image), "doubly_even": bincode.is_doubly_even(image),
           "self_orthogonal": bincode.is_self_orthogonal(image),
           "self_dual": bincode.is_self_dual(image)}
    if image.dimension <= bincode.MAX_ENUM_DIM:
        out["d"] = bincode.min_distance(image)
    return out


# ---------------------------------------------------------------------------
# reference pairs

REFERENCE_PAIRS = {
    3: ("x1*x2", "x1 + x1*x2"),
    5: ("x1*x2 + x1*x3 + x2*x4", "x1*x2 + x3*x4"),
    7: ("x1*x2 + x3*x4 + x5*x6", "x1*x4 + x2*x5 + x3*x6"),
}
SECOND_PAIR_M3 = ("x1*x2", "x1*x2")

# reported order of the permutation automorphism group of C_f at m = 5;
# not recomputed (search is limited to length 8)
PAUT_ORDER_M5_REFERENCE = 9663676416


def reference_pair(m: int) -> tuple[BooleanFunction, BooleanFunction]:
    if m not in REFERENCE_PAIRS:
        raise PreconditionError(f"no reference bent pair for m = {m}")
    a, b = REFERENCE_PAIRS[m]
    return BooleanFunction.from_anf(a, m - 1), BooleanFunction.from_anf(b, m - 1)
