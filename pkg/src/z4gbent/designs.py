"""1-designs from codeword supports, intersection graphs and nets."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from . import bincode, z4code
from .construct import (
    build_cf,
    circulant_code,
    extend_type_II,
    gray_image_code,
    reference_pair,
)
from .errors import CapacityError, InputError, PreconditionError
from .z4vec import weights

MAX_RESOLVE_BLOCKS = 256
MAX_GRAPH_BLOCKS = 256
RESOLVE_BUDGET = 2_000_000


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[frozenset[int], ...]
    multiplicity: dict[frozenset[int], int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for blk in self.blocks:
            if any(not 0 <= p < self.v for p in blk):
                raise InputError(f"block {sorted(blk)} has points outside 0..{self.v - 1}")

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> set[int]:
        return {len(blk) for blk in self.blocks}

    def replication(self) -> list[int]:
        r = [0] * self.v
        for blk in self.blocks:
            for p in blk:
                r[p] += 1
        return r

    def relabel(self, perm: Sequence[int]) -> Design:
        """Apply the point map p -> perm[p]."""
        blocks = [frozenset(perm[p] for p in blk) for blk in self.blocks]
        mult = {frozenset(perm[p] for p in blk): c for blk, c in self.multiplicity.items()}
        return Design(self.v, _sorted_blocks(blocks), mult)


class DesignParameters(NamedTuple):
    k: int
    lam: int
    b: int
    r: int


class SimpleGraph(NamedTuple):
    order: int
    edges: frozenset[tuple[int, int]]

    def neighbours(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


class SRGParameters(NamedTuple):
    v: int
    k: int
    lam: int
    mu: int
    has_nonadjacent: bool


class NetParameters(NamedTuple):
    s: int   # blocks per parallel class
    r: int   # number of classes
    mu: int  # intersection of blocks in different classes


def _sorted_blocks(blocks: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted(set(blocks), key=lambda b: (len(b), sorted(b))))


def supports_to_design(codewords: Sequence[Sequence[int]], v: int | None = None) -> Design:
    if not codewords:
        raise InputError("no codewords to build a design from")
    if v is None:
        v = len(codewords[0])
    mult = Counter(frozenset(i for i, e in enumerate(w) if e) for w in codewords)
    mult.pop(frozenset(), None)
    return Design(v, _sorted_blocks(mult), dict(mult))


def verify_one_design(d: Design) -> DesignParameters | None:
    sizes = d.block_sizes()
    if len(sizes) != 1:
        return None
    reps = set(d.replication())
    if len(reps) != 1:
        return None
    k, r = sizes.pop(), reps.pop()
    assert d.b * k == d.v * r
    return DesignParameters(k, r, d.b, r)


def intersection_numbers(d: Design) -> set[int]:
    if d.b < 2:
        raise InputError("intersection numbers need at least two blocks")
    return {len(x & y) for x, y in itertools.combinations(d.blocks, 2)}


def block_intersection_graph(d: Design, s: int) -> SimpleGraph:
    edges = frozenset((i, j) for (i, x), (j, y) in itertools.combinations(enumerate(d.blocks), 2)
                      if len(x & y) == s)
    return SimpleGraph(d.b, edges)


def srg_parameters(g: SimpleGraph) -> SRGParameters | None:
    adj = g.neighbours()
    degrees = {len(a) for a in adj}
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    lam: set[int] = set()
    mu: set[int] = set()
    for i, j in itertools.combinations(range(g.order), 2):
        (lam if j in adj[i] else mu).add(len(adj[i] & adj[j]))
    if len(lam) > 1 or len(mu) > 1:
        return None
    return SRGParameters(g.order, k, lam.pop() if lam else 0, mu.pop() if mu else 0, bool(mu))


def resolvability(d: Design, budget: int = RESOLVE_BUDGET) -> list[list[frozenset[int]]] | None:
    """Partition of the blocks into parallel classes, or None if there is none.

    Raises CapacityError when the design is too large or the search budget runs out.
    """
    if d.b > MAX_RESOLVE_BLOCKS:
        raise CapacityError(f"{d.b} blocks exceed the resolvability limit {MAX_RESOLVE_BLOCKS}")
    params = verify_one_design(d)
    if params is None or d.v % params.k:
        return None
    full = (1 << d.v) - 1
    masks = [sum(1 << p for p in blk) for blk in d.blocks]
    by_point = [[i for i, m in enumerate(masks) if m >> p & 1] for p in range(d.v)]
    used = [False] * d.b
    classes: list[list[int]] = []
    steps = 0

    def rec(current: list[int], covered: int) -> bool:
        nonlocal steps
        steps += 1
        if steps > budget:
            raise CapacityError("resolvability search budget exhausted")
        if covered == full:
            classes.append(current)
            if all(used):
                return True
            if rec([], 0):
                return True
            classes.pop()
            return False
        p = (~covered & full & -(~covered & full)).bit_length() - 1
        for i in by_point[p]:
            if used[i] or masks[i] & covered:
                continue
            used[i] = True
            if rec(current + [i], covered | masks[i]):
                return True
            used[i] = False
        return False

    if not rec([], 0):
        return None
    return [[d.blocks[i] for i in cls] for cls in classes]


def net_parameters(d: Design) -> NetParameters | None:
    """(s, r; mu) if the design is affine resolvable."""
    classes = resolvability(d)
    if classes is None:
        return None
    if len(classes) == 1:
        return NetParameters(len(classes[0]), 1, 0)
    mus = {len(x & y) for c1, c2 in itertools.combinations(classes, 2) for x in c1 for y in c2}
    if len(mus) != 1:
        return None
    return NetParameters(len(classes[0]), len(classes), mus.pop())


def is_affine_resolvable(d: Design) -> bool:
    return net_parameters(d) is not None


# ---------------------------------------------------------------------------
# torsion weight-2 design

@dataclass
class TorsionDesign:
    m: int
    design: Design
    classes: dict[int, list[frozenset[int]]]
    coverage_ok: bool


def _distance_class(blk: frozenset[int], n: int) -> int:
    i, j = sorted(blk)
    return min(j - i, n - (j - i))


def class_coverage_ok(classes: dict[int, list[frozenset[int]]], n: int) -> bool:
    half = n // 2
    for k in range(2, half + 1, 2):
        blocks = classes.get(k, [])
        want_blocks, want_cover = (n, 2) if k < half else (half, 1)
        cover = Counter(p for blk in blocks for p in blk)
        if len(blocks) != want_blocks or set(cover.values()) != {want_cover} or len(cover) != n:
            return False
    return set(classes) == set(range(2, half + 1, 2))


def torsion_min_weight_design(m: int, pair=None) -> TorsionDesign:
    if m not in (3, 5, 7):
        raise PreconditionError(f"torsion design supported for m in (3, 5, 7), not {m}")
    n = 1 << m
    a, b = pair if pair is not None else reference_pair(m)
    ext = extend_type_II(circulant_code(build_cf(a, b))).in_original_coordinates()
    tor = z4code.torsion(ext)
    words = [w for w in bincode.min_weight_codewords(tor, 2) if sum(w) == 2]
    design = supports_to_design(words, n)
    classes: dict[int, list[frozenset[int]]] = {}
    for blk in design.blocks:
        classes.setdefault(_distance_class(blk, n), []).append(blk)
    return TorsionDesign(m, design, dict(sorted(classes.items())), class_coverage_ok(classes, n))


# ---------------------------------------------------------------------------
# design rows for the reference codes

def design_record(d: Design, label: str) -> dict:
    """JSON-ready summary; points are 1-based."""
    params = verify_one_design(d)
    rec: dict = {"label": label, "v": d.v, "b": d.b, "k": None, "lambda": None, "r": None,
                 "intersection_numbers": sorted(intersection_numbers(d)) if d.b > 1 else [],
                 "resolvable": None, "affine": None, "net": None, "graphs": {}}
    if params:
        rec.update(k=params.k, r=params.r)
        rec["lambda"] = params.lam
    try:
        classes = resolvability(d)
        rec["resolvable"] = classes is not None
        net = net_parameters(d) if classes is not None else None
        rec["affine"] = net is not None
        rec["net"] = list(net) if net else None
    except CapacityError:
        pass
    for s in rec["intersection_numbers"] if d.b <= MAX_GRAPH_BLOCKS else ():
        srg = srg_parameters(block_intersection_graph(d, s))
        rec["graphs"][str(s)] = list(srg[:4]) if srg else None
    rec["multiplicities"] = sorted(set(d.multiplicity.values()))
    rec["blocks"] = [sorted(p + 1 for p in blk) for blk in d.blocks]
    return rec


def _min_euclidean_rows(code: z4code.Z4Code, name: str, skip: Design) -> list[dict]:
    """Minimum Euclidean weight words split by Lee weight; a class whose
    supports repeat the minimum Hamming design is left out."""
    n = code.length
    d_e = z4code.min_weights(code)[2]
    words = [w for w in z4code.low_weight_codewords(code, "euclidean", d_e)
             if weights(w).euclidean == d_e]
    groups: dict[int, list] = {}
    for w in words:
        groups.setdefault(weights(w).lee, []).append(w)
    rows = []
    for lee, ws in sorted(groups.items()):
        d = supports_to_design(ws, n)
        if d.blocks == skip.blocks:
            continue
        label = f"{name}: minimum Euclidean weight {d_e}"
        if len(groups) > 1:
            label += f", Lee weight {lee}"
        rows.append(design_record(d, label))
    return rows


def code_designs(a, b) -> list[dict]:
    """Design rows from the minimum-weight words of C_f, its Gray image, its
    dual and the torsion code of the extension."""
    cf = circulant_code(build_cf(a, b))
    n = cf.length
    m = n.bit_length() - 1
    dual = z4code.dual(cf)
    rows = []
    for name, code in (("C_f", cf), ("dual of C_f", dual)):
        d_h = z4code.min_weights(code)[0]
        hdesign = supports_to_design(z4code.low_weight_codewords(code, "hamming", d_h), n)
        rows.append(design_record(hdesign, f"{name}: minimum Hamming weight {d_h}"))
        rows += _min_euclidean_rows(code, name, hdesign)
        if code is cf:
            image = gray_image_code(cf)
            low = [x for x in bincode.min_weight_codewords(image, bincode.MAX_SUPPORT_BOUND) if any(x)]
            if low:
                dg = min(sum(x) for x in low)
                gd = supports_to_design([x for x in low if sum(x) == dg], 2 * n)
                rows.append(design_record(gd, f"Gray image of C_f: minimum weight {dg}"))
    if m in (3, 5, 7):
        td = torsion_min_weight_design(m, (a, b))
        rec = design_record(td.design, "torsion code of the extension: weight 2")
        rec["classes"] = {str(k): len(v) for k, v in td.classes.items()}
        rec["class_coverage_ok"] = td.coverage_ok
        rows.append(rec)
    return rows


def reference_designs(m: int) -> list[dict]:
    if m not in (3, 5):
        raise PreconditionError(f"reference design rows exist for m in (3, 5), not {m}")
    return code_designs(*reference_pair(m))
