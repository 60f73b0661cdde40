"""Full construction report for one bent pair, as a JSON-ready dict."""

from __future__ import annotations

import json
from typing import Any

from . import bincode, designs, z4code
from .boolfn import BooleanFunction, gbent_from_bent_pair, is_gbent
from .construct import (
    PAUT_ORDER_M5_REFERENCE,
    build_cf,
    circulant_code,
    closed_form,
    extend_type_II,
    gray_image_closed_form,
    gray_image_code,
    gray_parameters,
)
from .errors import CapacityError, PreconditionError
from .kernels import BACKEND
from .z4vec import weights

JSON_SAFE_INT = 1 << 53
DEFAULT_SAMPLES = 100_000


def jsonable(obj: Any) -> Any:
    """Recursively convert to JSON types; ints beyond 2^53 become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if hasattr(obj, "item"):
        return jsonable(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=False) + "\n"


def _swe_map(table: dict[tuple[int, int], int]) -> dict[str, int]:
    return {f"{j},{k}": c for (j, k), c in sorted(table.items())}


def _code_summary(code: z4code.Z4Code, enumerate_limit: int) -> dict:
    k1, k2 = code.type()
    out: dict = {"length": code.length, "type": [k1, k2], "cardinality": code.cardinality(),
                 "self_orthogonal": z4code.is_self_orthogonal(code),
                 "self_dual": z4code.is_self_dual(code)}
    try:
        out["min_weights"] = list(z4code.min_weights(code))
    except CapacityError as exc:
        out["min_weights"] = None
        out["min_weights_error"] = str(exc)
    if 2 * k1 + k2 <= enumerate_limit:
        table = z4code.swe(code, enumerate_limit)
        out["distributions"] = {k: table.distribution(k).counts for k in z4code.KINDS}
        out["distributions"]["swe"] = _swe_map(table.terms)
    else:
        out["distributions"] = None
    return out


class _Checks:
    def __init__(self):
        self.items: list[dict] = []

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.items.append({"name": name, "passed": bool(passed), "detail": detail})

    @property
    def all_passed(self) -> bool:
        return all(c["passed"] for c in self.items)


def pipeline(a: BooleanFunction, b: BooleanFunction, *, samples: int = DEFAULT_SAMPLES,
             seed: int = 0, exhaustive: bool = False, with_designs: bool = True,
             labels: tuple[str, str] | None = None) -> dict:
    if a.arity != b.arity:
        raise PreconditionError(f"arity mismatch: {a.arity} != {b.arity}")
    m = a.arity + 1
    if m % 2 == 0 or m < 3:
        raise PreconditionError(f"m = {m} must be odd and at least 3")
    checks = _Checks()
    f = gbent_from_bent_pair(a, b)
    checks.add("f is gbent", is_gbent(f))
    cf_vec = build_cf(a, b)
    n = len(cf_vec)
    wt_e = weights(cf_vec).euclidean
    checks.add("wt_E(c_f) divisible by 8", wt_e % 8 == 0, f"wt_E = {wt_e}")
    # observed properties only, no proof behind them
    if m == 3:
        checks.add("observed: wt_E(c_f) in {8, 16}", wt_e in (8, 16), f"wt_E = {wt_e}")
    else:
        checks.add("observed: wt_E(c_f) >= 2^m/3 + 8", 3 * wt_e >= n + 24, f"wt_E = {wt_e}")

    cf = circulant_code(cf_vec)
    report: dict = {
        "inputs": {"a": labels[0] if labels else str(a), "b": labels[1] if labels else str(b),
                   "m": m, "seed": seed, "samples": samples, "exhaustive": exhaustive},
        "backend": BACKEND,
        "c_f": str(cf_vec),
        "c_f_euclidean_weight": wt_e,
    }
    cf_sum = _code_summary(cf, z4code.MAX_ENUM_BITS)
    cf_sum["cyclic"] = z4code.is_cyclic_z4(cf)
    cf_sum["residue_dimension"] = z4code.residue(cf).dimension
    if n <= z4code.MAX_EQUIV_LENGTH:
        cf_sum["paut_order"] = z4code.paut_order(cf)
    elif m == 5:
        cf_sum["paut_order_reference"] = PAUT_ORDER_M5_REFERENCE
    report["C_f"] = cf_sum
    checks.add("C_f self-orthogonal", cf_sum["self_orthogonal"])
    checks.add("C_f residue dimension 2", cf_sum["residue_dimension"] == 2)
    checks.add("C_f generators have wt_E divisible by 8",
               all(weights(r).euclidean % 8 == 0 for r in cf.standard_form().rows))

    dual = z4code.dual(cf)
    report["dual"] = _code_summary(dual, 20)
    checks.add("|C_f| |dual| = 4^n", cf.cardinality() * dual.cardinality() == 4 ** n)

    ext = extend_type_II(cf)
    ec = ext.code
    limit = 32 if exhaustive else z4code.MAX_ENUM_BITS
    ext_sum = _code_summary(ec, limit)
    ext_sum["permutation"] = list(ext.permutation)
    ext_sum["k3"] = ext.k3
    ext_sum["extension_rows"] = ["".join(map(str, r)) for r in ext.extension_rows]
    t2 = z4code.is_type_II(ec)
    ext_sum["type_II"] = {"holds": t2.holds, "method": t2.method}
    t4 = z4code.is_type_IV(ec, samples=max(samples, 10_000), seed=seed)
    ext_sum["type_IV"] = {"holds": t4.holds, "method": t4.method}
    if n <= z4code.MAX_EQUIV_LENGTH:
        ext_sum["paut_order"] = z4code.paut_order(ec)
    report["extension"] = ext_sum
    checks.add("extension self-dual", ext_sum["self_dual"])
    checks.add("extension Type II", t2.holds, t2.method)
    if m >= 5:
        checks.add("extension Type IV", t4.holds, t4.method)

    cfd = closed_form(m)
    report["closed_form"] = {
        "torsion": {str(j): c for j, c in enumerate(cfd.torsion) if c},
        "euclidean": cfd.euclidean,
        "lee": cfd.lee,
        "swe": _swe_map(cfd.swe),
        "swe_literal": _swe_map(cfd.swe_literal),
        "swe_literal_total": sum(cfd.swe_literal.values()),
        "swe_literal_double_counts": sum(cfd.swe_literal.values()) != 1 << n,
    }
    checks.add("closed-form Euclidean total = 4^(n/2)", sum(cfd.euclidean.values()) == 1 << n)
    if cfd.lee is not None:
        checks.add("closed-form Lee total = 4^(n/2)", sum(cfd.lee.values()) == 1 << n)
    checks.add("closed-form torsion total = 2^(n-2)", sum(cfd.torsion) == 1 << (n - 2))

    tor = z4code.torsion(ec)
    if tor.dimension <= bincode.MAX_ENUM_DIM:
        tor_dist = bincode.weight_distribution(tor).counts
        checks.add("torsion distribution = closed form", tuple(tor_dist) == cfd.torsion)
    res = z4code.residue(ec)
    mw = bincode.macwilliams(bincode.weight_distribution(res), res.dimension)
    checks.add("MacWilliams(residue) = closed-form torsion", mw.counts == cfd.torsion)

    dists = ext_sum["distributions"]
    if dists is not None:
        checks.add("enumerated Euclidean = closed form", dists["euclidean"] == cfd.euclidean)
        checks.add("enumerated swe = closed form (parity-restricted)",
                   dists["swe"] == _swe_map(cfd.swe))
        if cfd.lee is not None:
            checks.add("enumerated Lee = closed form", dists["lee"] == cfd.lee)
    else:
        sampled = z4code.sample_codewords(ec, samples, seed)
        w1 = (sampled % 2 == 1).sum(axis=1)
        w2 = (sampled == 2).sum(axis=1)
        checks.add("sampled wt_E divisible by 8", bool(((w1 + 4 * w2) % 8 == 0).all()),
                   f"{samples} words, PCG64 seed {seed}")
        checks.add("sampled wt_L divisible by 4", bool(((w1 + 2 * w2) % 4 == 0).all()))
        checks.add("sampled Hamming weight even", bool(((w1 + w2) % 2 == 0).all()))
        support = set(cfd.swe)
        seen = set(zip(w1.tolist(), w2.tolist()))
        checks.add("sampled swe classes within closed form", seen <= support)

    gray_cf = gray_image_code(cf)
    gray_ext = gray_image_code(ec)
    report["gray"] = {"C_f": gray_parameters(gray_cf), "extension": gray_parameters(gray_ext)}
    if gray_ext.dimension <= bincode.MAX_ENUM_DIM:
        gdist = bincode.weight_distribution(gray_ext).nonzero()
        report["gray"]["extension_distribution"] = gdist
        if dists is not None:
            checks.add("Gray image distribution = Lee distribution", gdist == dists["lee"])
    elif cfd.lee is not None:
        checks.add("Gray closed form = Lee closed form", gray_image_closed_form(m) == cfd.lee)
    checks.add("Gray image of extension self-dual", report["gray"]["extension"]["self_dual"])
    checks.add("Gray image of C_f doubly even" if m >= 5 else "Gray image of C_f even",
               report["gray"]["C_f"]["doubly_even" if m >= 5 else "even"])

    if with_designs and m in (3, 5):
        report["designs"] = designs.code_designs(a, b)
        for row in report["designs"]:
            if row["k"] is not None:
                checks.add(f"1-design law: {row['label']}", row["b"] * row["k"] == row["v"] * row["r"])

    report["checks"] = checks.items
    report["all_passed"] = checks.all_passed
    return report
