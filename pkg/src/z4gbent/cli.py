"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import designs, z4code
from .boolfn import (
    BooleanFunction,
    enumerate_bent,
    gbent_from_bent_pair,
    generalized_walsh_hadamard,
    is_gbent,
)
from .construct import (
    REFERENCE_PAIRS,
    build_cf,
    circulant_code,
    extend_type_II,
    gray_image_code,
    gray_parameters,
)
from .errors import CapacityError, InputError, Z4GbentError
from .pipeline import DEFAULT_SAMPLES, dumps, jsonable, pipeline

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3
MIN_SAMPLES = 10_000


def _pair(args) -> tuple[BooleanFunction, BooleanFunction, tuple[str, str]]:
    if (args.a is None) != (args.b is None):
        raise InputError("give both --a and --b, or neither")
    if args.a is None:
        if args.m not in REFERENCE_PAIRS:
            raise InputError(f"no default pair for m = {args.m}; pass --a and --b")
        a_txt, b_txt = REFERENCE_PAIRS[args.m]
    else:
        a_txt, b_txt = args.a, args.b
    if args.m is None or args.m < 2:
        raise InputError("--m is required with --a/--b (functions have m - 1 variables)")
    arity = args.m - 1
    return (BooleanFunction.from_anf(a_txt, arity), BooleanFunction.from_anf(b_txt, arity),
            (a_txt, b_txt))


def _code_from_args(args) -> tuple[z4code.Z4Code, dict]:
    if args.infile:
        text = Path(args.infile).read_text()
        return z4code.Z4Code.from_text(text), {"in": args.infile}
    a, b, labels = _pair(args)
    cf = build_cf(a, b)
    return circulant_code(cf), {"a": labels[0], "b": labels[1], "m": args.m, "c_f": str(cf)}


def _summary(code: z4code.Z4Code) -> dict:
    k1, k2 = code.type()
    return {"length": code.length, "type": [k1, k2], "cardinality": code.cardinality(),
            "self_orthogonal": z4code.is_self_orthogonal(code),
            "self_dual": z4code.is_self_dual(code),
            "standard_form": code.standard_form().matrix().tolist()}


def cmd_bent(args) -> tuple[dict, int]:
    n = args.n
    fns = enumerate_bent(n)
    out = {"n": n, "count": len(fns)}
    if args.list:
        out["tables"] = [str(f) for f in fns]
    return out, EXIT_OK


def cmd_gbent(args) -> tuple[dict, int]:
    a, b, labels = _pair(args)
    f = gbent_from_bent_pair(a, b)
    spec = generalized_walsh_hadamard(f)
    ok = is_gbent(f)
    return {"a": labels[0], "b": labels[1], "m": args.m, "table": str(f), "gbent": ok,
            "spectrum_norms": sorted({w.norm() for w in spec})}, EXIT_OK if ok else EXIT_FAIL


def cmd_build(args) -> tuple[dict, int]:
    code, inputs = _code_from_args(args)
    s = _summary(code)
    s["cyclic"] = z4code.is_cyclic_z4(code)
    return {"inputs": inputs, "C_f": s}, EXIT_OK


def cmd_extend(args) -> tuple[dict, int]:
    code, inputs = _code_from_args(args)
    ext = extend_type_II(code)
    s = _summary(ext.code)
    cert = z4code.is_type_II(ext.code)
    s.update(permutation=list(ext.permutation), k2=ext.k2, k3=ext.k3,
             extension_rows=["".join(map(str, r)) for r in ext.extension_rows],
             type_II={"holds": cert.holds, "method": cert.method})
    return {"inputs": inputs, "extension": s}, EXIT_OK if cert.holds else EXIT_FAIL


def cmd_gray(args) -> tuple[dict, int]:
    code, inputs = _code_from_args(args)
    out = {"inputs": inputs, "C_f": gray_parameters(gray_image_code(code))}
    if not args.infile:
        out["extension"] = gray_parameters(gray_image_code(extend_type_II(code).code))
    return out, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    if args.m not in (3, 5):
        raise InputError(f"verify supports m in (3, 5), not {args.m}")
    a, b, labels = _pair(args)
    rep = pipeline(a, b, samples=args.samples, seed=args.seed, exhaustive=args.exhaustive,
                   with_designs=False, labels=labels)
    out = {"inputs": rep["inputs"], "backend": rep["backend"], "checks": rep["checks"],
           "all_passed": rep["all_passed"]}
    return out, EXIT_OK if rep["all_passed"] else EXIT_FAIL


def cmd_designs(args) -> tuple[dict, int]:
    if args.m not in (3, 5, 7):
        raise InputError(f"designs supports m in (3, 5, 7), not {args.m}")
    out: dict = {"m": args.m}
    if args.m in (3, 5):
        a, b, _ = _pair(args)
        out["designs"] = designs.code_designs(a, b)
        ok = all(r.get("class_coverage_ok", True) for r in out["designs"])
    else:
        td = designs.torsion_min_weight_design(7)
        rec = designs.design_record(td.design, "torsion code of the extension: weight 2")
        rec["classes"] = {str(k): len(v) for k, v in td.classes.items()}
        rec["class_coverage_ok"] = td.coverage_ok
        out["designs"] = [rec]
        ok = td.coverage_ok
    if not args.blocks:
        for r in out["designs"]:
            r.pop("blocks", None)
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_pipeline(args) -> tuple[dict, int]:
    a, b, labels = _pair(args)
    rep = pipeline(a, b, samples=args.samples, seed=args.seed, exhaustive=args.exhaustive,
                   labels=labels)
    return rep, EXIT_OK if rep["all_passed"] else EXIT_FAIL


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- " + _text(x, indent + 1).lstrip() if isinstance(x, dict)
                         else f"{pad}- {_flat(x)}" for x in obj)
    return pad + _flat(obj)


def _flat(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_flat(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    return str(v)


COMMANDS = {
    "bent": (cmd_bent, "enumerate bent functions of arity n (2 or 4)"),
    "gbent": (cmd_gbent, "gbent function from a bent pair"),
    "build": (cmd_build, "circulant code C_f"),
    "extend": (cmd_extend, "self-dual Type II extension of C_f"),
    "gray": (cmd_gray, "Gray images of C_f and its extension"),
    "verify": (cmd_verify, "closed forms against enumeration or sampling"),
    "designs": (cmd_designs, "1-designs from minimum-weight codewords"),
    "pipeline": (cmd_pipeline, "full construction report"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="z4gbent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name == "bent":
            p.add_argument("--n", type=int, default=2, help="arity (default 2)")
            p.add_argument("--list", action="store_true", help="include the truth tables")
        else:
            p.add_argument("--m", type=int, default=3, help="code length is 2^m (default 3)")
            p.add_argument("--a", help="ANF of the first bent function, e.g. 'x1*x2'")
            p.add_argument("--b", help="ANF of the second bent function")
        if name in ("build", "extend", "gray"):
            p.add_argument("--in", dest="infile", help="Z4 generator matrix file (digit rows)")
        if name in ("verify", "pipeline"):
            p.add_argument("--exhaustive", action="store_true",
                           help="enumerate all codewords of the extension (2^32 at m=5)")
            p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
            p.add_argument("--seed", type=int, default=0, help="64-bit PCG64 seed")
        if name == "designs":
            p.add_argument("--blocks", action="store_true", help="list blocks (1-based points)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--out", help="write output to this path")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if hasattr(args, "samples") and args.samples < MIN_SAMPLES:
            raise InputError(f"--samples must be at least {MIN_SAMPLES}")
        if hasattr(args, "seed") and not 0 <= args.seed < 1 << 64:
            raise InputError("--seed must be a 64-bit unsigned integer")
        result, code = COMMANDS[args.command][0](args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except Z4GbentError as exc:
        # precondition and construction failures
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT if isinstance(exc, ValueError) else EXIT_FAIL
    if args.json:
        text = dumps(result)
    else:
        text = _text(jsonable(result)) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
