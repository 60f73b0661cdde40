"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from z4gbent import _fallback, bincode, z4code
from z4gbent.construct import build_cf, circulant_code, extend_type_II, gray_image_code, reference_pair

try:
    from z4gbent import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def cases():
    a, b = reference_pair(5)
    cf = circulant_code(build_cf(a, b))
    ext = extend_type_II(cf).code
    los, his = cf._odd_parts()
    yield "swe C_f m=5 (2^25 words)", "z4_swe_counts", (los, his, cf._even_basis(), cf.length)
    image = gray_image_code(cf)
    yield "weights Gray(C_f) m=5 (2^25 words)", "binary_weight_counts", (list(image.basis), image.length)
    tor = z4code.torsion(ext)
    sub = bincode.BinaryCode(tor.length, tor.basis[:24])
    yield "weights torsion subcode (2^24 words)", "binary_weight_counts", (list(sub.basis), sub.length)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':42s} {'numpy':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, name, argv in cases():
        t_np, r_np = _time(lambda: getattr(_fallback, name)(*argv), args.repeat)
        if compiled is None:
            print(f"{label:42s} {t_np:10.3f} {'n/a':>10s}")
            continue
        t_c, r_c = _time(lambda: getattr(compiled, name)(*argv), args.repeat)
        assert np.array_equal(np.asarray(r_np), np.asarray(r_c)), f"{name}: backends disagree"
        print(f"{label:42s} {t_np:10.3f} {t_c:10.3f} {t_np / t_c:7.1f}x")


if __name__ == "__main__":
    main()
