"""Crossover benchmark: schoolbook vs Karatsuba, plus GNB multiplications.

Numbers are medians over --samples runs and are descriptive only; the
crossover is hardware dependent, which is why the Karatsuba threshold is
a parameter rather than a constant.
"""
import statistics
import time

import numpy as np

from . import backend
from .gauss import GnbElement, build_params, gnb_mul
from .gf2x import BinaryPolynomial, KARATSUBA_THRESHOLD_WORDS, _kara_words

#: bases from the reference table exercising the regime where degrees start at 250
DEFAULT_GNB_CASES = ((250, 9), (251, 2), (268, 1), (443, 2), (508, 1), (599, 8))


def _median_ns(fn, samples):
    times = []
    for _ in range(samples):
        t0 = time.perf_counter_ns()
        fn()
        t1 = time.perf_counter_ns()
        times.append(t1 - t0)
    return float(statistics.median(times))


def _random_poly(rng, degree):
    bits = rng.integers(0, 2, degree + 1, dtype=np.uint8)
    bits[degree] = 1
    return BinaryPolynomial.from_bits(bits)


def bench_crossover(
    min_deg: int,
    max_deg: int,
    samples: int = 100,
    compare_backends: bool = False,
    gnb_cases=DEFAULT_GNB_CASES,
    seed: int = 20240101,
):
    """Rows (degree, algorithm, ns_per_op) over a geometric degree ladder."""
    if min_deg < 1:
        raise ValueError(f"min_deg must be >= 1, got {min_deg}")
    rng = np.random.default_rng(seed)
    rows = []
    kernels = [(None, backend)]
    if compare_backends:
        kernels = [(name, backend.kernel_module(name)) for name in backend.available_backends()]

    degree = min_deg
    while degree <= max_deg:
        a = _random_poly(rng, degree)
        b = _random_poly(rng, degree)
        aw, bw = a.words, b.words
        for name, mod in kernels:
            suffix = "" if name is None else f"[{name}]"
            mul = mod.mul_words
            rows.append(
                (degree, f"schoolbook{suffix}", _median_ns(lambda: mul(aw, bw), samples))
            )
            rows.append(
                (
                    degree,
                    f"karatsuba{suffix}",
                    _median_ns(
                        lambda: _kara_words(aw, bw, KARATSUBA_THRESHOLD_WORDS, mul), samples
                    ),
                )
            )
        degree *= 2

    for n, k in gnb_cases:
        params = build_params(n, k)
        x = GnbElement.random(params, rng)
        y = GnbElement.random(params, rng)
        rows.append((n, f"gnb_n{n}_k{k}", _median_ns(lambda: gnb_mul(x, y), samples)))
    return rows


def rows_to_csv(rows) -> str:
    out = ["degree,algorithm,ns_per_op"]
    for degree, algorithm, ns in rows:
        out.append(f"{degree},{algorithm},{ns:.0f}")
    return "\n".join(out) + "\n"
