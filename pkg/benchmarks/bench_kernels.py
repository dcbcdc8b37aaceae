"""Compare the compiled word kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one workload on both backends and reports the speedup.
"""

from __future__ import annotations

import argparse
import importlib
import random
import timeit

from surfbraid import _pykernels


def _workloads(K):
    rng = random.Random(0)
    words = [K.reduce_letters(tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 24))))
             for _ in range(2000)]
    pairs = list(zip(words, reversed(words)))
    img1, img2 = (1, 2, -1), (-2, 1)

    def multiply():
        for a, b in pairs:
            K.mul(K.mul(a, b), K.inv(a))

    def reduce_raw():
        for w in words:
            K.reduce_letters(w + tuple(-c for c in reversed(w[: len(w) // 2])))

    def substitute():
        for w in words[:500]:
            K.substitute(w, img1, img2)

    def enumerate_palindromes():
        n = 0
        for L in range(11):
            for t in K.words_of_length(L):
                if K.is_palindrome(t) and K.exp_sum(t, 1) % 2 and K.exp_sum(t, 2) % 2:
                    n += 1
        assert n == 0

    def conjugate_reversal():
        ws = [t for L in range(5) for t in K.words_of_length(L)]
        for w in ws:
            if w and not K.exp_sum(w, 1) % 2 and not K.exp_sum(w, 2) % 2:
                target = K.inv(K.flip(w))
                for z in ws:
                    K.mul(z, w) == K.mul(target, z)

    return {
        "mul/inv, 2000 pairs": multiply,
        "reduce, 2000 words": reduce_raw,
        "substitute, 500 words": substitute,
        "palindrome scan, length <= 10": enumerate_palindromes,
        "conjugate-reversal pairs, length <= 4": conjugate_reversal,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        ck = importlib.import_module("surfbraid._ckernels")
    except ImportError:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation` first")

    py, cy = _workloads(_pykernels), _workloads(ck)
    print(f"{'workload':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name in py:
        tp = min(timeit.repeat(py[name], number=1, repeat=args.repeat))
        tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
        print(f"{name:40s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
