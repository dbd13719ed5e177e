"""
Rank kernel benchmark: numba int64 Bareiss vs the numpy fallback.

    python benchmarks/bench_rank.py [--sizes 8 16 32 64] [--repeat 5]

Also times the full KP character of a few permutations under each backend
(the backend is switched through KPSCHUBERT_JIT, which is read per call).
"""

import argparse
import os
import time

import numpy as np

from kpschubert import permkit as pk
from kpschubert import weightmod as wm
from kpschubert.weightmod import _rank


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def low_rank(rng, n):
    # Bareiss entries at step k are (k+1)-minors, which vanish past the rank,
    # so a small rank keeps every intermediate well inside int64
    r = min(6, n // 2)
    return (rng.integers(-1, 2, size=(n, r)) @ rng.integers(-1, 2, size=(r, n))).astype(np.int64)


def kernel_table(sizes, repeat):
    rng = np.random.default_rng(0)
    print(f"{'size':>6} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n in sizes:
        mats = [low_rank(rng, n) for _ in range(10)]
        ranks = {_rank.bareiss_rank_numpy(a) for a in mats}
        assert ranks == {_rank.bareiss_rank_numpy(a.astype(object)) for a in mats}
        t_np = best_of(lambda: [_rank.bareiss_rank_numpy(a) for a in mats], repeat) / len(mats)
        if _rank.HAVE_NUMBA:
            _rank.bareiss_rank_jit(mats[0])  # compile or load cache
            assert {_rank.bareiss_rank_jit(a) for a in mats} == ranks
            t_jit = best_of(lambda: [_rank.bareiss_rank_jit(a) for a in mats], repeat) / len(mats)
            print(f"{n:>6} {t_np * 1e3:>10.3f} {t_jit * 1e3:>10.3f} {t_np / t_jit:>7.1f}x")
        else:
            print(f"{n:>6} {t_np * 1e3:>10.3f} {'n/a':>10}")


def character_table(words, repeat):
    print(f"\n{'w':>10} {'blocks':>7} {'numpy ms':>10} {'numba ms':>10}")
    for word in words:
        w = pk.Permutation(word)
        phi = wm.build_phi(pk.shape_of(w))
        row = [f"{str(w):>10}", f"{len(phi.blocks):>7}"]
        for flag in ("0", "1"):
            os.environ["KPSCHUBERT_JIT"] = flag
            row.append(f"{best_of(phi.character, repeat) * 1e3:>10.2f}")
        print(" ".join(row))
    os.environ.pop("KPSCHUBERT_JIT", None)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64, 128])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernel_table(args.sizes, args.repeat)
    character_table([(4, 2, 1, 6, 3, 5), (5, 3, 1, 6, 4, 2), (2, 6, 4, 1, 5, 3), (3, 6, 1, 5, 2, 7, 4)], args.repeat)


if __name__ == "__main__":
    main()
