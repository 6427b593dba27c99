"""Timing comparison of the compiled and pure row-reduction backends.

Run:  python3 benchmarks/bench_gf.py
The compiled extension is used when importable unless KR_PURE=1 is set;
this script loads both explicitly and times the same workloads.
"""

import random
import time

from krstrata import _gfpure

try:
    from krstrata import _gfkernel
except ImportError:
    _gfkernel = None


def workload_random(backend, q, rows, cols, reps, seed=7):
    rng = random.Random(seed)
    mats = [
        [tuple(rng.randrange(q) for _ in range(cols)) for _ in range(rows)]
        for _ in range(reps)
    ]
    start = time.perf_counter()
    acc = 0
    for mat in mats:
        acc += len(backend.rref(mat, q))
        acc += backend.rank(mat, q)
        acc += len(backend.nullspace(mat, q, ncols=cols))
    return time.perf_counter() - start, acc


def workload_census(q):
    from krstrata.local_model import point_census

    start = time.perf_counter()
    _, rows = point_census(2, q)
    total = sum(observed for _, _, observed in rows)
    return time.perf_counter() - start, total


def main():
    print("backend availability: pure yes, compiled {0}".format(
        "yes" if _gfkernel else "no"
    ))
    header = "{0:<28}{1:>12}{2:>14}{3:>9}".format(
        "workload", "pure (s)", "compiled (s)", "speedup"
    )
    print(header)
    print("-" * len(header))
    cases = [
        ("rref 8x16 F_2 x2000", 2, 8, 16, 2000),
        ("rref 8x16 F_5 x2000", 5, 8, 16, 2000),
        ("rref 20x40 F_3 x400", 3, 20, 40, 400),
    ]
    for label, q, rows, cols, reps in cases:
        t_pure, check_pure = workload_random(_gfpure, q, rows, cols, reps)
        if _gfkernel:
            t_comp, check_comp = workload_random(_gfkernel, q, rows, cols, reps)
            assert check_pure == check_comp, "backends disagree"
            print(
                "{0:<28}{1:>12.4f}{2:>14.4f}{3:>8.1f}x".format(
                    label, t_pure, t_comp, t_pure / t_comp
                )
            )
        else:
            print("{0:<28}{1:>12.4f}{2:>14}{3:>9}".format(label, t_pure, "-", "-"))

    # end-to-end: the full census twice, once per backend selection
    import importlib
    import os

    import krstrata.gf as gfmod
    import krstrata.local_model as lm

    results = {}
    for mode, env in (("compiled", "0"), ("pure", "1")):
        if mode == "compiled" and not _gfkernel:
            continue
        os.environ["KR_PURE"] = env
        importlib.reload(gfmod)
        importlib.reload(lm)
        lm.make_chain_context.cache_clear()
        elapsed, total = workload_census(3)
        results[mode] = elapsed
        print(
            "{0:<28}{1:>12}".format(
                "census g=2 q=3 ({0})".format(mode), "{0:.4f}".format(elapsed)
            )
            + "  (total {0} points)".format(total)
        )
    os.environ.pop("KR_PURE", None)
    importlib.reload(gfmod)
    importlib.reload(lm)


if __name__ == "__main__":
    main()
