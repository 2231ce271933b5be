#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-NumPy fallback.

Times the two hot enumerations on their production workloads and checks the
outputs agree exactly:

  * ternary fiber pattern counting for the 11-qutrit code (3^10 points x 9
    logical points), with the 2-class strange grid and the 3-class Norell grid
  * signed weight tables over the 2^22-element stabilizer group of the
    23-qubit code (2048 x 2048 codeword pairs)

Run:  python benchmarks/compare_kernels.py
"""
import time

import numpy as np

from golaymsd._kernels import _core, pure
from golaymsd.codes import golay_binary, golay_qutrit_code


def fiber_problem(n_classes):
    code = golay_qutrit_code()
    mat = code.matrix.array()
    amat, bmat = mat[:, :11].T.copy(), mat[:, 11:].T.copy()
    az, bz = np.array(code.logical_z.u), np.array(code.logical_z.v)
    ax, bx = np.array(code.logical_x.u), np.array(code.logical_x.v)
    base = np.zeros((3, 3), dtype=np.int64)
    if n_classes == 2:
        base[0, 1:] = 1
        base[1:, :] = 1
    else:
        base[0, 1:] = 1
        base[1:, :] = 2
    tables = np.repeat(base[None, :, :], 11, axis=0)
    return (amat, bmat, az, bz, ax, bx, tables, n_classes, 3)


def golay_words():
    code = golay_binary()
    gens = [sum(1 << i for i, b in enumerate(row) if b) for row in code.generator.rows]
    words = [0]
    for g in gens:
        words += [w ^ g for w in words]
    return np.array(words, dtype=np.int64)


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    if _core is None:
        print("compiled kernels not built; nothing to compare "
              "(install with Cython available)")
        return
    rows = []
    for label, args in (
        ("fiber counts, 2 classes (strange)", fiber_problem(2)),
        ("fiber counts, 3 classes (Norell)", fiber_problem(3)),
    ):
        t_pure, r_pure = timed(pure.pattern_counts, *args)
        t_core, r_core = timed(_core.pattern_counts, *args)
        assert r_pure == r_core, "backends disagree"
        rows.append((label, t_pure, t_core))

    words = golay_words()
    t_pure, r_pure = timed(pure.pauli_pair_tables, words, 23, repeat=2)
    t_core, r_core = timed(_core.pauli_pair_tables, words, 23, repeat=2)
    assert (r_pure == r_core).all(), "backends disagree"
    rows.append(("pauli pair tables, 2^22 group", t_pure, t_core))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'numpy':>10}  {'cython':>10}  {'speedup':>8}")
    for label, t_pure, t_core in rows:
        print(f"{label:<{width}}  {t_pure * 1e3:>8.1f}ms  {t_core * 1e3:>8.1f}ms  "
              f"{t_pure / t_core:>7.1f}x")


if __name__ == "__main__":
    main()
