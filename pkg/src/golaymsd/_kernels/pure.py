"""NumPy implementations of the hot enumeration kernels.

These are the fallback used when the compiled extension is unavailable; the
Cython versions in `_core.pyx` compute exactly the same integer tables.
"""
from __future__ import annotations

import numpy as np


def pattern_counts(amat, bmat, az, bz, ax, bx, class_tables, n_classes, d):
    """Count fiber points by per-qudit cell-class pattern, per logical point.

    amat, bmat: (n, m) arrays; the fiber point for exponent vector w has
    per-qudit coordinates z = amat @ w - zL*az - xL*ax and
    x = bmat @ w - zL*bz - xL*bx (all mod d).
    class_tables: (n, d, d) array assigning a class id to each cell (z, x)
    of each qudit.

    Returns {(zL, xL): {pattern: count}} where pattern is the tuple of
    per-class qudit counts (length n_classes, summing to n).
    """
    amat = np.asarray(amat, dtype=np.int64)
    bmat = np.asarray(bmat, dtype=np.int64)
    class_tables = np.asarray(class_tables, dtype=np.int64)
    n, m = amat.shape
    exps = _exponent_grid(d, m)
    zu = exps @ amat.T % d                      # (d**m, n)
    xu = exps @ bmat.T % d
    qudit_idx = np.arange(n)[None, :]
    radix = n + 1
    out = {}
    for zl in range(d):
        for xl in range(d):
            zz = (zu - zl * np.asarray(az) - xl * np.asarray(ax)) % d
            xx = (xu - zl * np.asarray(bz) - xl * np.asarray(bx)) % d
            cls = class_tables[qudit_idx, zz, xx]
            codes = np.zeros(len(cls), dtype=np.int64)
            for c in range(n_classes):
                codes = codes * radix + (cls == c).sum(axis=1)
            uniq, counts = np.unique(codes, return_counts=True)
            patterns = {}
            for code, cnt in zip(uniq.tolist(), counts.tolist()):
                pat = []
                for _ in range(n_classes):
                    pat.append(code % radix)
                    code //= radix
                patterns[tuple(reversed(pat))] = cnt
            out[(zl, xl)] = patterns
    return out


def _exponent_grid(d, m):
    """(d**m, m) array of all exponent vectors, first column fastest."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    counts = d ** np.arange(m)
    idx = np.arange(d**m, dtype=np.int64)
    return (idx[:, None] // counts[None, :]) % d


def pauli_pair_tables(words, n, chunk=256):
    """Signed weight tables for the stabilizer group {X^a Z^b : a,b in C}
    of a self-orthogonal binary code C, against four observables.

    words: the 2**k codewords of C packed as integers.
    Returns an int64 array of shape (4, 4, n+1): observable (identity,
    logical X, logical Y, logical Z as all-ones tensor operators), phase
    exponent of i mod 4, Pauli weight.  Exact integer counts.
    """
    words = np.asarray(words, dtype=np.int64)
    bits = ((words[:, None] >> np.arange(n)[None, :]) & 1).astype(np.float64)
    wts = bits.sum(axis=1).astype(np.int64)
    tables = np.zeros((4, 4, n + 1), dtype=np.int64)
    nwords = len(words)
    for lo in range(0, nwords, chunk):
        hi = min(lo + chunk, nwords)
        # |a & b| via a float matmul (exact for these magnitudes)
        ab = np.rint(bits[lo:hi] @ bits.T).astype(np.int64)
        wa = wts[lo:hi, None]
        wb = wts[None, :]
        # identity: phase (-i)^{|a&b|}, weight |a|b|
        _accumulate(tables[0], -ab, wa + wb - ab, n)
        # logical X = X^(1...1): phase (-i)^{|b| - |a&b|}, weight n - |a| + |a&b|
        _accumulate(tables[1], -(wb - ab), n - wa + ab, n)
        # logical Y = i^n X^(1..1) Z^(1..1): phase i^n (-i)^{n - |a|b|}, weight n - |a&b|
        _accumulate(tables[2], n - (n - (wa + wb - ab)), n - ab, n)
        # logical Z = Z^(1...1): phase (-i)^{|a| - |a&b|}, weight n - |b| + |a&b|
        _accumulate(tables[3], -(wa - ab), n - wb + ab, n)
    return tables


def _accumulate(table, phase_pow, weight, n):
    codes = (phase_pow % 4) * (n + 1) + weight
    flat = np.bincount(codes.ravel(), minlength=4 * (n + 1))
    table += flat.reshape(4, n + 1)
