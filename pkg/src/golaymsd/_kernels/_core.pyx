# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the enumeration kernels.

Same integer-table semantics as `pure.py`; the fiber walk uses a base-d
odometer with incremental coordinate updates so each fiber point costs O(n)
work, and the pair loop uses hardware popcounts.
"""
import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def pattern_counts(amat, bmat, az, bz, ax, bx, class_tables, int n_classes, int d):
    """See pure.pattern_counts; requires (n+1)**n_classes to fit comfortably
    in memory (the caller only dispatches here for small class counts)."""
    cdef cnp.int64_t[:, ::1] a = np.ascontiguousarray(amat, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] b = np.ascontiguousarray(bmat, dtype=np.int64)
    cdef cnp.int64_t[::1] az_ = np.ascontiguousarray(az, dtype=np.int64)
    cdef cnp.int64_t[::1] bz_ = np.ascontiguousarray(bz, dtype=np.int64)
    cdef cnp.int64_t[::1] ax_ = np.ascontiguousarray(ax, dtype=np.int64)
    cdef cnp.int64_t[::1] bx_ = np.ascontiguousarray(bx, dtype=np.int64)
    cdef cnp.int64_t[:, :, ::1] tables = np.ascontiguousarray(class_tables, dtype=np.int64)
    cdef int n = a.shape[0]
    cdef int m = a.shape[1]
    cdef int radix = n + 1
    cdef long flat_size = 1
    cdef int i
    for i in range(n_classes):
        flat_size *= radix
        if flat_size > (1 << 22):
            raise ValueError("too many cell classes for the dense accumulator; "
                             "use the fallback kernel")
    acc_np = np.zeros(flat_size, dtype=np.int64)
    cdef cnp.int64_t[::1] acc = acc_np

    cdef cnp.int64_t[::1] z = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] x = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] digits = np.zeros(m, dtype=np.int64)
    cdef cnp.int64_t[::1] cnt = np.zeros(n_classes, dtype=np.int64)

    cdef long total = 1
    for i in range(m):
        total *= d

    out = {}
    cdef int zl, xl, j, q, c
    cdef long step, key, kk
    for zl in range(d):
        for xl in range(d):
            for key in range(flat_size):
                acc[key] = 0
            for q in range(n):
                # canonical residues of the affine offsets
                z[q] = (((-zl * az_[q] - xl * ax_[q]) % d) + d) % d
                x[q] = (((-zl * bz_[q] - xl * bx_[q]) % d) + d) % d
            for j in range(m):
                digits[j] = 0
            with nogil:
                for step in range(total):
                    for c in range(n_classes):
                        cnt[c] = 0
                    for q in range(n):
                        cnt[tables[q, z[q], x[q]]] += 1
                    key = 0
                    for c in range(n_classes):
                        key = key * radix + cnt[c]
                    acc[key] += 1
                    # base-d odometer; adding column j d times is a no-op
                    # mod d, so rollover needs no correction
                    for j in range(m):
                        digits[j] += 1
                        for q in range(n):
                            z[q] += a[q, j]
                            if z[q] >= d:
                                z[q] -= d
                            x[q] += b[q, j]
                            if x[q] >= d:
                                x[q] -= d
                        if digits[j] < d:
                            break
                        digits[j] = 0
            patterns = {}
            nonzero = np.nonzero(acc_np)[0]
            for key in nonzero:
                pat = []
                kk = key
                for c in range(n_classes):
                    pat.append(kk % radix)
                    kk //= radix
                patterns[tuple(reversed(pat))] = int(acc_np[key])
            out[(zl, xl)] = patterns
    return out


def pauli_pair_tables(words, int n):
    """See pure.pauli_pair_tables; pair loop with hardware popcounts."""
    cdef cnp.int64_t[::1] w = np.ascontiguousarray(words, dtype=np.int64)
    cdef int nwords = w.shape[0]
    tables_np = np.zeros((4, 4, n + 1), dtype=np.int64)
    cdef cnp.int64_t[:, :, ::1] tables = tables_np
    cdef int i, j, ab, wa, wb, union
    cdef unsigned long long a, b
    with nogil:
        for i in range(nwords):
            a = <unsigned long long> w[i]
            wa = __builtin_popcountll(a)
            for j in range(nwords):
                b = <unsigned long long> w[j]
                wb = __builtin_popcountll(b)
                ab = __builtin_popcountll(a & b)
                union = wa + wb - ab
                # phase exponents kept nonnegative before reduction mod 4
                tables[0, (4 - ab % 4) % 4, union] += 1
                tables[1, (4 - (wb - ab) % 4) % 4, n - wa + ab] += 1
                tables[2, union % 4, n - ab] += 1
                tables[3, (4 - (wa - ab) % 4) % 4, n - wb + ab] += 1
    return tables_np
