# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel for weight distributions.

Walks all q^k codewords with an odometer over scalar-multiple rows,
recomputing partial sums only from the lowest digit that changed.  The caller
precomputes scalar_rows[i, s] = s * G[i] so the inner loop is pure table
lookups.
"""

import numpy as np


def weight_distribution(const unsigned short[:, :, ::1] scalar_rows,
                        const unsigned short[:, ::1] add_table,
                        int q):
    """Counts of Hamming weights over the row space spanned by k rows.

    scalar_rows has shape (k, q, n); returns an int64 array of length n + 1.
    """
    cdef Py_ssize_t k = scalar_rows.shape[0]
    cdef Py_ssize_t n = scalar_rows.shape[2]

    counts_np = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] counts = counts_np
    if k == 0:
        counts[0] = 1
        return counts_np

    partial_np = np.zeros((k + 1, n), dtype=np.uint16)
    cdef unsigned short[:, ::1] partial = partial_np
    digits_np = np.zeros(k, dtype=np.intp)
    cdef Py_ssize_t[::1] digits = digits_np

    cdef Py_ssize_t pos = 0
    cdef Py_ssize_t j, c, w
    while True:
        for j in range(pos, k):
            for c in range(n):
                partial[j + 1, c] = add_table[partial[j, c], scalar_rows[j, digits[j], c]]
        w = 0
        for c in range(n):
            if partial[k, c] != 0:
                w += 1
        counts[w] += 1

        j = k - 1
        while j >= 0 and digits[j] == q - 1:
            digits[j] = 0
            j -= 1
        if j < 0:
            break
        digits[j] += 1
        pos = j
    return counts_np
