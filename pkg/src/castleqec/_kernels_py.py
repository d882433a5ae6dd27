"""Pure-numpy fallback for the enumeration kernel.

Same contract as the compiled version in _accel.pyx: enumerate all q^k words
of the row space and histogram their Hamming weights.  Here the trailing rows
are expanded once into a block of at most 2^16 words, and an odometer over
the leading rows shifts the whole block by one partial sum at a time.
"""

from __future__ import annotations

import numpy as np

_BLOCK_WORDS = 1 << 16


def weight_distribution(scalar_rows, add_table, q):
    """Counts of Hamming weights over the row space; scalar_rows is (k, q, n)."""
    scalar_rows = np.asarray(scalar_rows, dtype=np.uint16)
    k, _, n = scalar_rows.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return counts

    kb = 1
    while kb < k and q ** (kb + 1) <= _BLOCK_WORDS:
        kb += 1
    block = np.zeros((1, n), dtype=np.uint16)
    for i in range(k - kb, k):
        block = add_table[block[:, None, :], scalar_rows[i][None, :, :]].reshape(-1, n)

    k_pre = k - kb
    if k_pre == 0:
        w = np.count_nonzero(block, axis=1)
        return np.bincount(w, minlength=n + 1).astype(np.int64)

    digits = [0] * k_pre
    partial = np.zeros((k_pre + 1, n), dtype=np.uint16)
    pos = 0
    while True:
        for j in range(pos, k_pre):
            partial[j + 1] = add_table[partial[j], scalar_rows[j, digits[j]]]
        words = add_table[block, partial[k_pre][None, :]]
        w = np.count_nonzero(words, axis=1)
        counts += np.bincount(w, minlength=n + 1)

        j = k_pre - 1
        while j >= 0 and digits[j] == q - 1:
            digits[j] = 0
            j -= 1
        if j < 0:
            break
        digits[j] += 1
        pos = j
    return counts
