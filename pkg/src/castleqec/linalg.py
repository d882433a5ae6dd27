"""Dense linear algebra over small finite fields.

Matrices are numpy uint16 arrays of element indices; all arithmetic goes
through the owning field's add/mul tables via fancy indexing, so everything
stays exact.  Shapes follow the coding convention: rows are vectors.
"""

from __future__ import annotations

import numpy as np


def as_matrix(rows, n=None):
    """Coerce to a 2-D uint16 array; row-less input needs the ambient length n."""
    M = np.asarray(rows, dtype=np.uint16)
    if M.ndim == 2:
        return M
    if M.size == 0:
        return np.zeros((0, 0 if n is None else n), dtype=np.uint16)
    return M[None, :]


def rref(field, rows, n=None):
    """Reduced row echelon form with zero rows dropped.

    Returns (R, pivots); R[i, pivots[i]] = 1, pivot columns are zero
    elsewhere, pivots strictly increase.  This is the canonical form used for
    code equality.
    """
    R = as_matrix(rows, n).copy()
    k, ncols = R.shape
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    pivots = []
    r = 0
    for col in range(ncols):
        if r == k:
            break
        nz = np.nonzero(R[r:, col])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = mul[inv[R[r, col]], R[r]]
        mask = R[:, col] != 0
        mask[r] = False
        if mask.any():
            R[mask] = add[R[mask], mul[neg[R[mask, col]][:, None], R[r][None, :]]]
        pivots.append(col)
        r += 1
    return np.ascontiguousarray(R[:r]), tuple(pivots)


def rank(field, rows, n=None):
    return len(rref(field, rows, n)[1])


def kernel_basis(field, rows, n=None):
    """Rows spanning {v : M v^T = 0}, already in reduced echelon form."""
    M = as_matrix(rows, n)
    ncols = M.shape[1]
    R, pivots = rref(field, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    B = np.zeros((len(free), ncols), dtype=np.uint16)
    neg = field.neg_table
    for i, fc in enumerate(free):
        B[i, fc] = 1
        for j, pc in enumerate(pivots):
            B[i, pc] = neg[R[j, fc]]
    return rref(field, B, ncols)[0]


def matmul(field, A, B):
    """Matrix product over the field; A is (m, t), B is (t, n)."""
    A = as_matrix(A)
    B = as_matrix(B)
    m, t = A.shape
    t2, n = B.shape
    assert t == t2, f"shape mismatch {A.shape} x {B.shape}"
    add, mul = field.add_table, field.mul_table
    out = np.zeros((m, n), dtype=np.uint16)
    for i in range(t):
        out = add[out, mul[A[:, i][:, None], B[i][None, :]]]
    return out


def reduce_row(field, R, pivots, v):
    """Reduce v against an RREF basis; the result is 0 iff v is in the row space."""
    v = np.array(v, dtype=np.uint16, copy=True)
    add, mul, neg = field.add_table, field.mul_table, field.neg_table
    for j, c in enumerate(pivots):
        if v[c]:
            v = add[v, mul[neg[v[c]], R[j]]]
    return v


class RREFAccumulator:
    """Maintains a canonical RREF basis under one-row-at-a-time insertion.

    Used to build strictly increasing code sequences: after every successful
    insert, snapshot() equals rref() of all rows inserted so far.
    """

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.rows = []  # kept sorted by pivot column
        self.pivots = []

    def insert(self, v):
        """Add one vector; returns True if it enlarged the span."""
        f = self.field
        add, mul, neg, inv = f.add_table, f.mul_table, f.neg_table, f.inv_table
        v = np.array(v, dtype=np.uint16, copy=True)
        assert v.shape == (self.n,)
        for j, c in enumerate(self.pivots):
            if v[c]:
                v = add[v, mul[neg[v[c]], self.rows[j]]]
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        col = int(nz[0])
        v = mul[inv[v[col]], v]
        for j in range(len(self.rows)):
            c = self.rows[j][col]
            if c:
                self.rows[j] = add[self.rows[j], mul[neg[c], v]]
        pos = int(np.searchsorted(np.array(self.pivots + [self.n]), col))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, col)
        return True

    @property
    def dimension(self):
        return len(self.rows)

    def snapshot(self):
        if not self.rows:
            return np.zeros((0, self.n), dtype=np.uint16)
        return np.array(self.rows, dtype=np.uint16)
