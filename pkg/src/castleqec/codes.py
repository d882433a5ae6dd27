"""Linear codes over small finite fields, with exact distance machinery.

A LinearCode is identified with its row space and stored as the reduced row
echelon form of any spanning set, so structural equality is literal matrix
equality.  Weight distributions are exact: full enumeration when q^k fits the
work budget, otherwise enumeration of the dual followed by the MacWilliams
transform in unbounded integers.  Nothing is ever estimated.
"""

from __future__ import annotations

import math
import os

import numpy as np

from . import linalg
from .fields import embedding
from .kernels import enumerate_weights

DEFAULT_BUDGET = 1 << 24


def work_budget():
    """Enumeration budget in codewords; override with CASTLEQEC_BUDGET."""
    raw = os.environ.get("CASTLEQEC_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"CASTLEQEC_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("CASTLEQEC_BUDGET must be positive")
    return value


class LinearCode:
    """An [n, k] linear code over a small finite field, canonically presented."""

    def __init__(self, field, n, rows=None):
        self.field = field
        self.n = n
        M = linalg.as_matrix([] if rows is None else rows, n)
        if M.shape[1] != n:
            raise ValueError(f"rows of length {M.shape[1]} in a length-{n} code")
        if M.size and int(M.max()) >= field.order:
            raise ValueError(f"entry out of range for {field!r}")
        self.matrix, self.pivots = linalg.rref(field, M, n)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, np.eye(n, dtype=np.uint16))

    @property
    def dimension(self):
        return len(self.pivots)

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and other.field is self.field
            and other.n == self.n
            and other.matrix.shape == self.matrix.shape
            and bool((other.matrix == self.matrix).all())
        )

    def __hash__(self):
        return hash((id(self.field), self.n, self.matrix.tobytes()))

    def __repr__(self):
        return f"[{self.n}, {self.dimension}] code over {self.field!r}"

    # -- membership and containment -----------------------------------------

    def contains_vector(self, v):
        v = np.asarray(v, dtype=np.uint16)
        if v.shape != (self.n,):
            raise ValueError("vector length mismatch")
        return not linalg.reduce_row(self.field, self.matrix, self.pivots, v).any()

    def contains_code(self, other):
        self._check_peer(other)
        return all(self.contains_vector(row) for row in other.matrix)

    def __le__(self, other):
        return other.contains_code(self)

    def _check_peer(self, other):
        if other.field is not self.field or other.n != self.n:
            raise ValueError("codes live in different ambient spaces")

    # -- derived codes --------------------------------------------------------

    def dual(self):
        return LinearCode(self.field, self.n, linalg.kernel_basis(self.field, self.matrix, self.n))

    def frobenius_power(self, e):
        """The code {c^e : c in C} for e a power of the characteristic."""
        p = self.field.p
        m = e
        while m > 1 and m % p == 0:
            m //= p
        if m != 1:
            raise ValueError(f"{e} is not a power of the characteristic {p}")
        P = self.field.pow_table(e)
        return LinearCode(self.field, self.n, P[self.matrix])

    def hermitian_dual(self):
        """Dual under <u, v>_H = sum u_i v_i^sqrt(q); field order must be a square."""
        qt = self._hermitian_root()
        return self.frobenius_power(qt).dual()

    def _hermitian_root(self):
        if self.field.k % 2 != 0:
            raise ValueError(f"{self.field!r} is not a quadratic extension")
        return self.field.p ** (self.field.k // 2)

    def star(self, x):
        """Coordinatewise scaling {x * c : c in C} by a fixed vector x."""
        x = np.asarray(x, dtype=np.uint16)
        if x.shape != (self.n,):
            raise ValueError("scaling vector length mismatch")
        return LinearCode(self.field, self.n, self.field.mul_table[self.matrix, x[None, :]])

    def star_product(self, other):
        """Span of all coordinatewise products of codewords of the two codes."""
        self._check_peer(other)
        if self.dimension == 0 or other.dimension == 0:
            return LinearCode.zero(self.field, self.n)
        prods = self.field.mul_table[self.matrix[:, None, :], other.matrix[None, :, :]]
        return LinearCode(self.field, self.n, prods.reshape(-1, self.n))

    def is_self_orthogonal(self, mode="euclidean"):
        """Whether C is contained in its (Euclidean or Hermitian) dual."""
        if self.dimension == 0:
            return True
        if mode == "euclidean":
            other = self.matrix
        elif mode == "hermitian":
            other = self.field.pow_table(self._hermitian_root())[self.matrix]
        else:
            raise ValueError(f"unknown orthogonality mode {mode!r}")
        return not linalg.matmul(self.field, self.matrix, other.T).any()

    def trace_code(self, small):
        """The code {(Tr(c_1), ..., Tr(c_n)) : c in C} over the subfield."""
        emb = embedding(small, self.field)
        alpha_pows = [self.field.pow(self.field.primitive, j) for j in range(emb.ratio)]
        rows = []
        for g in self.matrix:
            for a in alpha_pows:
                rows.append(emb.trace_vec(self.field.mul_table[a, g]))
        return LinearCode(small, self.n, rows)

    def subfield_subcode(self, small):
        """The code C intersected with small^n, as a code over the subfield.

        Computed directly: each dual constraint over the big field splits into
        ratio-many constraints over the subfield once the codeword entries are
        known to be subfield-valued.
        """
        emb = embedding(small, self.field)
        H = self.dual().matrix
        if H.shape[0] == 0:
            return LinearCode.full(small, self.n)
        small_rows = np.concatenate([emb.decompose_vec(h.astype(np.int64)) for h in H], axis=0)
        return LinearCode(small, self.n, linalg.kernel_basis(small, small_rows, self.n))

    # -- weights ---------------------------------------------------------------

    def weights(self, budget=None):
        """Lazy exact weight-distribution accessor, or None if over budget."""
        w = _Weights(self, work_budget() if budget is None else budget)
        return w if w.mode else None

    def weight_distribution(self, budget=None):
        """Exact [A_0, ..., A_n] as python ints, or None if over budget."""
        w = self.weights(budget)
        if w is None:
            return None
        return [w.coeff(j) for j in range(self.n + 1)]

    def min_weight(self, budget=None):
        """(d, "exact"), (None, "empty") for the zero code, or (None, "not-computed")."""
        if self.dimension == 0:
            return None, "empty"
        w = self.weights(budget)
        if w is None:
            return None, "not-computed"
        for j in range(1, self.n + 1):
            if w.coeff(j):
                return j, "exact"
        raise AssertionError("nonzero code with no nonzero-weight word")

    # -- serialization -----------------------------------------------------------

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "k": self.dimension,
            "generators": [[int(v) for v in row] for row in self.matrix],
        }


def code_from_json(obj):
    from .fields import field_from_json

    try:
        F = field_from_json(obj["field"])
        n = int(obj["n"])
        gens = obj["generators"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed code descriptor") from exc
    C = LinearCode(F, n, gens)
    if "k" in obj and int(obj["k"]) != C.dimension:
        raise ValueError(f"descriptor claims dimension {obj['k']}, rows span {C.dimension}")
    return C


def relative_min_weight(sub, sup, budget=None):
    """Smallest weight in sup minus sub, as (d, status).

    Statuses: "exact" when computed, "empty" when the codes coincide,
    "not-computed" when either weight distribution is over budget.
    """
    sup._check_peer(sub)
    if sub.dimension == sup.dimension:
        return None, "empty"
    b = work_budget() if budget is None else budget
    wsup = sup.weights(b)
    wsub = sub.weights(b)
    if wsup is None or wsub is None:
        return None, "not-computed"
    for j in range(1, sup.n + 1):
        if wsup.coeff(j) > wsub.coeff(j):
            return j, "exact"
    raise AssertionError("strictly larger code with no extra weight")


class _Weights:
    """Exact weight-distribution coefficients for one code, lazily.

    mode "direct": full enumeration of the code itself.
    mode "mac": enumeration of the dual plus per-coefficient MacWilliams
    transform (cached), so asking for the first few A_j of a huge code stays
    cheap.  mode None: both sides exceed the budget.
    """

    def __init__(self, code, budget):
        q, n, k = code.field.order, code.n, code.dimension
        self.n, self.q = n, q
        self.mode = None
        if q ** k <= budget:
            self.mode = "direct"
            self.vec = [int(c) for c in enumerate_weights(code.field, code.matrix)]
        elif q ** (n - k) <= budget:
            self.mode = "mac"
            dual = code.dual()
            self.dual_counts = [int(c) for c in enumerate_weights(code.field, dual.matrix)]
            self.dual_size = q ** dual.dimension
            self.cache = {}

    def coeff(self, j):
        if self.mode == "direct":
            return self.vec[j]
        if j not in self.cache:
            self.cache[j] = macwilliams_coefficient(
                self.n, self.q, self.dual_counts, self.dual_size, j
            )
        return self.cache[j]


def krawtchouk(n, q, j, i):
    """The Krawtchouk polynomial value K_j(i) over GF(q), exactly."""
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
        for s in range(min(i, j) + 1)
    )


def macwilliams_coefficient(n, q, dual_counts, dual_size, j):
    """A_j of a code from the weight distribution of its dual, exactly."""
    total = sum(B_i * krawtchouk(n, q, j, i) for i, B_i in enumerate(dual_counts) if B_i)
    assert total % dual_size == 0, "MacWilliams transform must be integral"
    value = total // dual_size
    assert value >= 0, "weight counts are nonnegative"
    return value
