"""Quantum stabilizer codes derived from classical linear codes.

CSS constructions from nested or self-orthogonal pairs, the hermitian
construction over square-order fields, the three sequence constructions on
certified (twisted) self-dual flags, and classification against the quantum
Gilbert-Varshamov threshold with exact integer arithmetic.

Distances are exact whenever the enumeration budget allows; otherwise the
parameter object carries d = None and callers substitute a certified lower
bound, flagging the provenance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .agcodes import dual_distance_bound
from .codes import relative_min_weight


@dataclass
class QuantumParams:
    """An [[n, k, d]]_q stabilizer code's parameters.

    d is None when the distance could not be computed exactly within budget;
    d_provenance is "exact" or "lower-bound" accordingly.
    """

    n: int
    k: int
    d: int | None
    q: int
    d_provenance: str
    construction: str

    def __str__(self):
        d = "?" if self.d is None else self.d
        return f"[[{self.n},{self.k},{d}]]_{self.q}"

    def with_bound(self, bound):
        """Fill in a certified lower bound when the exact distance is missing."""
        if self.d is not None:
            return self
        return QuantumParams(self.n, self.k, int(bound), self.q, "lower-bound", self.construction)


def css_nested(c1, c2, budget=None, construction="css"):
    """CSS code of a nested pair C1 <= C2 over F_q: [[n, k2 - k1]]_q.

    d = min weight over (C2 minus C1) and (C1^perp minus C2^perp); for k = 0
    the convention is the minimum weight of the normalizer, d(C1^perp).
    """
    if c1.field is not c2.field or c1.n != c2.n:
        raise ValueError("CSS needs two codes on the same space")
    if not c1 <= c2:
        raise ValueError("CSS needs nested codes")
    k = c2.dimension - c1.dimension
    if k == 0:
        d, status = c1.dual().min_weight(budget)
    else:
        dx, sx = relative_min_weight(c1, c2, budget)
        dz, sz = relative_min_weight(c2.dual(), c1.dual(), budget)
        if sx == "exact" and sz == "exact":
            d, status = min(dx, dz), "exact"
        else:
            d, status = None, "not-computed"
    if status != "exact":
        d = None
    return QuantumParams(c1.n, k, d, c1.field.order, "exact" if d is not None else "lower-bound", construction)


def css_self_orthogonal(code, budget=None):
    """CSS code of a self-orthogonal C <= C^perp: [[n, n - 2k, wt(C^perp - C)]]_q."""
    dual = code.dual()
    if not code <= dual:
        raise ValueError("code is not self-orthogonal")
    n, k = code.n, code.dimension
    if n == 2 * k:
        d, status = dual.min_weight(budget)
    else:
        d, status = relative_min_weight(code, dual, budget)
    if status != "exact":
        d = None
    return QuantumParams(n, n - 2 * k, d, code.field.order, "exact" if d is not None else "lower-bound", "css")


def css_hermitian(code, budget=None):
    """Hermitian construction: C <= C^perpH over F_{q~^2} gives [[n, n-2k]]_{q~}."""
    hdual = code.hermitian_dual()
    if not code <= hdual:
        raise ValueError("code is not hermitian self-orthogonal")
    F = code.field
    qt = F.p ** (F.k // 2)
    n, k = code.n, code.dimension
    if n == 2 * k:
        d, status = hdual.min_weight(budget)
    else:
        d, status = relative_min_weight(code, hdual, budget)
    if status != "exact":
        d = None
    return QuantumParams(n, n - 2 * k, d, qt, "exact" if d is not None else "lower-bound", "hermitian")


def _hermitian_exponent(field):
    if field.k % 2:
        raise ValueError(f"hermitian constructions need a square field order, not {field.order}")
    return field.p ** (field.k // 2)


def construction_a(seq, cert, budget=None, max_i=None):
    """Sequence construction A: hermitian codes from an exactly self-dual flag.

    q(i) = min j with C_i^[q~] <= C_j; while i + q(i) <= n the level C_i is
    hermitian self-orthogonal and yields [[n, n - 2i, >= d(C_{n-i})]]_{q~}.
    Returns [(i, QuantumParams)] with exact d when in budget, else the
    certified bound.
    """
    ev = seq.evset
    qt = _hermitian_exponent(ev.field)
    if cert.status != "self-dual":
        raise ValueError("construction A needs an exactly self-dual sequence")
    n = seq.n
    out = []
    j = 0
    for i in range(1, (max_i or n) + 1):
        frob = seq.level(i).frobenius_power(qt)
        while j <= n and not seq.level(j).contains_code(frob):
            j += 1
        if i + j > n:
            break
        params = css_hermitian(seq.level(i), budget)
        out.append((i, params.with_bound(dual_distance_bound(ev, seq.pole_of_level(i), cert))))
    return out


def construction_b(seq, cert, budget=None, max_i=None):
    """Sequence construction B: hermitian codes from a twisted self-dual flag.

    The twist x must take values in the index-(q~+1) subfield so that a root
    y with y^(q~+1) = x exists entrywise; the twisted levels y * C_i are then
    tested for hermitian self-orthogonality directly.
    """
    ev = seq.evset
    F = ev.field
    qt = _hermitian_exponent(F)
    if cert.status != "formally-self-dual":
        raise ValueError("construction B needs a twisted self-dual sequence")
    x = cert.twist
    pow_qt = F.pow_table(qt)
    if not (pow_qt[x] == x).all():
        raise ValueError("twist is not valued in the hermitian base field")
    y = x.copy()
    y[x != 0] = F.exp[F.log[x[x != 0]] // (qt + 1)]
    out = []
    for i in range(1, (max_i or seq.n) + 1):
        twisted = seq.level(i).star(y)
        if not twisted <= twisted.hermitian_dual():
            break
        params = css_hermitian(twisted, budget)
        out.append((i, params.with_bound(dual_distance_bound(ev, seq.pole_of_level(i), cert))))
    return out


def construction_c(seq, cert, budget=None, max_i=None):
    """Sequence construction C: CSS codes over the base field itself.

    Scalar extension to the quadratic field fixes every C_i, so the gate is
    2i <= n and distances are computed on the base-field pair C_i <= C_{n-i}.
    """
    ev = seq.evset
    n = seq.n
    out = []
    for i in range(1, min(max_i or n, n // 2) + 1):
        params = css_nested(seq.level(i), seq.level(n - i), budget, construction="C")
        out.append((i, params.with_bound(dual_distance_bound(ev, seq.pole_of_level(i), cert))))
    return out


def gv_terms(n, k, d, q):
    """The exact integers compared by the GV threshold at distance d.

    Returns (lhs, rhs) with lhs = (q^(n-k+2) - 1)/(q^2 - 1) and
    rhs = sum_{i=1}^{d-1} (q^2-1)^(i-1) C(n, i); the existence bound asks for
    lhs > rhs.
    """
    lhs = (q ** (n - k + 2) - 1) // (q * q - 1)
    rhs = sum((q * q - 1) ** (i - 1) * math.comb(n, i) for i in range(1, d))
    return lhs, rhs


def gv_status(n, k, d, q):
    """Classify [[n, k, d]]_q against the quantum Gilbert-Varshamov threshold.

    Applicable when n > k >= 2, d >= 2 and n = k (mod 2).  d' is feasible when
    (q^(n-k+2) - 1)/(q^2 - 1) > sum_{i=1}^{d'-1} (q^2-1)^(i-1) C(n, i); d_max
    is the largest feasible d' (or 1 when even d' = 2 fails).  Returns
    (status, d_max) with status "below", "meets", "exceeds" or
    "not-applicable".
    """
    if not (n > k >= 2 and d >= 2 and (n - k) % 2 == 0):
        return "not-applicable", None
    lhs = (q ** (n - k + 2) - 1) // (q * q - 1)
    d_max = 1
    rhs = 0
    for dp in range(2, n + 2):
        rhs += (q * q - 1) ** (dp - 2) * math.comb(n, dp - 1)
        if lhs > rhs:
            d_max = dp
        else:
            break
    if d < d_max:
        return "below", d_max
    if d == d_max:
        return "meets", d_max
    return "exceeds", d_max
