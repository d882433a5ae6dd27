"""Pointed curves with one place at infinity, and their evaluation sets.

A PointedCurve bundles what one-point AG codes actually consume: the base
field, a generating set of functions regular away from the distinguished
place Q (with their pole orders at Q), and the coordinates of every affine
rational point.  The Weierstrass semigroup at Q is generated by those pole
orders for every family constructed here.

An EvaluationSet picks the divisor D: it fixes a fibration function, keeps
only totally split fibers, and orders the points canonically.  Riemann-Roch
spaces L(mQ) get monomial bases indexed by pole order.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .fields import GF, field_from_json
from .semigroups import NumericalSemigroup


class PointedCurve:
    def __init__(self, field, tag, generator_names, pole_orders, affine_coords):
        self.field = field
        self.tag = tag
        self.generator_names = tuple(generator_names)
        self.pole_orders = tuple(int(v) for v in pole_orders)
        self.affine_coords = np.asarray(affine_coords, dtype=np.uint16)
        assert self.affine_coords.shape[0] == len(self.generator_names)
        self.semigroup = NumericalSemigroup(self.pole_orders)
        self.genus = self.semigroup.genus

    @property
    def num_affine_points(self):
        return self.affine_coords.shape[1]

    @property
    def num_rational_points(self):
        return self.num_affine_points + 1  # the one place at infinity

    @property
    def is_castle(self):
        """Symmetric semigroup and as many rational points as a Castle curve has."""
        return (
            self.semigroup.is_symmetric
            and self.num_rational_points == self.field.order * self.semigroup.multiplicity + 1
        )

    def generator_index(self, name):
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise ValueError(f"curve {self.tag!r} has no generator {name!r}") from None

    def basis_exponents(self, m, power_base=None):
        """Monomial basis of L(mQ) as [(pole order, exponent tuple)], pole ascending.

        One monomial per nongap: the first exponent tuple in product order
        realizing that pole order.  With power_base = q0, whenever a pole
        order is q0 times another nongap the basis function is literally the
        q0-th power of the lower one, which the trace constructions rely on.
        """
        if m < 0:
            return []
        expo_of = {}
        ranges = [range(m // v + 1) for v in self.pole_orders]
        for tup in itertools.product(*ranges):
            pole = sum(e * v for e, v in zip(tup, self.pole_orders))
            if pole <= m and pole not in expo_of:
                expo_of[pole] = tup
        nongaps = self.semigroup.elements_up_to(m)
        assert sorted(expo_of) == nongaps, "pole orders must generate the semigroup"
        if power_base is not None and power_base > 1:
            for rho in nongaps:
                if rho % power_base == 0 and self.semigroup.contains(rho // power_base):
                    expo_of[rho] = tuple(power_base * e for e in expo_of[rho // power_base])
        return [(rho, expo_of[rho]) for rho in nongaps]

    def monomial_values(self, expo, coords=None):
        """Evaluate the monomial prod(gen_i^e_i) at point coordinates (columns)."""
        coords = self.affine_coords if coords is None else coords
        out = np.ones(coords.shape[1], dtype=np.uint16)
        for i, e in enumerate(expo):
            if e:
                out = self.field.mul_table[out, self.field.pow_table(e)[coords[i]]]
        return out

    def __repr__(self):
        return f"<curve {self.tag}: genus {self.genus} over {self.field!r}, {self.num_rational_points} points>"


# -- families ------------------------------------------------------------------


def _validate_poly(field, coeffs, name):
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) < 2 or coeffs[-1] == 0:
        raise ValueError(f"{name} must have positive degree and a nonzero leading coefficient")
    if any(not 0 <= c < field.order for c in coeffs):
        raise ValueError(f"{name} has coefficients outside {field!r}")
    return coeffs


def _poly_values(field, coeffs):
    """Evaluate a univariate polynomial at every field element."""
    vals = np.zeros(field.order, dtype=np.uint16)
    t = np.arange(field.order, dtype=np.uint16)
    for e, c in enumerate(coeffs):
        if c:
            term = field.mul_table[c, field.pow_table(e)[t]]
            vals = field.add_table[vals, term]
    return vals


def sep_variable_curve(field, f_coeffs, g_coeffs, tag=None):
    """The curve F(y) = G(x) with coprime degrees; x and y generate at Q.

    Pole orders at the unique place at infinity: v(x) = deg F, v(y) = deg G.
    """
    f = _validate_poly(field, f_coeffs, "F")
    g = _validate_poly(field, g_coeffs, "G")
    a, b = len(f) - 1, len(g) - 1
    if math.gcd(a, b) != 1:
        raise ValueError(f"deg F = {a} and deg G = {b} must be coprime for one place at infinity")
    fv = _poly_values(field, f)  # value of F at each y
    gv = _poly_values(field, g)  # value of G at each x
    ys_by_value = {}
    for y0 in range(field.order):
        ys_by_value.setdefault(int(fv[y0]), []).append(y0)
    points = []
    for x0 in range(field.order):
        for y0 in ys_by_value.get(int(gv[x0]), ()):
            points.append((x0, y0))
    points.sort()
    coords = np.array(points, dtype=np.uint16).T if points else np.zeros((2, 0), dtype=np.uint16)
    if tag is None:
        tag = f"sep-gf{field.order}"
    return PointedCurve(field, tag, ("x", "y"), (a, b), coords)


def hyperelliptic_odd(field, f_coeffs, tag=None):
    """y^2 = F(x) in odd characteristic, deg F odd."""
    if field.p == 2:
        raise ValueError("use hyperelliptic_even in characteristic 2")
    f = _validate_poly(field, f_coeffs, "F")
    if (len(f) - 1) % 2 == 0:
        raise ValueError("deg F must be odd for one place at infinity")
    return sep_variable_curve(
        field, [0, 0, 1], f, tag=tag or f"hyperelliptic-gf{field.order}"
    )


def hyperelliptic_even(field, f_coeffs, tag=None):
    """y^2 + y = F(x) in characteristic 2, deg F odd."""
    if field.p != 2:
        raise ValueError("use hyperelliptic_odd in odd characteristic")
    f = _validate_poly(field, f_coeffs, "F")
    if (len(f) - 1) % 2 == 0:
        raise ValueError("deg F must be odd for one place at infinity")
    return sep_variable_curve(
        field, [0, 1, 1], f, tag=tag or f"hyperelliptic-gf{field.order}"
    )


def suzuki_curve(q0, tag=None):
    """The Suzuki curve y^q + y = x^q0 (x^q + x) over GF(q), q = 2 q0^2.

    Four functions generate the semigroup at Q: x, y, and the derived
    z = x^(2q0+1) - y^(2q0), w = x y^(2q0) - z^(2q0), with pole orders
    q, q + q0, q + 2q0, q + 2q0 + 1.
    """
    q0 = int(q0)
    if q0 < 2 or q0 & (q0 - 1):
        raise ValueError("q0 must be a power of 2, at least 2")
    q = 2 * q0 * q0
    field = GF(q)
    # every affine pair is a rational point: x^q + x = 0 on GF(q), so both
    # sides of the equation vanish identically
    xs = np.repeat(np.arange(q, dtype=np.uint16), q)
    ys = np.tile(np.arange(q, dtype=np.uint16), q)
    lhs = field.add_table[field.pow_table(q)[ys], ys]
    xq = field.add_table[field.pow_table(q)[xs], xs]
    rhs = field.mul_table[field.pow_table(q0)[xs], xq]
    assert (lhs == rhs).all()
    zs = field.add_table[
        field.pow_table(2 * q0 + 1)[xs], field.neg_table[field.pow_table(2 * q0)[ys]]
    ]
    ws = field.add_table[
        field.mul_table[xs, field.pow_table(2 * q0)[ys]],
        field.neg_table[field.pow_table(2 * q0)[zs]],
    ]
    coords = np.stack([xs, ys, zs, ws])
    return PointedCurve(
        field,
        tag or f"suzuki-gf{q}",
        ("x", "y", "z", "w"),
        (q, q + q0, q + 2 * q0, q + 2 * q0 + 1),
        coords,
    )


def norm_trace_quotient(q, r, u, tag=None):
    """The quotient curve Tr(y) = x^u over GF(q^r), with Tr the trace polynomial.

    u must divide (q^r - 1)/(q - 1); u equal to the quotient itself gives the
    norm-trace curve.
    """
    q, r, u = int(q), int(r), int(u)
    if r < 2:
        raise ValueError("need an extension degree r >= 2")
    quotient = (q ** r - 1) // (q - 1)
    if u < 1 or quotient % u:
        raise ValueError(f"u = {u} must divide (q^r - 1)/(q - 1) = {quotient}")
    field = GF(q ** r)
    f = [0] * (q ** (r - 1) + 1)
    for i in range(r):
        f[q ** i] = 1
    g = [0] * u + [1]
    return sep_variable_curve(field, f, g, tag=tag or f"normtrace-{q}-{r}-{u}")


# -- evaluation sets --------------------------------------------------------------


class EvaluationSet:
    """A totally split divisor D for one-point codes on a pointed curve.

    Points are grouped into fibers of one generating function; only full
    fibers (size = the function's pole order) are kept.  With no explicit
    subset, every totally split fiber is used.  Point order is canonical:
    sort by fiber value, then by coordinate tuple.
    """

    def __init__(self, curve, fibration=None, subset=None):
        self.curve = curve
        name = curve.generator_names[0] if fibration is None else fibration
        self.fibration = name
        idx = curve.generator_index(name)
        self.fiber_size = curve.pole_orders[idx]

        values = curve.affine_coords[idx]
        counts = np.bincount(values, minlength=curve.field.order)
        if subset is None:
            U = [int(v) for v in np.nonzero(counts == self.fiber_size)[0]]
        else:
            U = sorted(int(v) for v in set(subset))
            for alpha in U:
                if not 0 <= alpha < curve.field.order:
                    raise ValueError(f"fiber value {alpha} outside {curve.field!r}")
                if counts[alpha] != self.fiber_size:
                    raise ValueError(
                        f"fiber of {name} over {alpha} has {counts[alpha]} points, "
                        f"need {self.fiber_size}: not totally split"
                    )
        if not U:
            raise ValueError(f"no totally split fibers of {name} on {curve.tag!r}")
        self.U = tuple(U)

        keep = np.isin(values, np.array(U, dtype=values.dtype))
        cols = curve.affine_coords[:, keep]
        order = sorted(range(cols.shape[1]), key=lambda j: (int(cols[idx, j]), tuple(int(v) for v in cols[:, j])))
        self.coords = np.ascontiguousarray(cols[:, order])
        self.n = self.coords.shape[1]
        assert self.n == self.fiber_size * len(self.U)
        self._fib_idx = idx

    @property
    def field(self):
        return self.curve.field

    @property
    def points(self):
        return [tuple(int(v) for v in self.coords[:, j]) for j in range(self.n)]

    def abundance(self, m):
        """dim L(mQ - D) = number of basis functions evaluating inside the kernel."""
        return self.curve.semigroup.ell(m - self.n)

    def dimension_set(self):
        """Pole orders where the evaluation code strictly grows."""
        return self.curve.semigroup.dimension_set(self.n)

    def basis_rows(self, m, power_base=None):
        """(pole orders, evaluation matrix) for the monomial basis of L(mQ).

        m is capped at the last dimension jump: the evaluated code never
        changes past it, and the monomial enumeration explodes for huge m.
        """
        basis = self.curve.basis_exponents(min(m, self.dimension_set()[-1]), power_base)
        rows = np.zeros((len(basis), self.n), dtype=np.uint16)
        for i, (_, expo) in enumerate(basis):
            rows[i] = self.curve.monomial_values(expo, self.coords)
        return [rho for rho, _ in basis], rows

    def monomial_row(self, expo):
        return self.curve.monomial_values(expo, self.coords)

    def phi_coefficients(self):
        """Coefficients of phi(t) = prod over U of (t - alpha): the function
        cutting out D as the fibration's totally split fibers."""
        F = self.field
        poly = [1]
        for alpha in self.U:
            nxt = [0] * (len(poly) + 1)
            na = F.neg(alpha)
            for i, c in enumerate(poly):
                nxt[i + 1] = F.add(nxt[i + 1], c)
                nxt[i] = F.add(nxt[i], F.mul(na, c))
            poly = nxt
        return poly

    def kernel_functions(self, m):
        """Basis of ker(ev) on L(mQ): phi times a basis of L((m - n)Q).

        Each function is a list of (coefficient, exponent tuple) monomial
        terms; there are exactly abundance(m) of them.
        """
        phi = self.phi_coefficients()
        gens = len(self.curve.generator_names)
        unit = [0] * gens
        out = []
        for _, expo in self.curve.basis_exponents(m - self.n):
            terms = []
            for d, c in enumerate(phi):
                if c:
                    shifted = list(expo)
                    shifted[self._fib_idx] += d
                    terms.append((c, tuple(shifted)))
            out.append(terms)
        return out

    def evaluate_function(self, terms):
        """Evaluate a list of (coefficient, exponent tuple) terms at the points."""
        F = self.field
        acc = np.zeros(self.n, dtype=np.uint16)
        for c, expo in terms:
            acc = F.add_table[acc, F.mul_table[c, self.curve.monomial_values(expo, self.coords)]]
        return acc


# -- serialization ------------------------------------------------------------------


def curve_from_json(obj):
    """Build a curve from {"family", "field", "params", "tag"?}."""
    try:
        family = obj["family"]
        params = obj.get("params", {})
    except TypeError as exc:
        raise ValueError(f"malformed curve descriptor") from exc
    tag = obj.get("tag")

    if family == "suzuki":
        curve = suzuki_curve(params["q0"], tag=tag)
    elif family == "ntq":
        curve = norm_trace_quotient(params["q"], params["r"], params["u"], tag=tag)
    elif family in ("sep", "hyperodd", "hypereven"):
        if "field" not in obj:
            raise ValueError(f"family {family!r} needs an explicit field")
        field = field_from_json(obj["field"])
        if family == "sep":
            curve = sep_variable_curve(field, params["f"], params["g"], tag=tag)
        elif family == "hyperodd":
            curve = hyperelliptic_odd(field, params["f"], tag=tag)
        else:
            curve = hyperelliptic_even(field, params["f"], tag=tag)
    else:
        raise ValueError(f"unknown curve family {family!r}")

    if "field" in obj and family in ("suzuki", "ntq"):
        declared = field_from_json(obj["field"])
        if declared is not curve.field:
            raise ValueError(
                f"declared field GF({declared.order}) does not match family field GF({curve.field.order})"
            )
    return curve


def evaluation_set_from_json(obj):
    """Curve descriptor plus optional "fibration" and "subset" keys."""
    curve = curve_from_json(obj)
    return EvaluationSet(curve, fibration=obj.get("fibration"), subset=obj.get("subset"))
