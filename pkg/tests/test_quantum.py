import pytest

from castleqec.agcodes import (
    CodeSequence,
    OnePointCode,
    certify_duality,
    incomplete_trace_search,
)
from castleqec.fields import GF
from castleqec.quantum import (
    QuantumParams,
    construction_a,
    construction_b,
    construction_c,
    css_hermitian,
    css_nested,
    css_self_orthogonal,
    gv_status,
)
from helpers import (
    elliptic_gf4,
    elliptic_gf9,
    evset,
    hermitian_gf9,
    hyper_even_45,
    ntq_gf16,
    suzuki8,
    twisted_gf9,
)


def test_css_self_orthogonal_equals_nested():
    for builder, m in [(elliptic_gf4, 2), (suzuki8, 13)]:
        code = OnePointCode(evset(builder), m).code
        a = css_self_orthogonal(code)
        b = css_nested(code, code.dual())
        assert (a.n, a.k, a.d, a.q) == (b.n, b.k, b.d, b.q)


def test_css_nested_elliptic_gf9_rows():
    ev = evset(elliptic_gf9, fibration="y")
    seq = CodeSequence(ev)
    expected = {1: (13, 2), 4: (7, 4), 5: (5, 5), 6: (3, 6), 7: (1, 7)}
    for i, (k, d) in expected.items():
        p = css_nested(seq.level(i), seq.level(15 - i))
        assert (p.n, p.k, p.d, p.q, p.d_provenance) == (15, k, d, 9, "exact")


def test_css_hermitian_examples():
    rows = [
        (elliptic_gf4, None, 0, (8, 6, 2, 2)),
        (ntq_gf16, None, 8, (32, 24, 3, 4)),
        (hyper_even_45, None, 5, (32, 24, 4, 4)),
    ]
    for builder, fib, m, want in rows:
        ev = evset(builder) if fib is None else evset(builder, fibration=fib)
        p = css_hermitian(OnePointCode(ev, m).code)
        assert (p.n, p.k, p.d, p.q) == want
        assert p.d_provenance == "exact"


def test_css_zero_rate_code():
    ev = evset(elliptic_gf4)
    code, _ = incomplete_trace_search(ev, 3, GF(2))
    p = css_self_orthogonal(code)
    assert (p.n, p.k, p.d, p.q) == (8, 0, 4, 2)


def test_css_nested_rejects_non_nested():
    ev = evset(elliptic_gf4)
    seq = CodeSequence(ev)
    with pytest.raises(ValueError, match="nested"):
        css_nested(seq.level(3), seq.level(2))


def test_css_hermitian_rejects_above_range():
    ev = evset(hermitian_gf9)
    with pytest.raises(ValueError, match="hermitian"):
        css_hermitian(OnePointCode(ev, 8).code)


def test_construction_a_hermitian_gf9():
    from castleqec.agcodes import self_orthogonality_range

    ev = evset(hermitian_gf9)
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    rows = construction_a(seq, cert)
    # levels m = 0,3,4,6,7 pass the gate; m = 8 fails it, matching the
    # directly computed hermitian self-orthogonality range
    assert [seq.pole_of_level(i) for i, _ in rows] == [0, 3, 4, 6, 7]
    assert rows[-1][0] and seq.pole_of_level(rows[-1][0]) == self_orthogonality_range(ev, "hermitian")
    for i, p in rows:
        assert (p.n, p.k, p.q) == (27, 27 - 2 * i, 3)
        assert p.d_provenance == "exact"
    assert [p.d for _, p in rows] == [2, 2, 3, 3, 3]


def test_construction_a_requires_exact_self_duality():
    ev = evset(elliptic_gf9, fibration="y")
    with pytest.raises(ValueError, match="self-dual"):
        construction_a(CodeSequence(ev), certify_duality(ev))


def test_construction_b_twisted_gf9():
    ev = evset(twisted_gf9)
    assert ev.curve.is_castle
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    assert cert.status == "formally-self-dual"
    # the twist lives in GF(3), so the hermitian root exists entrywise
    F = ev.field
    x = cert.twist
    assert (F.pow_table(3)[x] == x).all()
    rows = construction_b(seq, cert)
    assert [i for i, _ in rows] == [1, 2, 3, 4, 5, 6, 7]
    for i, p in rows:
        assert (p.n, p.k, p.q) == (18, 18 - 2 * i, 3)
        assert p.d_provenance == "exact"
    assert [p.d for _, p in rows] == [2, 2, 2, 2, 2, 4, 4]


def test_construction_b_elliptic_gf9():
    ev = evset(elliptic_gf9, fibration="y")
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    rows = construction_b(seq, cert)
    assert [(i, p.n, p.k, p.d, p.q) for i, p in rows] == [
        (1, 15, 13, 2, 3),
        (2, 15, 11, 2, 3),
        (3, 15, 9, 3, 3),
    ]


def test_construction_b_rejects_unsuitable_twists():
    ev = evset(suzuki8)
    seq = CodeSequence(ev)
    with pytest.raises(ValueError):
        construction_b(seq, certify_duality(ev))  # self-dual, not twisted
    # the x-fibration twist takes values outside GF(3), so no root exists
    ev9 = evset(elliptic_gf9, fibration="x")
    with pytest.raises(ValueError, match="valued"):
        construction_b(CodeSequence(ev9), certify_duality(ev9))


def test_construction_c_suzuki():
    ev = evset(suzuki8)
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    rows = dict(construction_c(seq, cert, max_i=14))
    # at i=5 the exact relative weight is 4, one better than the order bound 3
    # (no weight-3 triple of evaluation columns is dependent)
    exact = {1: 2, 5: 4, 6: 4}
    for i, d in exact.items():
        p = rows[i]
        assert (p.n, p.k, p.d, p.q, p.d_provenance) == (64, 64 - 2 * i, d, 8, "exact")
    bounded = {11: 5, 12: 6, 13: 7, 14: 8}
    for i, d in bounded.items():
        p = rows[i]
        assert (p.n, p.k, p.d, p.q, p.d_provenance) == (64, 64 - 2 * i, d, 8, "lower-bound")


def test_gv_worked_examples():
    assert gv_status(8, 6, 2, 2) == ("exceeds", 1)
    assert gv_status(64, 62, 2, 8) == ("meets", 2)
    assert gv_status(243, 241, 2, 9) == ("exceeds", 1)
    assert gv_status(32, 26, 3, 8) == ("meets", 3)
    assert gv_status(15, 14, 2, 9) == ("not-applicable", None)  # parity
    assert gv_status(15, 1, 7, 9) == ("not-applicable", None)  # k < 2
    assert gv_status(8, 0, 4, 2) == ("not-applicable", None)
    assert gv_status(8, 8, 2, 2) == ("not-applicable", None)  # n = k


def test_gv_statuses_partition_by_d_max():
    for n, k, q in [(64, 52, 8), (32, 24, 4), (128, 112, 8), (27, 19, 3)]:
        _, d_max = gv_status(n, k, 2, q)
        assert d_max >= 1
        for d in range(2, d_max + 2):
            status, again = gv_status(n, k, d, q)
            assert again == d_max
            assert status == ("below" if d < d_max else "meets" if d == d_max else "exceeds")


def test_gv_threshold_is_exact_at_the_boundary():
    # recompute both sides of the defining inequality at d_max and d_max + 1
    import math

    n, k, q = 64, 52, 8
    _, d_max = gv_status(n, k, 2, q)
    lhs = (q ** (n - k + 2) - 1) // (q * q - 1)
    rhs = sum((q * q - 1) ** (i - 1) * math.comb(n, i) for i in range(1, d_max))
    assert lhs > rhs
    rhs_next = rhs + (q * q - 1) ** (d_max - 1) * math.comb(n, d_max)
    assert lhs <= rhs_next


def test_quantum_params_formatting_and_bounds():
    p = QuantumParams(8, 6, 2, 2, "exact", "hermitian")
    assert str(p) == "[[8,6,2]]_2"
    assert p.with_bound(1) is p
    missing = QuantumParams(64, 42, None, 8, "lower-bound", "C")
    assert str(missing) == "[[64,42,?]]_8"
    filled = missing.with_bound(5)
    assert filled.d == 5 and filled.d_provenance == "lower-bound"
