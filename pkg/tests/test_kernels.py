import math
import random

import numpy as np
import pytest

from castleqec import _kernels_py
from castleqec.fields import GF
from castleqec.kernels import BACKEND, enumerate_weights, scalar_multiple_rows

try:
    from castleqec import _accel
except ImportError:  # extension not built in this environment
    _accel = None


def random_generator(rng, q, k, n):
    flat = [rng.randrange(q) for _ in range(k * n)]
    return np.array(flat, dtype=np.uint16).reshape(k, n)


def test_backend_reports_something():
    assert BACKEND in ("compiled", "python")


def test_full_space_gf2():
    F = GF(2)
    G = np.eye(6, dtype=np.uint16)
    counts = enumerate_weights(F, G)
    assert [int(c) for c in counts] == [math.comb(6, w) for w in range(7)]


def test_repetition_code():
    F = GF(5)
    G = np.ones((1, 7), dtype=np.uint16)
    counts = enumerate_weights(F, G)
    expected = np.zeros(8, dtype=np.int64)
    expected[0] = 1
    expected[7] = 4
    assert (counts == expected).all()


def test_zero_rows():
    F = GF(4)
    counts = enumerate_weights(F, np.zeros((0, 5), dtype=np.uint16))
    assert counts[0] == 1 and counts.sum() == 1


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_fallback_total_count_and_symmetry(q):
    F = GF(q)
    rng = random.Random(q * 31)
    for _ in range(10):
        k = rng.randrange(0, 5)
        n = rng.randrange(max(k, 1), 11)
        G = random_generator(rng, q, k, n)
        counts = _kernels_py.weight_distribution(scalar_multiple_rows(F, G), F.add_table, q)
        assert int(counts.sum()) == q ** k
        assert counts[0] >= 1


@pytest.mark.skipif(_accel is None, reason="compiled extension not available")
@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16])
def test_backends_agree(q):
    F = GF(q)
    rng = random.Random(q * 7 + 1)
    for _ in range(12):
        k = rng.randrange(0, 5)
        n = rng.randrange(max(k, 1), 12)
        G = random_generator(rng, q, k, n)
        rows = scalar_multiple_rows(F, G)
        a = _accel.weight_distribution(rows, F.add_table, q)
        b = _kernels_py.weight_distribution(rows, F.add_table, q)
        assert (np.asarray(a) == np.asarray(b)).all()


@pytest.mark.skipif(_accel is None, reason="compiled extension not available")
def test_backends_agree_across_block_boundary():
    # exercise the fallback's prefix odometer: q^k above its 2^16 block size
    F = GF(4)
    rng = random.Random(42)
    G = random_generator(rng, 4, 9, 14)  # 4^9 = 262144 words
    rows = scalar_multiple_rows(F, G)
    a = _accel.weight_distribution(rows, F.add_table, 4)
    b = _kernels_py.weight_distribution(rows, F.add_table, 4)
    assert (np.asarray(a) == np.asarray(b)).all()
    assert int(np.asarray(a).sum()) == 4 ** 9
