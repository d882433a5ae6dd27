"""Backend selection for the enumeration hot loop.

The compiled extension is optional; if it failed to build, the numpy fallback
gives identical results at a constant-factor slowdown.  BACKEND records which
one is active so benchmarks and bug reports can say.
"""

from __future__ import annotations

import numpy as np

try:
    from ._accel import weight_distribution as _weight_distribution_raw

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from ._kernels_py import weight_distribution as _weight_distribution_raw

    BACKEND = "python"


def scalar_multiple_rows(field, G):
    """Precompute scalar_rows[i, s] = s * G[i] for the enumeration kernels."""
    G = np.asarray(G, dtype=np.uint16)
    k, n = G.shape
    q = field.order
    out = np.empty((k, q, n), dtype=np.uint16)
    scalars = np.arange(q, dtype=np.uint16)
    for i in range(k):
        out[i] = field.mul_table[scalars[:, None], G[i][None, :]]
    return out


def enumerate_weights(field, G):
    """Exact weight distribution of the row space of G by full enumeration.

    Cost is q^k words; callers are responsible for budgeting.
    """
    G = np.asarray(G, dtype=np.uint16)
    if G.ndim != 2:
        raise ValueError("generator matrix must be 2-D")
    counts = _weight_distribution_raw(scalar_multiple_rows(field, G), field.add_table, field.order)
    return np.asarray(counts, dtype=np.int64)
