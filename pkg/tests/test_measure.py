import math

import numpy as np
import pytest

from hoelder_weights import (
    DiscreteMeasureSpace,
    InvalidInputError,
    check_reverse_hoelder,
    check_hoelder_lp,
    conjugate_t,
    ext_pointwise_product,
    hoelder_weight,
    in_Lp,
    lp_weight,
)

INF = math.inf


def test_examples():
    assert lp_weight([3, 4], [1, 1], 2) == 5.0
    assert lp_weight([0, 5], [1, 1], -1) == 0.0
    assert lp_weight([INF, INF], [1, 1], -1) == INF
    assert lp_weight([5, 2], [0, 1], INF) == 2.0
    assert lp_weight([5, 2], [0, 1], -INF) == 2.0
    assert lp_weight([2, 2], [0.5, 0.5], 3) == pytest.approx(2.0, rel=1e-15)
    assert lp_weight([1, 1], [INF, 1], 2) == INF
    assert lp_weight([1, 1], [INF, 1], -2) == 0.0


def test_signed_values_absorbed():
    assert lp_weight([-3, 4], [1, 1], 2) == 5.0


def test_invalid():
    with pytest.raises(InvalidInputError):
        DiscreteMeasureSpace([0, 0])
    with pytest.raises(InvalidInputError):
        lp_weight([1, 2], [1], 2)
    with pytest.raises(InvalidInputError):
        check_reverse_hoelder([1], [1], 2, 2, [1])


def test_membership():
    assert in_Lp([1, 2], [1, 1], 2)
    assert not in_Lp([INF, 2], [1, 1], 2)
    assert not in_Lp([INF, 2], [1, 1], -1)
    assert in_Lp([INF, 2], [0, 1], -1)


def test_product_convention():
    assert ext_pointwise_product([INF, 2], [0, 3]).values == (0.0, 6.0)


def test_unit_mass_reduction():
    rng = np.random.default_rng(31)
    for _ in range(500):
        n = int(rng.integers(1, 7))
        f = np.exp(rng.normal(0, 4, n))
        p = float(rng.choice([-1, 1]) * math.exp(rng.uniform(-4, 4)))
        assert lp_weight(f, [1.0] * n, p) == hoelder_weight(f, p)


def test_null_atom_invariance():
    rng = np.random.default_rng(32)
    for _ in range(300):
        n = int(rng.integers(2, 6))
        masses = np.exp(rng.normal(0, 1, n))
        masses[0] = 0
        f = np.exp(rng.normal(0, 2, n))
        g = f.copy()
        g[0] = rng.choice([0.0, INF, 17.0])
        for p in (2.0, -1.5, INF, -INF):
            assert lp_weight(f, masses, p) == lp_weight(g, masses, p)


def _extended(rng, n):
    f = np.exp(rng.normal(0, 2, n))
    u = rng.random(n)
    f[u < 0.1] = 0.0
    f[u > 0.9] = INF
    return f


def test_hoelder_lp_fuzz():
    rng = np.random.default_rng(33)
    for _ in range(3000):
        n = int(rng.integers(1, 6))
        r, s = (float(rng.choice([-1, 1]) * math.exp(rng.uniform(-3, 3))) for _ in range(2))
        if abs(1 / r + 1 / s) < 1e-6:
            continue
        masses = np.exp(rng.normal(0, 1, n))
        masses[rng.random(n) < 0.1] = 0.0
        if not masses.any():
            masses[0] = 1.0
        rep = check_hoelder_lp(_extended(rng, n), _extended(rng, n), conjugate_t(r, s), masses)
        assert rep.satisfied


def test_reverse_hoelder_fuzz():
    rng = np.random.default_rng(34)
    for _ in range(3000):
        n = int(rng.integers(1, 6))
        r = -math.exp(rng.uniform(-3, 3))
        s = r / (r - 1)
        if rng.random() < 0.5:
            r, s = s, r
        masses = np.exp(rng.normal(0, 1, n))
        assert check_reverse_hoelder(_extended(rng, n), _extended(rng, n), r, s, masses).satisfied
