"""Random configuration generators shared by the test modules."""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np

from hoelder_weights import CaseLabel, DiagonalMap, classify

CASES = (CaseLabel.B, CaseLabel.C, CaseLabel.D, CaseLabel.E)


def log_uniform(rng, lo, hi, size=None):
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size))


def random_exponent(rng, lo=1e-2, hi=1e2):
    return float(rng.choice([-1.0, 1.0]) * log_uniform(rng, lo, hi))


def random_v(rng, n, lo=1e-3, hi=1e3, complex_=True):
    mods = log_uniform(rng, lo, hi, n)
    if not complex_:
        return mods * rng.choice([-1.0, 1.0], n)
    return mods * np.exp(1j * rng.uniform(0, 2 * math.pi, n))


def draw_case(rng, label, n):
    """Random ``(s, t, v)`` falling in ``label``; exponents and moduli log-uniform."""
    while True:
        s, t = random_exponent(rng), random_exponent(rng)
        v = random_v(rng, n)
        if label is CaseLabel.B:
            kind = rng.integers(3)
            if kind == 0:
                s = math.inf
            elif kind == 1:
                t = -abs(t)
                v[rng.integers(n)] = 0.0
            else:
                v[:] = 0.0
        elif label is CaseLabel.E:
            t = -math.inf
        elif label is CaseLabel.C and not t < s:
            s, t = t, s
        elif label is CaseLabel.D and not s <= t:
            s, t = t, s
        if classify(s, t, v) is label:
            return s, t, DiagonalMap(v)


def sweep(seed=2024, per_case=200, dims=(2, 3, 4, 5, 6)):
    rng = np.random.default_rng(seed)
    return [
        (label, n) + draw_case(rng, label, n)
        for n in dims
        for label in CASES
        for _ in range(per_case)
    ]


def mp_weight(x, p, dps=50):
    """Naive high-precision Hölder weight, independent of the library kernel."""
    with mp.workdps(dps):
        a = [mp.mpf(abs(complex(z))) for z in x]
        if p == math.inf:
            return float(max(a))
        if p == -math.inf:
            return float(min(a))
        if p < 0 and any(z == 0 for z in a):
            return 0.0
        p = mp.mpf(p)
        return float(mp.fsum(z**p for z in a) ** (1 / p))


def rel(a, b):
    if a == b:
        return 0.0
    return abs(a - b) / max(abs(a), abs(b))
