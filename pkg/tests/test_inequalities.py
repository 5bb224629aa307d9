import math

import numpy as np
import pytest

from hoelder_weights import (
    ConjugateUndefinedError,
    Direction,
    ExponentTriple,
    InvalidInputError,
    check_generalized_hoelder,
    conjugate_t,
)
from hoelder_weights.inequalities import make_report

INF = math.inf


def test_conjugate_examples():
    tri = conjugate_t(2, 2)
    assert tri.t == 1.0 and tri.direction is Direction.T_LESS
    tri = conjugate_t(-2, 1)
    assert tri.t == 2.0 and tri.direction is Direction.T_GREATER
    tri = conjugate_t(-1, -1)
    assert tri.t == -0.5 and tri.direction is Direction.T_GREATER


def test_conjugate_undefined():
    with pytest.raises(ConjugateUndefinedError):
        conjugate_t(2, -2)
    with pytest.raises(InvalidInputError):
        conjugate_t(0, 1)


def test_triple_validation():
    with pytest.raises(InvalidInputError):
        ExponentTriple(2, 2, 3)
    with pytest.raises(InvalidInputError):
        ExponentTriple(2, 2, 1, direction=Direction.T_GREATER)
    assert ExponentTriple(2, 2, 1).direction is Direction.T_LESS


def test_example_report():
    rep = check_generalized_hoelder([1, 2], [1, 1], conjugate_t(-2, 1))
    assert rep.satisfied
    assert rep.lhs == pytest.approx(math.sqrt(5), rel=1e-15)
    assert rep.rhs == pytest.approx(4 / math.sqrt(5), rel=1e-15)


def test_length_mismatch():
    with pytest.raises(InvalidInputError):
        check_generalized_hoelder([1, 2], [1], conjugate_t(2, 2))


def test_report_slack_signs():
    assert make_report(1.0, 2.0, Direction.T_LESS).slack > 0
    assert not make_report(2.0, 1.0, Direction.T_LESS).satisfied
    assert make_report(2.0, 1.0, Direction.T_GREATER).slack > 0
    assert make_report(INF, 1.0, Direction.T_GREATER).slack == INF
    assert make_report(1.0, 1.0, Direction.T_LESS).slack == 0.0


def random_pair(rng, n):
    v = np.exp(rng.normal(0, 3, n)) * np.exp(1j * rng.uniform(0, 6.3, n))
    x = np.exp(rng.normal(0, 3, n))
    # sprinkle zeros
    v[rng.random(n) < 0.05] = 0
    x[rng.random(n) < 0.05] = 0
    return v, x


def test_fuzz_no_violations():
    rng = np.random.default_rng(21)
    for _ in range(3000):
        r, s = (float(rng.choice([-1, 1]) * math.exp(rng.uniform(-4, 4))) for _ in range(2))
        if abs(1 / r + 1 / s) < 1e-6:
            continue
        v, x = random_pair(rng, int(rng.integers(1, 7)))
        assert check_generalized_hoelder(v, x, conjugate_t(r, s)).satisfied


def test_classical_saturation():
    rng = np.random.default_rng(22)
    for _ in range(300):
        r, s = math.exp(rng.uniform(-2, 2)), math.exp(rng.uniform(-2, 2))
        v = np.exp(rng.normal(0, 1, 4))
        x = np.abs(v) ** (r / s)
        rep = check_generalized_hoelder(v, x, conjugate_t(r, s))
        assert abs(rep.slack) < 1e-9
