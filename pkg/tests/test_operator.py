import math

import numpy as np
import pytest

from hoelder_weights import (
    Attained,
    CaseLabel,
    DiagonalMap,
    ExtremalSequence,
    InvalidInputError,
    Vacuous,
    classify,
    dual_check,
    extremizer,
    hoelder_weight,
    operator_weight,
)

from helpers import draw_case, random_exponent, random_v, rel

INF = math.inf

# frozen from a 50-digit mpmath evaluation of the closed form
FROZEN = [
    (3.0, -2.0, [1, 2, 5], CaseLabel.C, 0.6829666070929439),
    (-1.0, -3.0, [0.5, 4], CaseLabel.C, 4.116999697860558),
    (0.7, -INF, [1, 2, 5], CaseLabel.E, 0.38810522756039967),
]


@pytest.mark.parametrize("s, t, v, label, expected", FROZEN)
def test_frozen(s, t, v, label, expected):
    assert classify(s, t, v) is label
    assert rel(operator_weight(s, t, v), expected) < 1e-13


@pytest.mark.parametrize(
    "s, t, v, label, expected",
    [
        (2, 1, [1, 2], CaseLabel.C, math.sqrt(5)),
        (1, 2, [1, 2], CaseLabel.D, 2.0),
        (-2, -1, [1, 2], CaseLabel.D, 2.0),
        (-1, 1, [1, 1], CaseLabel.A, INF),
        (INF, 1, [1, 2], CaseLabel.B, 3.0),
        (2, -1, [0, 2], CaseLabel.B, 0.0),
        (2, 1, [0, 0], CaseLabel.B, 0.0),
        (2, -INF, [1, 2], CaseLabel.E, 2 / math.sqrt(5)),
        (-INF, -INF, [1, 2], CaseLabel.E, 2.0),
        (-INF, 2, [1, 2], CaseLabel.A, INF),
        (INF, -INF, [1, 2], CaseLabel.B, 1.0),
    ],
)
def test_examples(s, t, v, label, expected):
    assert classify(s, t, v) is label
    got = operator_weight(s, t, v)
    assert got == expected or rel(got, expected) < 1e-14


def test_one_dimensional():
    assert operator_weight(-1, 1, [3j]) == 3.0
    with pytest.raises(InvalidInputError):
        classify(1, 2, [1])
    assert isinstance(extremizer(-1, 1, [2]), Attained)


def test_invalid():
    with pytest.raises(InvalidInputError):
        operator_weight(0, 1, [1, 2])
    with pytest.raises(InvalidInputError):
        DiagonalMap([1, INF])
    with pytest.raises(InvalidInputError):
        DiagonalMap([])


def test_max_index_ties():
    assert DiagonalMap([2, -2, 1]).max_index == 0


def test_apply_zero_times_inf():
    out = DiagonalMap([0, 2]).apply([INF, 1])
    assert list(out) == [0, 2]


def test_zero_map_vacuous():
    assert isinstance(extremizer(2, 1, [0, 0]), Vacuous)


def _check_extremizer(s, t, d):
    w = operator_weight(s, t, d)
    ext = extremizer(s, t, d)
    if isinstance(ext, Attained):
        assert abs(hoelder_weight(ext.x, s) - 1) < 1e-12
        assert rel(hoelder_weight(d.apply(ext.x), t), w) < 1e-9
    elif isinstance(ext, ExtremalSequence) and not ext.divergent:
        x = ext(10**6)
        assert abs(hoelder_weight(x, s) - 1) < 1e-9
        assert rel(hoelder_weight(d.apply(x), t), w) < 1e-3
    elif isinstance(ext, ExtremalSequence):
        for k in (10, 10**3, 10**6):
            x = ext(k)
            assert abs(hoelder_weight(x, s) - 1) < 1e-9
            assert hoelder_weight(d.apply(x), t) >= k * (1 - 1e-9)


@pytest.mark.parametrize("label", list(CaseLabel))
def test_extremizers(label):
    rng = np.random.default_rng(5)
    for n in (2, 3, 5):
        for _ in range(30):
            if label is CaseLabel.A:
                s, t = -abs(random_exponent(rng)), abs(random_exponent(rng))
                d = DiagonalMap(random_v(rng, n))
            else:
                s, t, d = draw_case(rng, label, n)
            _check_extremizer(s, t, d)


def test_sequence_index_guard():
    ext = extremizer(-2, -1, [1, 2])
    with pytest.raises(InvalidInputError):
        ext(1)


def test_upper_bound_on_random_vectors():
    rng = np.random.default_rng(8)
    for label in (CaseLabel.B, CaseLabel.C, CaseLabel.D, CaseLabel.E):
        for _ in range(40):
            n = int(rng.integers(2, 6))
            s, t, d = draw_case(rng, label, n)
            w = operator_weight(s, t, d)
            for x in np.exp(rng.normal(0, 3, (50, n))):
                xs = hoelder_weight(x, s)
                assert hoelder_weight(d.apply(x), t) <= w * xs * (1 + 1e-10)


def test_scaling_and_permutation():
    rng = np.random.default_rng(9)
    for label in (CaseLabel.B, CaseLabel.C, CaseLabel.D, CaseLabel.E):
        s, t, d = draw_case(rng, label, 4)
        w = operator_weight(s, t, d)
        lam = 3.7 * np.exp(0.4j)
        assert rel(operator_weight(s, t, d.v * lam), abs(lam) * w) < 1e-13
        assert rel(operator_weight(s, t, d.v[::-1]), w) < 1e-15


def test_duality():
    rng = np.random.default_rng(10)
    for _ in range(200):
        n = int(rng.integers(2, 6))
        assert dual_check(random_exponent(rng), random_exponent(rng), random_v(rng, n))
    with pytest.raises(InvalidInputError):
        dual_check(1, 2, [0, 1])
    with pytest.raises(InvalidInputError):
        dual_check(INF, 2, [1, 1])


@pytest.mark.parametrize("s", [0.5, -0.5, 1.0, -1.0, 2.0, -2.0])
def test_continuity_at_diagonal(s):
    # documented window: |t - s| <= 1e-6
    rng = np.random.default_rng(12)
    for _ in range(10):
        v = random_v(rng, 4)
        vmax = np.max(np.abs(v))
        for t in np.linspace(s - 1e-6, s + 1e-6, 11):
            assert abs(operator_weight(s, t, v) - vmax) < 1e-3 * vmax
