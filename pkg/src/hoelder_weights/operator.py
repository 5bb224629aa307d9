"""Operator weight of a diagonal map between Hölder-weighted spaces.

For ``D = diag(v_1, ..., v_n)`` acting from ``(C^n, ||.||_s)`` to
``(C^n, ||.||_t)`` the operator weight

    ||D||_{s,t} = sup { ||D x||_t : ||x||_s = 1 }

has a closed form with five branches:

=====  ==============================================  ===================
label  condition                                       value
=====  ==============================================  ===================
B      v = 0, or t < 0 with some v_i = 0, or s = inf   ||v||_t
A      s < 0 < t                                       inf
E      t = -inf                                        ||v||_{-s}
C      t < s                                           ||v||_{s*t/(s-t)}
D      s <= t                                          max |v_i|
=====  ==============================================  ===================

The rows are tested top to bottom; once B, A and E are ruled out, the
remaining configurations split cleanly on the order of ``s`` and ``t``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np
from scipy.special import logsumexp

from .errors import InvalidInputError
from .weights import (
    Exponent,
    ExponentLike,
    as_vector,
    hoelder_weight,
    log_weight_from_logs,
)

__all__ = [
    "CaseLabel",
    "DiagonalMap",
    "Attained",
    "ExtremalSequence",
    "Vacuous",
    "Extremizer",
    "classify",
    "critical_exponent",
    "operator_weight",
    "extremizer",
    "dual_check",
]

_INF = math.inf
DUAL_RTOL = 1e-12


class CaseLabel(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


@dataclass(frozen=True)
class DiagonalMap:
    """``diag(v_1, ..., v_n)`` with cached structural flags.

    ``max_index`` is the smallest index attaining ``max |v_i|``.
    """

    v: np.ndarray
    moduli: tuple = field(init=False, repr=False)
    is_zero: bool = field(init=False, repr=False)
    has_zero_entry: bool = field(init=False, repr=False)
    max_index: int = field(init=False, repr=False)

    def __post_init__(self):
        v = as_vector(self.v).copy()
        if not np.all(np.isfinite(v)):
            raise InvalidInputError("diagonal entries must be finite")
        v.setflags(write=False)
        mods = tuple(abs(complex(z)) for z in v)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "moduli", mods)
        object.__setattr__(self, "is_zero", all(a == 0.0 for a in mods))
        object.__setattr__(self, "has_zero_entry", any(a == 0.0 for a in mods))
        object.__setattr__(self, "max_index", mods.index(max(mods)))

    @property
    def n(self) -> int:
        return len(self.moduli)

    @property
    def max_modulus(self) -> float:
        return self.moduli[self.max_index]

    def apply(self, x) -> np.ndarray:
        x = as_vector(x)
        if x.size != self.n:
            raise InvalidInputError(f"length mismatch: map has n={self.n}, vector {x.size}")
        with np.errstate(invalid="ignore"):
            out = self.v * x
        # 0 * inf: a vanishing diagonal entry annihilates the coordinate
        out[(self.v == 0) & ~np.isfinite(x)] = 0.0
        return out


def _as_map(d) -> DiagonalMap:
    return d if isinstance(d, DiagonalMap) else DiagonalMap(d)


@dataclass(frozen=True)
class Attained:
    """The supremum is a maximum, attained at ``x`` with ``||x||_s = 1``."""

    x: np.ndarray


@dataclass(frozen=True)
class ExtremalSequence:
    """Unit vectors ``k -> a_k`` (``k >= k_min``) whose images approach the sup.

    ``divergent`` marks the case where ``||D a_k||_t`` grows without bound.
    Entries may overflow to ``inf`` for large ``k``; the weights treat such
    entries as the extended-real limit.
    """

    generator: Callable[[int], np.ndarray] = field(repr=False)
    divergent: bool
    k_min: int

    def __call__(self, k: int) -> np.ndarray:
        if k < self.k_min:
            raise InvalidInputError(f"sequence index must be >= {self.k_min}, got {k}")
        return self.generator(int(k))


@dataclass(frozen=True)
class Vacuous:
    """Zero map: every vector is mapped to 0, no extremizer is singled out."""


Extremizer = Union[Attained, ExtremalSequence, Vacuous]


def critical_exponent(s: float, t: float) -> float:
    """``s*t/(s-t)``, the exponent of the case-C closed form."""
    return s * t / (s - t)


def classify(s: ExponentLike, t: ExponentLike, d) -> CaseLabel:
    """Branch of the closed form that applies to ``(s, t, d)``.

    Requires ``n >= 2``; one-dimensional maps bypass classification (see
    :func:`operator_weight`).
    """
    s, t, d = Exponent(s), Exponent(t), _as_map(d)
    if d.n < 2:
        raise InvalidInputError("classification needs n >= 2")
    if d.is_zero or (t < 0 and d.has_zero_entry) or s == _INF:
        return CaseLabel.B
    if s < 0 < t:
        return CaseLabel.A
    if t == -_INF:
        return CaseLabel.E
    if t < s:
        return CaseLabel.C
    return CaseLabel.D


def operator_weight(s: ExponentLike, t: ExponentLike, d) -> float:
    """Closed-form operator weight ``||D||_{s,t}``.

    Examples
    --------
    >>> operator_weight(2, 1, [1, 2])   # sqrt(5)
    2.23606797749979
    >>> operator_weight(-1, 1, [1, 1])
    inf
    >>> operator_weight(2, "-inf", [1, 2])   # ||(1, 2)||_{-2}
    0.8944271909999159
    """
    s, t, d = Exponent(s), Exponent(t), _as_map(d)
    if d.n == 1:
        return d.moduli[0]
    label = classify(s, t, d)
    if label is CaseLabel.A:
        return _INF
    if label is CaseLabel.B:
        return hoelder_weight(d.moduli, t)
    if label is CaseLabel.C:
        return hoelder_weight(d.moduli, Exponent(critical_exponent(float(s), float(t))))
    if label is CaseLabel.D:
        return d.max_modulus
    return hoelder_weight(d.moduli, -s)


def _unit(logs: list[float], s: Exponent) -> np.ndarray:
    """Vector with log-moduli ``logs`` rescaled to ``||x||_s = 1``."""
    norm = log_weight_from_logs(logs, s)
    with np.errstate(over="ignore", under="ignore"):
        return np.exp(np.asarray(logs) - norm).astype(complex)


def _divergent_sequence(s: Exponent, d: DiagonalMap) -> ExtremalSequence:
    n, j = d.n, d.max_index
    # large entry scaled so that ||D a_k||_t >= k
    scale = max(1.0, 1.0 / d.max_modulus)

    def a(k: int) -> np.ndarray:
        big = scale * k
        x = np.empty(n, dtype=complex)
        if s == -_INF:
            x[:] = 1.0
        else:
            # ((1 - big**s) / (n - 1)) ** (1/s), with 1 - big**s = -expm1(s log big)
            x[:] = math.exp(math.log(-math.expm1(s * math.log(big)) / (n - 1)) / s)
        x[j] = big
        return x

    return ExtremalSequence(a, divergent=True, k_min=2)


def _approach_sequence(s: Exponent, t: Exponent, d: DiagonalMap) -> ExtremalSequence:
    """Unit vectors for ``s <= t < 0``: the maximal entry tends to 1, the rest to inf.

    The off-maximal entries are ``q_k = (k*S)**(-1/t)`` with
    ``S = sum_{i != M} (|v_i|/|v_M|)**t``, so that ``||D a_k||_t`` equals
    ``|v_M| * (a_M**t + 1/k)**(1/t)`` and the relative defect is about
    ``1/(k*|t|)``.
    """
    n, m = d.n, d.max_index
    vmax = d.max_modulus
    log_ratio_sum = float(
        logsumexp([float(t) * math.log(a / vmax) for i, a in enumerate(d.moduli) if i != m])
    )

    def a(k: int) -> np.ndarray:
        log_q = -(math.log(k) + log_ratio_sum) / float(t)
        x = np.empty(n, dtype=complex)
        with np.errstate(over="ignore"):
            x[:] = np.exp(log_q)
        if s == -_INF or math.isinf(x[m - 1 if m else 1].real):
            # overflowed entries contribute nothing to ||x||_s
            x[m] = 1.0
        else:
            # a_M**s + (n - 1) * q_k**s = 1
            tail = (n - 1) * math.exp(float(s) * log_q)
            x[m] = math.exp(math.log1p(-tail) / float(s))
        return x

    k_min = 1 if s == -_INF else 2
    return ExtremalSequence(a, divergent=False, k_min=k_min)


def extremizer(s: ExponentLike, t: ExponentLike, d) -> Extremizer:
    """A vector attaining ``||D||_{s,t}``, or a sequence approaching it.

    Examples
    --------
    >>> ext = extremizer(2, 1, [1, 2])
    >>> np.round(ext.x.real ** 2, 12)
    array([0.2, 0.8])
    >>> extremizer(1, 2, [1, 2]).x.real
    array([0., 1.])
    """
    s, t, d = Exponent(s), Exponent(t), _as_map(d)
    n = d.n
    if d.is_zero:
        return Vacuous()
    if n == 1:
        return Attained(np.ones(1, dtype=complex))
    label = classify(s, t, d)
    if label is CaseLabel.B:
        # s = inf: the all-ones vector; t < 0 with a zero entry: any unit vector
        return Attained(_unit([0.0] * n, s))
    if label is CaseLabel.A:
        return _divergent_sequence(s, d)
    if label is CaseLabel.C:
        expo = float(t) / (float(s) - float(t))
        logs = [expo * math.log(a) if a > 0 else -_INF for a in d.moduli]
        return Attained(_unit(logs, s))
    if label is CaseLabel.D:
        if s > 0:
            x = np.zeros(n, dtype=complex)
            x[d.max_index] = 1.0
            return Attained(x)
        return _approach_sequence(s, t, d)
    # E: entries 1/v_i scaled by ||v||_{-s}, so that D x is constant
    return Attained(hoelder_weight(d.moduli, -s) / d.v)


def dual_check(s: float, t: float, d, rtol: float = DUAL_RTOL) -> bool:
    """Check ``||D||_{s,t} == ||D||_{-t,-s}`` for finite ``s, t`` and ``prod v_i != 0``.

    Both sides go through :func:`classify`; the labels must agree as well as
    the values.
    """
    s, t, d = Exponent(s), Exponent(t), _as_map(d)
    if not (s.is_finite and t.is_finite):
        raise InvalidInputError("duality needs finite exponents")
    if d.has_zero_entry:
        raise InvalidInputError("duality needs all diagonal entries nonzero")
    lhs = operator_weight(s, t, d)
    rhs = operator_weight(-t, -s, d)
    if d.n >= 2 and classify(s, t, d) is not classify(-t, -s, d):
        return False
    if lhs == rhs:
        return True
    if math.isinf(lhs) or math.isinf(rhs):
        return False
    return abs(lhs - rhs) <= rtol * max(abs(lhs), abs(rhs))
