"""Hölder weights on complex vectors.

For an exponent ``p`` in ``{-inf, +inf} ∪ R \\ {0}`` the weight of a vector is

* ``(sum |x_i|**p) ** (1/p)`` for finite ``p``, except that a vector with a
  vanishing entry has weight 0 when ``p < 0``;
* ``max |x_i|`` for ``p = +inf`` and ``min |x_i|`` for ``p = -inf``.

All evaluation goes through the logarithmic domain so that extreme exponents
(``|p|`` in the thousands or more) neither overflow nor underflow whenever the
result itself is representable.
"""

from __future__ import annotations

import enum
import math
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "Exponent",
    "ExponentLike",
    "WeightClass",
    "as_vector",
    "moduli",
    "log_moduli",
    "log_weight_from_logs",
    "power_sum_weight",
    "batch_log_weight",
    "hoelder_weight",
    "log_hoelder_weight",
    "classify_weight",
]

# Magnitudes below this are indistinguishable from the excluded exponent 0.
MIN_EXPONENT_MAGNITUDE = 1e-300

_INF = math.inf


class Exponent(float):
    """A weight exponent: a nonzero finite real, ``+inf`` or ``-inf``.

    Behaves as a plain ``float`` everywhere; construction validates the value
    and also accepts the strings ``"inf"``, ``"+inf"`` and ``"-inf"``.

    >>> Exponent("-inf") < Exponent(-3) < Exponent(2) < Exponent("inf")
    True
    >>> -Exponent(2)
    Exponent(-2.0)
    """

    def __new__(cls, value: Union[float, str, "Exponent"]) -> "Exponent":
        if isinstance(value, Exponent):
            return value
        if isinstance(value, str):
            value = value.strip().lower()
            if value in ("inf", "+inf", "infinity", "+infinity"):
                value = _INF
            elif value in ("-inf", "-infinity"):
                value = -_INF
        try:
            q = float(value)
        except (TypeError, ValueError):
            raise InvalidInputError(f"not an exponent: {value!r}") from None
        if math.isnan(q):
            raise InvalidInputError("exponent must not be NaN")
        if abs(q) < MIN_EXPONENT_MAGNITUDE:
            raise InvalidInputError(f"exponent must be nonzero, got {q!r}")
        return super().__new__(cls, q)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self)

    def __neg__(self) -> "Exponent":
        return Exponent(-float(self))

    def __repr__(self) -> str:
        return f"Exponent({float(self)!r})"

    def __str__(self) -> str:
        return format_exponent(self)


ExponentLike = Union[Exponent, float, int, str]


def format_exponent(p: float) -> str:
    """Canonical text form: ``inf``, ``-inf`` or ``repr`` of the float."""
    if p == _INF:
        return "inf"
    if p == -_INF:
        return "-inf"
    return repr(float(p))


class WeightClass(enum.Enum):
    """Strongest structure a Hölder weight carries on ``C^n``."""

    HW_ONLY = "hw"
    PSEUDONORM = "pseudonorm"
    NORM = "norm"


def as_vector(x: Iterable[complex]) -> np.ndarray:
    """Return ``x`` as a nonempty 1-D complex array."""
    arr = np.asarray(x, dtype=complex)
    if arr.ndim != 1:
        raise InvalidInputError(f"expected a 1-D vector, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidInputError("vector must be nonempty")
    return arr


def moduli(x: Iterable[complex]) -> list[float]:
    """Moduli ``|x_i|`` as Python floats (``abs`` of a complex uses hypot)."""
    out = [abs(complex(xi)) for xi in x]
    if not out:
        raise InvalidInputError("vector must be nonempty")
    return out


def _exp(a: float) -> float:
    try:
        return math.exp(a)
    except OverflowError:
        return _INF


def _log(a: float) -> float:
    if a == 0.0:
        return -_INF
    return math.log(a)


def log_moduli(x: Iterable[complex]) -> list[float]:
    return [_log(a) for a in moduli(x)]


def log_weight_from_logs(logs: Sequence[float], p: ExponentLike) -> float:
    """Log of the Hölder weight of a vector given by its log-moduli.

    Entries of ``logs`` may be ``-inf`` (a zero entry) or ``+inf`` (an infinite
    entry, the extended-real limit). The result lies in ``[-inf, +inf]``.
    The summation uses :func:`math.fsum`, so the result does not depend on the
    order of the entries.
    """
    p = Exponent(p)
    if not logs:
        raise InvalidInputError("vector must be nonempty")
    if p == _INF:
        return max(logs)
    if p == -_INF:
        return min(logs)
    q = float(p)
    if q < 0.0 and any(lg == -_INF for lg in logs):
        return -_INF
    terms = []
    for lg in logs:
        term = q * lg
        if term == _INF:
            return _INF if q > 0.0 else -_INF
        if term != -_INF:
            terms.append(term)
    if not terms:
        # q > 0: all entries zero; q < 0: all entries infinite
        return -_INF if q > 0.0 else _INF
    m = max(terms)
    log_sum = m + math.log(math.fsum(math.exp(term - m) for term in terms))
    return log_sum / q


def power_sum_weight(
    a: Sequence[float], q: float, mass: Optional[Sequence[float]] = None
) -> float:
    """``(sum mass_i * a_i**q) ** (1/q)`` under the extended-real conventions.

    ``a`` holds moduli in ``[0, inf]`` and ``mass`` optional positive weights
    (``inf`` allowed). Products follow ``inf * 0 = 0`` and powers follow
    ``0**q = inf`` for ``q < 0``, so a vanishing entry forces the result to 0
    for negative ``q``. The dominant term is factored out before powering
    (the log-sum-exp shift, carried out on moduli), which keeps every
    intermediate in ``[0, 1]``.
    """
    if mass is None:
        mass = [1.0] * len(a)
    if q > 0.0:
        if any(ai == _INF for ai in a):
            return _INF
        live = [(ai, mi) for ai, mi in zip(a, mass) if ai > 0.0]
        if not live:
            return 0.0
        ref = max(ai for ai, _ in live)
    else:
        if any(ai == 0.0 for ai in a):
            return 0.0
        live = [(ai, mi) for ai, mi in zip(a, mass) if ai != _INF]
        if not live:
            return _INF
        ref = min(ai for ai, _ in live)
    total = math.fsum(_mass_times(mi, math.pow(ai / ref, q)) for ai, mi in live)
    if total == _INF:
        return _INF if q > 0.0 else 0.0
    try:
        scale = math.pow(total, 1.0 / q)
    except OverflowError:
        return _exp(math.log(ref) + math.log(total) / q)
    out = ref * scale
    if out == 0.0 or out == _INF:
        # the factored form left the float range; settle it in logs
        return _exp(math.log(ref) + math.log(total) / q)
    return out


def _mass_times(m: float, r: float) -> float:
    if r == 0.0 or m == 0.0:
        return 0.0
    return m * r


def log_hoelder_weight(x: Iterable[complex], p: ExponentLike) -> float:
    """Natural log of :func:`hoelder_weight` (``-inf`` for a zero weight)."""
    return log_weight_from_logs(log_moduli(x), p)


def hoelder_weight(x: Iterable[complex], p: ExponentLike) -> float:
    """Hölder weight ``||x||_p`` of a complex vector.

    Parameters
    ----------
    x : iterable of complex
        Nonempty vector. Only the moduli of the entries matter.
    p : float, str or Exponent
        Nonzero real, ``inf`` or ``-inf``.

    Returns
    -------
    float
        A value in ``[0, inf]``.

    Examples
    --------
    >>> hoelder_weight([3, 4], 2)
    5.0
    >>> hoelder_weight([1, 0], -2)
    0.0
    >>> hoelder_weight([1, 2, 3], "-inf")
    1.0
    """
    p = Exponent(p)
    a = moduli(x)
    if p == _INF:
        return max(a)
    if p == -_INF:
        return min(a)
    return power_sum_weight(a, float(p))


def batch_log_weight(logs: np.ndarray, p: ExponentLike) -> np.ndarray:
    """Vectorized :func:`log_weight_from_logs` over the last axis of ``logs``.

    Used by the search routines, where thousands of candidate vectors are
    scored at once. Agrees with the scalar kernel up to summation order.
    """
    p = Exponent(p)
    logs = np.asarray(logs, dtype=float)
    if p == _INF:
        return logs.max(axis=-1)
    if p == -_INF:
        return logs.min(axis=-1)
    q = float(p)
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        scaled = q * logs
        # inline shift-and-sum: the oracle calls this on small batches in a
        # tight loop where scipy's logsumexp per-call overhead dominates
        top = scaled.max(axis=-1, keepdims=True)
        shift = np.where(np.isfinite(top), top, 0.0)
        total = np.sum(np.exp(scaled - shift), axis=-1)
        out = (np.log(total) + shift[..., 0]) / q
    if q < 0.0:
        out = np.where(np.any(logs == -_INF, axis=-1), -_INF, out)
    return out


def classify_weight(p: ExponentLike, n: int) -> WeightClass:
    """Structure of ``||.||_p`` on ``C^n``.

    On ``C^1`` every Hölder weight is ``|x_1|``, hence a norm. For ``n > 1`` the
    weight is a pseudonorm iff ``p > 0`` and a norm iff ``p >= 1``.
    """
    p = Exponent(p)
    if n < 1:
        raise InvalidInputError(f"dimension must be positive, got {n}")
    if n == 1 or p >= 1.0:
        return WeightClass.NORM
    if p > 0.0:
        return WeightClass.PSEUDONORM
    return WeightClass.HW_ONLY
