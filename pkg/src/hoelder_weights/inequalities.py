"""Generalized Hölder inequality for vectors, in both directions.

For nonzero reals ``r, s, t`` with ``1/t = 1/r + 1/s`` exactly one of
``t < min(r, s)`` or ``t > max(r, s)`` holds, and accordingly

    t < r, s   =>   ||v * x||_t <= ||v||_r * ||x||_s
    t > r, s   =>   ||v * x||_t >= ||v||_r * ||x||_s

with ``*`` the componentwise product. Negative exponents are allowed; a
vanishing entry makes a negative-exponent weight 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConjugateUndefinedError, InvalidInputError
from .weights import as_vector, hoelder_weight

__all__ = [
    "Direction",
    "ExponentTriple",
    "InequalityReport",
    "conjugate_t",
    "ext_mul",
    "make_report",
    "check_generalized_hoelder",
]

_INF = math.inf
RECIPROCAL_ATOL = 1e-12
CONJUGATE_ATOL = 1e-14
REPORT_RTOL = 1e-12
REPORT_FLOOR = 1e-300


class Direction(str, enum.Enum):
    T_LESS = "t<r,s"
    T_GREATER = "t>r,s"


@dataclass(frozen=True)
class ExponentTriple:
    """Conjugate exponents ``1/t = 1/r + 1/s`` and the resulting direction."""

    r: float
    s: float
    t: float
    direction: Direction = None  # filled in from r, s, t

    def __post_init__(self):
        r, s, t = float(self.r), float(self.s), float(self.t)
        for name, val in (("r", r), ("s", s), ("t", t)):
            if not math.isfinite(val) or val == 0.0:
                raise InvalidInputError(f"{name} must be a finite nonzero real, got {val!r}")
        if abs(1.0 / t - (1.0 / r + 1.0 / s)) > RECIPROCAL_ATOL:
            raise InvalidInputError(f"1/t != 1/r + 1/s for (r, s, t) = ({r}, {s}, {t})")
        if t < r and t < s:
            direction = Direction.T_LESS
        elif t > r and t > s:
            direction = Direction.T_GREATER
        else:
            raise InvalidInputError(f"t={t} lies between r={r} and s={s}")
        if self.direction is not None and Direction(self.direction) is not direction:
            raise InvalidInputError(f"direction {self.direction} contradicts (r, s, t)")
        # t below 0, r and s, or above all three, forces r and s to opposite signs
        if ((direction is Direction.T_LESS and t < 0) or (direction is Direction.T_GREATER and t > 0)) and r * s >= 0:
            raise InvalidInputError(f"r and s must have opposite signs for (r, s, t) = ({r}, {s}, {t})")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "direction", direction)


def conjugate_t(r: float, s: float) -> ExponentTriple:
    """Complete ``(r, s)`` to a conjugate triple with ``t = r*s/(r+s)``.

    >>> conjugate_t(2, 2)
    ExponentTriple(r=2.0, s=2.0, t=1.0, direction=<Direction.T_LESS: 't<r,s'>)
    >>> conjugate_t(-2, 1).t, conjugate_t(-2, 1).direction.name
    (2.0, 'T_GREATER')
    """
    r, s = float(r), float(s)
    if r == 0.0 or s == 0.0 or not (math.isfinite(r) and math.isfinite(s)):
        raise InvalidInputError("r and s must be finite and nonzero")
    if abs(1.0 / r + 1.0 / s) < CONJUGATE_ATOL:
        raise ConjugateUndefinedError(f"1/r + 1/s vanishes for r={r}, s={s}")
    return ExponentTriple(r, s, r * s / (r + s))


def ext_mul(a: float, b: float) -> float:
    """Product on ``[0, inf]`` with ``inf * 0 = 0``."""
    if a == 0.0 or b == 0.0:
        return 0.0
    return a * b


@dataclass(frozen=True)
class InequalityReport:
    """Both sides of a Hölder-type inequality and the verdict.

    ``slack`` is the signed relative margin in the inequality's direction:
    positive when the inequality holds strictly, negative when violated,
    0 at equality.
    """

    lhs: float
    rhs: float
    direction: Direction
    satisfied: bool
    slack: float


def _slack(lhs: float, rhs: float, direction: Direction) -> float:
    if lhs == rhs:
        return 0.0
    margin_sign = 1.0 if direction is Direction.T_LESS else -1.0
    if math.isinf(lhs) or math.isinf(rhs):
        # one side infinite, the other finite
        return margin_sign * (1.0 if math.isinf(rhs) else -1.0) * _INF
    return margin_sign * (rhs - lhs) / max(lhs, rhs, REPORT_FLOOR)


def make_report(lhs: float, rhs: float, direction: Direction, rtol: float = REPORT_RTOL) -> InequalityReport:
    """Judge ``lhs <= rhs`` (or ``>=``) at relative tolerance ``rtol``."""
    direction = Direction(direction)
    if direction is Direction.T_LESS:
        ok = lhs <= rhs or lhs <= rhs * (1.0 + rtol) + REPORT_FLOOR
    else:
        ok = lhs >= rhs or lhs >= rhs * (1.0 - rtol) - REPORT_FLOOR
    return InequalityReport(lhs, rhs, direction, bool(ok), _slack(lhs, rhs, direction))


def check_generalized_hoelder(v, x, triple: ExponentTriple) -> InequalityReport:
    """Evaluate ``||v*x||_t`` against ``||v||_r * ||x||_s``.

    Examples
    --------
    >>> rep = check_generalized_hoelder([1, 2], [1, 1], conjugate_t(-2, 1))
    >>> round(rep.lhs, 4), round(rep.rhs, 4), rep.satisfied
    (2.2361, 1.7889, True)
    """
    v, x = as_vector(v), as_vector(x)
    if v.size != x.size:
        raise InvalidInputError(f"length mismatch: {v.size} vs {x.size}")
    with np.errstate(invalid="ignore"):
        prod = v * x
    # inf * 0 = 0
    prod[np.isnan(prod)] = 0.0
    lhs = hoelder_weight(prod, triple.t)
    rhs = ext_mul(hoelder_weight(v, triple.r), hoelder_weight(x, triple.s))
    return make_report(lhs, rhs, triple.direction)
