"""Hölder weights of functions on finite discrete measure spaces.

A space is a finite list of atoms with masses in ``[0, inf]``; a function is
the list of its moduli ``|f(w_i)|`` in ``[0, inf]``. Atoms of mass 0 are a
null set and are discarded before anything is evaluated, so two functions
that differ only there have identical weights.

For finite ``p`` the weight is built from ``I = sum mu_i * |f_i|**p`` with the
conventions ``inf * 0 = 0`` and ``1/0 = inf``:

* ``p > 0``: ``I**(1/p)``;
* ``p < 0``: ``I**(1/p)`` if ``0 < I < inf``, ``0`` if ``I = inf`` and ``inf``
  if ``I = 0``.

``p = inf`` is the essential supremum, ``p = -inf`` the essential infimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError
from .inequalities import (
    Direction,
    ExponentTriple,
    InequalityReport,
    RECIPROCAL_ATOL,
    ext_mul,
    make_report,
)
from .weights import Exponent, ExponentLike, power_sum_weight

__all__ = [
    "DiscreteMeasureSpace",
    "StepFunction",
    "lp_weight",
    "in_Lp",
    "ext_pointwise_product",
    "check_reverse_hoelder",
    "check_hoelder_lp",
]

_INF = math.inf


def _extended_nonneg(values, what: str) -> tuple:
    out = []
    for val in values:
        val = abs(float(val))
        if math.isnan(val):
            raise InvalidInputError(f"{what} must not contain NaN")
        out.append(val)
    if not out:
        raise InvalidInputError(f"{what} must be nonempty")
    return tuple(out)


@dataclass(frozen=True)
class DiscreteMeasureSpace:
    masses: tuple

    def __post_init__(self):
        masses = _extended_nonneg(self.masses, "masses")
        if not any(m > 0.0 for m in masses):
            raise InvalidInputError("total mass must be positive")
        object.__setattr__(self, "masses", masses)

    def __len__(self) -> int:
        return len(self.masses)

    @property
    def support(self) -> tuple:
        """Indices of atoms with positive mass."""
        return tuple(i for i, m in enumerate(self.masses) if m > 0.0)


@dataclass(frozen=True)
class StepFunction:
    """Moduli of a function on the atoms; signed input is absorbed by ``abs``."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", _extended_nonneg(self.values, "values"))

    def __len__(self) -> int:
        return len(self.values)


def _space(space) -> DiscreteMeasureSpace:
    return space if isinstance(space, DiscreteMeasureSpace) else DiscreteMeasureSpace(tuple(space))


def _func(f) -> StepFunction:
    return f if isinstance(f, StepFunction) else StepFunction(tuple(f))


def _check_lengths(space: DiscreteMeasureSpace, *funcs: StepFunction) -> None:
    for f in funcs:
        if len(f) != len(space):
            raise InvalidInputError(f"length mismatch: function has {len(f)} atoms, space {len(space)}")


def lp_weight(f, space, p: ExponentLike) -> float:
    """``||f||_p`` on a discrete measure space.

    >>> lp_weight([3, 4], [1, 1], 2)
    5.0
    >>> lp_weight([0, 5], [1, 1], -1)
    0.0
    >>> lp_weight([math.inf, math.inf], [1, 1], -1)
    inf
    >>> lp_weight([5, 2], [0, 1], "inf")
    2.0
    """
    f, space, p = _func(f), _space(space), Exponent(p)
    _check_lengths(space, f)
    support = space.support
    vals = [f.values[i] for i in support]
    if p == _INF:
        return max(vals)
    if p == -_INF:
        return min(vals)
    masses = [space.masses[i] for i in support]
    q = float(p)
    if q > 0.0:
        return power_sum_weight(vals, q, masses)
    # p < 0: the integral is inf (weight 0) as soon as some charged atom
    # carries f = 0, and it is 0 (weight inf) when f = inf on every charged atom
    if any(a == 0.0 for a in vals):
        return 0.0
    if all(a == _INF for a in vals):
        return _INF
    return power_sum_weight(vals, q, masses)


def in_Lp(f, space, p: ExponentLike) -> bool:
    """Membership in ``L^p``; for ``p < 0`` (and ``p = inf``) this is ``L^inf``."""
    f, space, p = _func(f), _space(space), Exponent(p)
    _check_lengths(space, f)
    if p < 0 or p == _INF:
        return lp_weight(f, space, _INF) < _INF
    return lp_weight(f, space, p) < _INF


def ext_pointwise_product(f, g) -> StepFunction:
    """``|f*g|`` atom by atom with ``inf * 0 = 0``."""
    f, g = _func(f), _func(g)
    if len(f) != len(g):
        raise InvalidInputError(f"length mismatch: {len(f)} vs {len(g)}")
    return StepFunction(tuple(ext_mul(a, b) for a, b in zip(f.values, g.values)))


def check_reverse_hoelder(f, g, r: float, s: float, space) -> InequalityReport:
    """Verify ``||f*g||_1 >= ||f||_r * ||g||_s`` for ``r, s < 1``, ``1/r + 1/s = 1``.

    The hypothesis forces ``r`` and ``s`` to opposite signs.
    """
    f, g, space = _func(f), _func(g), _space(space)
    _check_lengths(space, f, g)
    r, s = float(r), float(s)
    if r == 0.0 or s == 0.0 or not (math.isfinite(r) and math.isfinite(s)):
        raise InvalidInputError("r and s must be finite and nonzero")
    if not (r < 1.0 and s < 1.0):
        raise InvalidInputError(f"reverse Hölder needs r, s < 1, got r={r}, s={s}")
    if abs(1.0 / r + 1.0 / s - 1.0) > RECIPROCAL_ATOL:
        raise InvalidInputError(f"1/r + 1/s must equal 1, got {1.0 / r + 1.0 / s!r}")
    lhs = lp_weight(ext_pointwise_product(f, g), space, 1.0)
    rhs = ext_mul(lp_weight(f, space, r), lp_weight(g, space, s))
    return make_report(lhs, rhs, Direction.T_GREATER)


def check_hoelder_lp(f, g, triple: ExponentTriple, space) -> InequalityReport:
    """Generalized Hölder inequality ``||f*g||_t`` vs ``||f||_r * ||g||_s`` for functions."""
    f, g, space = _func(f), _func(g), _space(space)
    _check_lengths(space, f, g)
    lhs = lp_weight(ext_pointwise_product(f, g), space, triple.t)
    rhs = ext_mul(lp_weight(f, space, triple.r), lp_weight(g, space, triple.s))
    return make_report(lhs, rhs, triple.direction)
