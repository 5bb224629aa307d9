"""Brute-force estimates of ``sup { ||D x||_t : ||x||_s = 1 }``.

Two independent routes to the operator weight, neither of which uses the
closed form:

* :func:`oracle_operator_weight` samples random moduli vectors and polishes the
  best one by multiplicative coordinate search. The ratio
  ``||D x||_t / ||x||_s`` is scale invariant, so the search runs over
  log-moduli without any normalization constraint, and extended values
  (coordinates pushed towards 0 or inf) are reachable.
* :func:`exact_n2` handles ``n = 2`` through the one-parameter family
  ``x(y) = (y, (1 - y**s)**(1/s))`` of unit vectors, checking the critical
  point of that curve against a dense scan.

Seeding policy
--------------
The sample budget is cut into blocks of :data:`BLOCK_SIZE` draws. Block ``b``
draws from ``SeedSequence(seed, spawn_key=(b,))``, so the set of samples is
fixed by the seed alone. Blocks may be scored on any number of worker
threads; the best sample is the one with the largest ratio and, among equal
ratios, the smallest global sample index. Results are therefore bit-identical
for every ``workers`` value.
"""

from __future__ import annotations

import functools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CriticalPointDefect, InvalidInputError
from .operator import DiagonalMap, _as_map
from .weights import Exponent, ExponentLike, batch_log_weight, log_weight_from_logs

__all__ = [
    "BLOCK_SIZE",
    "SearchBudget",
    "OracleEstimate",
    "log_ratio",
    "log_divergence_threshold",
    "oracle_operator_weight",
    "exact_n2",
    "n2_curve_scan",
]

_INF = math.inf
BLOCK_SIZE = 2048

# log-uniform sampling range for the moduli
_LOG_LO, _LOG_HI = math.log(1e-6), math.log(1e6)
# coordinate step schedule (in log-modulus units) and the longest jump tried
_STEP_START = math.log(2.0)
_STEP_END = math.log1p(1e-9)
_MAX_JUMP = 4096.0

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SearchBudget:
    samples: int = 10_000
    refinement_iterations: int = 200
    divergence_threshold: float = 1e9
    seed: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidInputError("the search needs at least one sample")
        if self.refinement_iterations < 0:
            raise InvalidInputError("refinement_iterations must be nonnegative")
        if not self.divergence_threshold > 1.0:
            raise InvalidInputError("divergence_threshold must exceed 1")


@dataclass(frozen=True)
class OracleEstimate:
    """Best ratio found and the unit vector achieving it.

    ``witness`` is normalized to ``||witness||_s = 1``; entries may have
    under- or overflowed to 0 or inf when the search drove a coordinate to
    its extended-real limit. ``log_witness`` keeps the exact log-moduli.
    """

    lower_bound: float
    witness: np.ndarray
    log_witness: np.ndarray
    diverging: bool
    evaluations: int
    seed: int


def log_ratio(logv: np.ndarray, logx: np.ndarray, s: Exponent, t: Exponent) -> np.ndarray:
    """``log(||D x||_t / ||x||_s)`` for rows of log-moduli ``logx``."""
    with np.errstate(invalid="ignore"):
        out = batch_log_weight(logv + logx, t) - batch_log_weight(logx, s)
    return np.where(np.isnan(out), -_INF, out)


def _score_block(block: int, count: int, n: int, seed: int, logv, s, t):
    rng = np.random.default_rng(np.random.SeedSequence(seed & _SEED_MASK, spawn_key=(block,)))
    logx = rng.uniform(_LOG_LO, _LOG_HI, size=(count, n))
    vals = log_ratio(logv, logx, s, t)
    i = int(np.argmax(vals))
    return float(vals[i]), block * BLOCK_SIZE + i, logx[i]


def _sample(logv, s, t, budget: SearchBudget, workers: int):
    n = logv.size
    blocks = [
        (b, min(BLOCK_SIZE, budget.samples - b * BLOCK_SIZE))
        for b in range(-(-budget.samples // BLOCK_SIZE))
    ]
    args = [(b, c, n, budget.seed, logv, s, t) for b, c in blocks]
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda a: _score_block(*a), args))
    else:
        results = [_score_block(*a) for a in args]
    # largest value first, then smallest global index
    best = max(results, key=lambda r: (r[0], -r[1]))
    return best[0], best[2].copy()


def _rungs(step: float) -> int:
    return max(1, int(math.ceil(math.log(_MAX_JUMP / step, 4.0))) + 1)


@functools.lru_cache(maxsize=None)
def _move_table(n: int, rungs: int) -> np.ndarray:
    """Unit-step offsets for every single-coordinate move, shape ``(n*m, n)``.

    Row ``i*m + j`` moves coordinate ``i`` by ``+4**j`` base steps (``-`` in
    the second half of each block). The caller picks ``rungs`` so the longest
    jump stays near :data:`_MAX_JUMP`; longer jumps would make the log-ratio a
    difference of huge numbers and let rounding masquerade as progress.
    """
    ladder = 4.0 ** np.arange(rungs)
    deltas = np.concatenate([ladder, -ladder])
    m = deltas.size
    table = np.zeros((n * m, n))
    table[np.arange(n * m), np.repeat(np.arange(n), m)] = np.tile(deltas, n)
    return table


def _refine(logv, x, fx, s, t, iterations: int, log_threshold: float):
    """Multiplicative coordinate search in log-moduli.

    Each round scores every single-coordinate move ``x_i * exp(+-h * 4**j)``,
    takes the best, and also tries all per-coordinate winners at once. The base
    step ``h`` shrinks geometrically from ``log 2`` to ``log(1 + 1e-9)``.
    """
    n = x.size
    coords = np.arange(n)
    evaluations = 0
    for it in range(iterations):
        if fx > log_threshold:
            break
        frac = it / max(iterations - 1, 1)
        step = _STEP_START * (_STEP_END / _STEP_START) ** frac
        table = _move_table(n, _rungs(step))
        m = table.shape[0] // n
        moves = step * table
        vals = log_ratio(logv, x + moves, s, t).reshape(n, m)
        evaluations += n * m
        per_coord = np.argmax(vals, axis=1)
        gains = vals[coords, per_coord]
        i = int(np.argmax(gains))
        if not gains[i] > fx:
            continue
        best_x, best_f = x + moves[i * m + per_coord[i]], float(gains[i])
        improving = gains > fx
        if np.count_nonzero(improving) > 1:
            joint = x + moves[(coords * m + per_coord)[improving]].sum(axis=0)
            fj = float(log_ratio(logv, joint[None, :], s, t)[0])
            evaluations += 1
            if fj > best_f:
                best_x, best_f = joint, fj
        x, fx = best_x, best_f
    return x, fx, evaluations


def log_divergence_threshold(d: DiagonalMap, s: Exponent, t: Exponent, factor: float) -> float:
    """Log of the ratio beyond which the search reports divergence.

    Whenever the operator weight is finite, every ratio obeys
    ``||D x||_t / ||x||_s <= max|v_i| * n**(|1/s| + |1/t|)`` (power-mean
    comparison of ``||.||_t`` and ``||.||_s``). Divergence is declared once the
    ratio exceeds ``factor`` times that bound.
    """
    if d.is_zero:
        return _INF
    spread = abs(1.0 / s) + abs(1.0 / t)
    return math.log(factor) + math.log(d.max_modulus) + spread * math.log(d.n)


def oracle_operator_weight(
    d, s: ExponentLike, t: ExponentLike, budget: SearchBudget | None = None, workers: int = 1
) -> OracleEstimate:
    """Lower bound on ``||D||_{s,t}`` by random search plus coordinate polishing.

    Parameters
    ----------
    d : DiagonalMap or sequence of complex
    s, t : exponents
    budget : SearchBudget, optional
        Defaults to 10 000 samples and 200 refinement rounds.
    workers : int
        Threads used for the sampling phase; does not affect the result.

    Returns
    -------
    OracleEstimate
        ``diverging`` is set once the ratio exceeds the divergence threshold
        (relative to the a-priori bound, see :func:`log_divergence_threshold`).
    """
    d, s, t = _as_map(d), Exponent(s), Exponent(t)
    budget = budget or SearchBudget()
    if budget.samples < 1:
        raise InvalidInputError("the search needs at least one sample")
    logv = np.array([math.log(a) if a > 0 else -_INF for a in d.moduli])
    log_threshold = log_divergence_threshold(d, s, t, budget.divergence_threshold)

    fx, x = _sample(logv, s, t, budget, workers)
    evaluations = budget.samples
    if fx != -_INF:
        x, fx, extra = _refine(logv, x, fx, s, t, budget.refinement_iterations, log_threshold)
        evaluations += extra

    log_witness = x - log_weight_from_logs(list(x), s)
    with np.errstate(over="ignore", under="ignore"):
        witness = np.exp(log_witness).astype(complex)
    lower = 0.0 if fx == -_INF else _exp(fx)
    return OracleEstimate(
        lower_bound=lower,
        witness=witness,
        log_witness=log_witness,
        diverging=fx > log_threshold,
        evaluations=evaluations,
        seed=budget.seed,
    )


def _exp(a: float) -> float:
    try:
        return math.exp(a)
    except OverflowError:
        return _INF


# --------------------------------------------------------------------------
# n = 2: the unit curve y -> (y, (1 - y**s)**(1/s))


def _curve_log_values(log_b: float, s: float, t: float, log_u: np.ndarray, log_1mu: np.ndarray):
    """``log G`` at the unit vectors with ``y**s = u``, for the map diag(b, 1).

    ``u`` ranges over ``(0, 1)`` for either sign of ``s``: ``y = u**(1/s)``
    lies in ``(0, 1)`` when ``s > 0`` and in ``(1, inf)`` when ``s < 0``.
    """
    log_y = log_u / s
    log_x2 = log_1mu / s
    rows = np.stack([log_b + log_y, log_x2], axis=-1)
    return batch_log_weight(rows, t)


def _log_u_pair(z):
    """``log u`` and ``log(1-u)`` for ``u = 1/(1 + exp(-z))``."""
    z = np.asarray(z, dtype=float)
    return -np.logaddexp(0.0, -z), -np.logaddexp(0.0, z)


def _boundary_log_values(log_b: float, s: float, t: float) -> list[float]:
    """Limits of ``log G`` at the two ends of the curve.

    As ``u -> 0`` the unit vector tends to ``(0, 1)`` for ``s > 0`` and to
    ``(inf, 1)`` for ``s < 0``; as ``u -> 1`` it tends to ``(1, 0)`` and
    ``(1, inf)`` respectively. The weights of the limits are taken on the
    extended reals.
    """
    out = []
    # u -> 0: y**s -> 0 and x2 -> 1
    log_y = -_INF if s > 0 else _INF
    out.append(log_weight_from_logs([log_b + log_y if log_b != -_INF else -_INF, 0.0], t))
    # u -> 1: y -> 1 and x2**s -> 0
    log_x2 = -_INF if s > 0 else _INF
    out.append(log_weight_from_logs([log_b, log_x2], t))
    return out


def n2_curve_scan(log_b: float, s: float, t: float, points: int = 100_000) -> float:
    """Maximum of ``log G`` over a dense scan of the unit curve.

    The curve is parametrized by ``z = logit(y**s)`` on a symmetric window wide
    enough for both tails to have settled to double precision. The best grid
    point is polished by golden-section search between its neighbours, and the
    two end limits are included.
    """
    b_term = abs(s * log_b) if math.isfinite(log_b) else 0.0
    span = 40.0 * max(1.0, abs(s / t)) + b_term + 40.0
    z = np.linspace(-span, span, points)
    vals = _curve_log_values(log_b, s, t, *_log_u_pair(z))
    i = int(np.nanargmax(vals))
    best = float(vals[i])
    lo, hi = z[max(i - 1, 0)], z[min(i + 1, points - 1)]

    def f(zz: float) -> float:
        return float(_curve_log_values(log_b, s, t, *_log_u_pair([zz]))[0])

    best = max(best, _golden_max(f, lo, hi))
    return max([best] + _boundary_log_values(log_b, s, t))


def _golden_max(f, lo: float, hi: float, iterations: int = 120) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    e = a + invphi * (b - a)
    fc, fe = f(c), f(e)
    for _ in range(iterations):
        if fc > fe:
            b, e, fe = e, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, e, fe
            e = a + invphi * (b - a)
            fe = f(e)
        if b - a <= 1e-15 * max(1.0, abs(a)):
            break
    return max(fc, fe)


def exact_n2(d, s: float, t: float, verify: bool = True, rtol: float = 1e-9) -> float:
    """Operator weight for ``n = 2`` from the critical point of the unit curve.

    With the larger-modulus entry factored out (``b = v_small / v_large``), the
    candidates are ``G`` at the critical point ``y_E`` with
    ``y_E**s = 1 / (1 + |b|**(s*t/(t-s)))`` and the two ends of the curve.

    When ``verify`` is set the candidate maximum is compared with
    :func:`n2_curve_scan`; a relative disagreement above ``rtol`` raises
    :class:`CriticalPointDefect`.
    """
    d = _as_map(d)
    if d.n != 2:
        raise InvalidInputError(f"exact_n2 needs n = 2, got n = {d.n}")
    s, t = Exponent(s), Exponent(t)
    if not (s.is_finite and t.is_finite):
        raise InvalidInputError("exact_n2 needs finite exponents")
    s, t = float(s), float(t)
    if d.is_zero:
        return 0.0
    vmax = d.max_modulus
    vmin = d.moduli[1 - d.max_index]
    if s < 0 < t:
        return _INF
    if vmin == 0.0 and t < 0:
        return 0.0
    log_b = math.log(vmin / vmax) if vmin > 0 else -_INF

    candidates = _boundary_log_values(log_b, s, t)
    if s != t and log_b != -_INF:
        # u_E = y_E**s = 1/(1 + c), c = |b|**(s t/(t - s))
        log_c = s * t / (t - s) * log_b
        log_u = -np.logaddexp(0.0, log_c)
        log_1mu = log_c + log_u
        candidates.append(float(_curve_log_values(log_b, s, t, np.array(log_u), np.array(log_1mu))))
    best = max(candidates)

    if verify:
        scanned = n2_curve_scan(log_b, s, t)
        if abs(math.expm1(best - scanned)) > rtol:
            raise CriticalPointDefect(
                f"critical value exp({best!r}) differs from scan maximum exp({scanned!r}) "
                f"for b={math.exp(log_b)!r}, s={s!r}, t={t!r}"
            )
    return vmax * _exp(best)
