"""Command-line front end.

Every invocation prints one JSON report (or a two-line CSV of its scalar
fields with ``--format csv``)::

    hoelder-weights opweight -s 2 -t 1 -v 1,2
    hoelder-weights weight -p -inf -x 1,2,3
    hoelder-weights certify -s 2 -t -inf -v 1,2 --seed 42

Exponents are decimal literals, ``inf`` or ``-inf``; vectors are
comma-separated complex literals such as ``1``, ``-2.5``, ``1+2i`` or ``3i``.
Exit status: 0 on success, 1 when an inequality or certification fails,
2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .errors import InvalidInputError
from .inequalities import conjugate_t, check_generalized_hoelder
from .measure import check_reverse_hoelder, lp_weight
from .operator import (
    Attained,
    DiagonalMap,
    ExtremalSequence,
    classify,
    extremizer,
    operator_weight,
)
from .oracle import SearchBudget, oracle_operator_weight
from .weights import Exponent, format_exponent, hoelder_weight

__all__ = ["run", "main", "build_parser", "argv_from_report", "parse_vector", "parse_exponent"]

SEED_ENV = "HW_SEED"
DEFAULT_CERTIFY_RTOL = 1e-4

_INF = math.inf

# options whose value may start with "-" (negative numbers, -inf, vectors)
_VALUE_OPTIONS = {
    "-p", "-s", "-t", "-r", "-x", "-v", "-f", "-g", "-k",
    "--masses", "--values", "--seed", "--samples", "--refinements",
    "--threshold", "--rtol", "--workers", "--format",
}

_COMPLEX_RE = re.compile(r"^[+-]?[0-9.eE+\-infa]*[ij]?$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


# -- parsing ----------------------------------------------------------------


def parse_exponent(text: str) -> Exponent:
    return Exponent(text)


def _parse_complex(tok: str) -> complex:
    tok = tok.strip().replace(" ", "")
    if not tok or not _COMPLEX_RE.match(tok):
        raise InvalidInputError(f"malformed number {tok!r}")
    try:
        return complex(tok.replace("i", "j").replace("nfj", "nf").replace("jnf", "inf"))
    except ValueError:
        raise InvalidInputError(f"malformed number {tok!r}") from None


def parse_vector(text: str) -> list[complex]:
    """Comma-separated complex literals (``a``, ``a+bi``, ``bi``)."""
    toks = text.split(",")
    if any(not tok.strip() for tok in toks):
        raise InvalidInputError(f"malformed vector {text!r}")
    out = [_parse_complex(tok) for tok in toks]
    if any(math.isnan(z.real) or math.isnan(z.imag) for z in out):
        raise InvalidInputError("vector entries must not be NaN")
    return out


def parse_reals(text: str) -> list[float]:
    out = []
    for z in parse_vector(text):
        if z.imag != 0.0:
            raise InvalidInputError(f"expected real values, got {z}")
        out.append(z.real)
    return out


def _real(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise InvalidInputError(f"malformed real {text!r}") from None
    if math.isnan(val):
        raise InvalidInputError("NaN is not allowed")
    return val


# -- formatting -------------------------------------------------------------


def _fmt_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(float(x))


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return _fmt_real(z.real)
    sign = "+" if z.imag >= 0 or math.isnan(z.imag) else "-"
    return f"{_fmt_real(z.real)}{sign}{_fmt_real(abs(z.imag))}i"


def format_vector(x) -> str:
    return ",".join(format_complex(z) for z in x)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else _fmt_real(obj)
    if hasattr(obj, "item"):  # numpy scalar
        return _jsonable(obj.item())
    return str(obj)


def serialize(report: dict, fmt: str = "json") -> str:
    data = _jsonable(report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    row = {}
    for key in ("command", "case_label", "provenance", "seed"):
        row[key] = data.get(key)
    result = data.get("result")
    if isinstance(result, dict):
        for key in sorted(result):
            if not isinstance(result[key], (dict, list)):
                row[key] = result[key]
    else:
        row["result"] = result
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(row))
    writer.writerow(["" if v is None else v for v in row.values()])
    return buf.getvalue()


# -- commands ---------------------------------------------------------------


def _report(command, inputs, result, provenance="closed_form", case_label=None, seed=None):
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "case_label": case_label,
        "provenance": provenance,
        "seed": seed,
    }


def _label(s, t, d: DiagonalMap) -> Optional[str]:
    return classify(s, t, d).value if d.n >= 2 else None


def _seed(args) -> int:
    if args.seed is not None:
        return int(args.seed)
    env = os.environ.get(SEED_ENV)
    if env is not None and env.strip():
        try:
            return int(env)
        except ValueError:
            raise InvalidInputError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return 0


def _budget(args, seed: int) -> SearchBudget:
    return SearchBudget(
        samples=args.samples,
        refinement_iterations=args.refinements,
        divergence_threshold=args.threshold,
        seed=seed,
    )


def _cmd_weight(args):
    p, x = parse_exponent(args.p), parse_vector(args.x)
    inputs = {"p": format_exponent(p), "x": format_vector(x)}
    return 0, _report("weight", inputs, hoelder_weight(x, p))


def _map_inputs(args):
    s, t = parse_exponent(args.s), parse_exponent(args.t)
    d = DiagonalMap(parse_vector(args.v))
    inputs = {"s": format_exponent(s), "t": format_exponent(t), "v": format_vector(d.v)}
    return s, t, d, inputs


def _cmd_opweight(args):
    s, t, d, inputs = _map_inputs(args)
    return 0, _report("opweight", inputs, operator_weight(s, t, d), case_label=_label(s, t, d))


def _cmd_extremal(args):
    s, t, d, inputs = _map_inputs(args)
    inputs["k"] = args.k
    ext = extremizer(s, t, d)
    if isinstance(ext, Attained):
        x = ext.x
        result = {"kind": "attained", "x": format_vector(x)}
    elif isinstance(ext, ExtremalSequence):
        k = max(args.k, ext.k_min)
        x = ext(k)
        result = {
            "kind": "sequence",
            "divergent": ext.divergent,
            "k": k,
            "k_min": ext.k_min,
            "x": format_vector(x),
        }
    else:
        return 0, _report("extremal", inputs, {"kind": "vacuous"}, case_label=_label(s, t, d))
    result["weight_s"] = hoelder_weight(x, s)
    result["image_weight_t"] = hoelder_weight(d.apply(x), t)
    result["operator_weight"] = operator_weight(s, t, d)
    return 0, _report("extremal", inputs, result, case_label=_label(s, t, d))


def _inequality_result(rep) -> dict:
    return {
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "direction": rep.direction.value,
        "satisfied": rep.satisfied,
        "slack": rep.slack,
    }


def _cmd_verify(args):
    r, s = _real(args.r), _real(args.s)
    v, x = parse_vector(args.v), parse_vector(args.x)
    triple = conjugate_t(r, s)
    inputs = {"r": _fmt_real(r), "s": _fmt_real(s), "v": format_vector(v), "x": format_vector(x)}
    rep = check_generalized_hoelder(v, x, triple)
    result = _inequality_result(rep)
    result["t"] = triple.t
    return (0 if rep.satisfied else 1), _report("verify-hoelder", inputs, result)


def _cmd_reverse(args):
    r, s = _real(args.r), _real(args.s)
    f, g, masses = parse_reals(args.f), parse_reals(args.g), parse_reals(args.masses)
    inputs = {
        "r": _fmt_real(r),
        "s": _fmt_real(s),
        "f": format_vector(f),
        "g": format_vector(g),
        "masses": format_vector(masses),
    }
    rep = check_reverse_hoelder(f, g, r, s, masses)
    return (0 if rep.satisfied else 1), _report("reverse-hoelder", inputs, _inequality_result(rep))


def _cmd_lp(args):
    p = parse_exponent(args.p)
    masses, values = parse_reals(args.masses), parse_reals(args.values)
    inputs = {"p": format_exponent(p), "masses": format_vector(masses), "values": format_vector(values)}
    return 0, _report("lp", inputs, lp_weight(values, masses, p))


def _oracle_result(est) -> dict:
    return {
        "lower_bound": est.lower_bound,
        "diverging": est.diverging,
        "evaluations": est.evaluations,
        "witness": format_vector(est.witness),
    }


def _search_inputs(inputs: dict, args) -> dict:
    inputs.update(
        samples=args.samples,
        refinements=args.refinements,
        threshold=_fmt_real(args.threshold),
    )
    return inputs


def _cmd_oracle(args):
    s, t, d, inputs = _map_inputs(args)
    seed = _seed(args)
    est = oracle_operator_weight(d, s, t, _budget(args, seed), workers=args.workers)
    return 0, _report(
        "oracle", _search_inputs(inputs, args), _oracle_result(est),
        provenance="oracle", case_label=_label(s, t, d), seed=seed,
    )


def relative_gap(closed: float, estimate: float) -> float:
    if closed == estimate:
        return 0.0
    if math.isinf(closed) or math.isinf(estimate):
        return _INF
    return abs(closed - estimate) / max(abs(closed), 1e-300)


def certify(s, t, d, budget: SearchBudget, rtol: float = DEFAULT_CERTIFY_RTOL, workers: int = 1) -> dict:
    """Closed form against the search oracle; the core of ``certify``."""
    closed = operator_weight(s, t, d)
    est = oracle_operator_weight(d, s, t, budget, workers=workers)
    if math.isinf(closed):
        gap = 0.0 if est.diverging else _INF
    else:
        gap = relative_gap(closed, est.lower_bound)
    return {
        "closed_form": closed,
        "oracle": _oracle_result(est),
        "relative_gap": gap,
        "rtol": rtol,
        "passed": gap <= rtol,
    }


def _cmd_certify(args):
    s, t, d, inputs = _map_inputs(args)
    seed = _seed(args)
    inputs = _search_inputs(inputs, args)
    inputs["rtol"] = _fmt_real(args.rtol)
    result = certify(s, t, d, _budget(args, seed), rtol=args.rtol, workers=args.workers)
    return (0 if result["passed"] else 1), _report(
        "certify", inputs, result, provenance="both", case_label=_label(s, t, d), seed=seed,
    )


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hoelder-weights", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("weight", parents=[common], help="Hölder weight ||x||_p")
    p.add_argument("-p", required=True)
    p.add_argument("-x", required=True)
    p.set_defaults(func=_cmd_weight)

    def map_args(p):
        p.add_argument("-s", required=True)
        p.add_argument("-t", required=True)
        p.add_argument("-v", required=True)

    def search_args(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--samples", type=int, default=SearchBudget.samples)
        p.add_argument("--refinements", type=int, default=SearchBudget.refinement_iterations)
        p.add_argument("--threshold", type=float, default=SearchBudget.divergence_threshold)
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("opweight", parents=[common], help="closed-form operator weight of diag(v)")
    map_args(p)
    p.set_defaults(func=_cmd_opweight)

    p = sub.add_parser("extremal", parents=[common], help="extremizing vector or sequence term")
    map_args(p)
    p.add_argument("-k", type=int, default=10**6, help="sequence index (default 1e6)")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("verify-hoelder", parents=[common], help="generalized Hölder inequality for vectors")
    p.add_argument("-r", required=True)
    p.add_argument("-s", required=True)
    p.add_argument("-x", required=True)
    p.add_argument("-v", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reverse-hoelder", parents=[common], help="reverse Hölder inequality on a discrete space")
    p.add_argument("-r", required=True)
    p.add_argument("-s", required=True)
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    p.add_argument("--masses", required=True)
    p.set_defaults(func=_cmd_reverse)

    p = sub.add_parser("lp", parents=[common], help="weight of a step function on a discrete space")
    p.add_argument("--masses", required=True)
    p.add_argument("--values", required=True)
    p.add_argument("-p", required=True)
    p.set_defaults(func=_cmd_lp)

    p = sub.add_parser("oracle", parents=[common], help="search-based lower bound on the operator weight")
    map_args(p)
    search_args(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("certify", parents=[common], help="closed form versus search oracle")
    map_args(p)
    search_args(p)
    p.add_argument("--rtol", type=float, default=DEFAULT_CERTIFY_RTOL)
    p.set_defaults(func=_cmd_certify)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Join ``-p -inf`` into ``-p=-inf`` so values may start with a dash."""
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
        code, report = args.func(args)
    except _UsageError as exc:
        print(exc, file=stderr)
        return 2
    except InvalidInputError as exc:
        print(f"hoelder-weights: invalid input: {exc}", file=stderr)
        return 2
    stdout.write(serialize(report, args.format))
    return code


_FLAG_FOR = {
    "p": "-p", "x": "-x", "s": "-s", "t": "-t", "v": "-v", "r": "-r", "f": "-f", "g": "-g",
    "k": "-k", "masses": "--masses", "values": "--values", "samples": "--samples",
    "refinements": "--refinements", "threshold": "--threshold", "rtol": "--rtol",
}


def argv_from_report(report: dict) -> list[str]:
    """Rebuild the argument list that produced ``report``."""
    argv = [report["command"]]
    for key in sorted(report["inputs"]):
        argv += [_FLAG_FOR[key], str(report["inputs"][key])]
    if report.get("seed") is not None:
        argv += ["--seed", str(report["seed"])]
    return argv


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
