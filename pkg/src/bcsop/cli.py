"""Command-line front-end: ``python3 -m bcsop <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (the error code and message
go to stderr as JSON) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import BCSOPError
from .identify import LogDerivSpec, params_from_logderiv, params_from_recurrence, parse_cn_template
from .ortho import gram_report, total_mass
from .params import TAGS, ParamVector, SubclassTag, subclass_vector, validate_params
from .poly import eval_hypergeometric, eval_recurrence, explicit_poly, monic_poly, recurrence_coefficients
from .quadrature import gauss_rule
from .weights import Transform, weight_closed_form

__all__ = ["CommandRequest", "run", "main", "SUBCOMMANDS"]

SUBCOMMANDS = (
    "eval",
    "coeffs",
    "recurrence",
    "weight",
    "identify-weight",
    "identify-recurrence",
    "orthocheck",
    "quadrature",
    "tabulate",
)
DEFAULT_TOLERANCE = 1e-10
_NEEDS_PARAMS = {"eval", "coeffs", "recurrence", "weight", "orthocheck", "quadrature", "tabulate"}


class UsageError(ValueError):
    pass


@dataclass
class CommandRequest:
    subcommand: str
    params: ParamVector | SubclassTag | None = None
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.subcommand in _NEEDS_PARAMS and self.params is None:
            raise UsageError(f"{self.subcommand} needs --params or --subclass")

    def vector(self):
        if isinstance(self.params, SubclassTag):
            return subclass_vector(self.params)
        return self.params


def tolerance_from_env():
    raw = os.environ.get("BCSOP_TOLERANCE")
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"BCSOP_TOLERANCE is not a number: {raw!r}") from None
    if not (math.isfinite(tol) and tol > 0):
        raise UsageError("BCSOP_TOLERANCE must be positive and finite")
    return tol


def _finite(x):
    return None if isinstance(x, float) and not math.isfinite(x) else x


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        return _clean(obj.item())
    return _finite(obj)


def dumps(payload):
    """Deterministic JSON: sorted keys, shortest round-trip floats, no NaN."""
    return json.dumps(_clean(payload), sort_keys=True, allow_nan=False) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{c:.17g}" if isinstance(c, float) else c for c in row])
    return buf.getvalue()


def _params_json(req):
    v = req.vector()
    out = {"vector": v.to_json()}
    if isinstance(req.params, SubclassTag):
        out["subclass"] = req.params.to_json()
    return out


def _poly(v, n, monic):
    return monic_poly(v, n) if monic else explicit_poly(v, n)


def _cmd_eval(req, fmt):
    v, o = req.vector(), req.options
    n, xs, method, monic = o["n"], o["x"], o.get("method", "explicit"), o.get("monic", True)
    if method == "explicit":
        P = _poly(v, n, monic)
        values = [float(P(x)) for x in xs]
    else:
        if not monic:
            raise UsageError(f"method {method} evaluates the monic polynomial only")
        fn = eval_recurrence if method == "recurrence" else eval_hypergeometric
        validate_params(v)
        values = [float(fn(v, n, x)) for x in xs]
    if fmt == "csv":
        return _csv(["x", "value"], zip(xs, values))
    payload = {"n": n, "monic": monic, "method": method, "x": xs, "values": values}
    if len(xs) == 1:
        payload["value"] = values[0]
    return dumps({**_params_json(req), **payload})


def _cmd_coeffs(req, fmt):
    o = req.options
    P = _poly(req.vector(), o["n"], o.get("monic", True))
    if fmt == "csv":
        return _csv(["power", "coefficient"], [(P.n - 2 * k, c) for k, c in enumerate(P.coeffs)])
    return dumps({**_params_json(req), "polynomial": P.to_json()})


def _cmd_recurrence(req, fmt):
    n_max = req.options["n"]
    cs = recurrence_coefficients(req.vector(), n_max)
    if fmt == "csv":
        return _csv(["n", "C_n"], [(k, c) for k, c in enumerate(cs, start=1)])
    return dumps({**_params_json(req), "C": cs})


def _cmd_weight(req, fmt):
    spec = weight_closed_form(req.vector(), req.options.get("transform"))
    payload = {"weight": spec.to_json(), "formula": spec.formula(), "support": spec.support_label()}
    try:
        payload["mass"] = total_mass(spec)
    except BCSOPError as exc:
        payload["mass"] = None
        payload["mass_error"] = exc.code
    if fmt == "csv":
        return _csv(["field", "value"], [(k, payload[k]) for k in ("formula", "support", "mass")])
    return dumps({**_params_json(req), **payload})


def _identified(v, fmt, extra=None):
    canon = v.canonical()
    if fmt == "csv":
        return _csv(["p", "q", "r", "s"], [v.as_tuple()])
    spec = weight_closed_form(v)
    payload = {
        "vector": v.to_json(),
        "canonical": canon.to_json(),
        "weight": spec.to_json(),
        "formula": spec.formula(),
    }
    payload.update(extra or {})
    return dumps(payload)


def _cmd_identify_weight(req, fmt):
    spec = req.options["logderiv"]
    v = params_from_logderiv(spec, tol=req.options["tolerance"])
    return _identified(v, fmt)


def _cmd_identify_recurrence(req, fmt):
    o = req.options
    v = params_from_recurrence(o["cn"], probe_count=o.get("probe_count"), tol=max(o["tolerance"], 1e-12))
    return _identified(v, fmt)


def _cmd_orthocheck(req, fmt):
    o = req.options
    report = gram_report(req.vector(), o["N"], transform=o.get("transform"))
    if fmt == "csv":
        return report.to_csv()
    out = report.to_json()
    out["tolerance"] = o["tolerance"]
    out["passed"] = report.passed(o["tolerance"])
    return dumps({**_params_json(req), "report": out})


def _cmd_quadrature(req, fmt):
    rule = gauss_rule(req.vector(), req.options["n"])
    if fmt == "csv":
        return rule.to_csv()
    return dumps({**_params_json(req), "rule": rule.to_json()})


def _cmd_tabulate(req, fmt):
    v, o = req.vector(), req.options
    xs = o["x"]
    n_max = o["n"]
    monic = o.get("monic", True)
    polys = [_poly(v, k, monic) for k in range(n_max + 1)]
    table = [[float(P(x)) for P in polys] for x in xs]
    if fmt == "csv":
        return _csv(["x"] + [f"S{k}" for k in range(n_max + 1)], [[x] + row for x, row in zip(xs, table)])
    return dumps({**_params_json(req), "monic": monic, "x": xs, "values": table})


_DISPATCH = {
    "eval": _cmd_eval,
    "coeffs": _cmd_coeffs,
    "recurrence": _cmd_recurrence,
    "weight": _cmd_weight,
    "identify-weight": _cmd_identify_weight,
    "identify-recurrence": _cmd_identify_recurrence,
    "orthocheck": _cmd_orthocheck,
    "quadrature": _cmd_quadrature,
    "tabulate": _cmd_tabulate,
}


def run(request):
    """Execute a request; returns ``(status, stdout_text, stderr_text)``."""
    fmt = request.options.get("format", "json")
    request.options.setdefault("tolerance", DEFAULT_TOLERANCE)
    try:
        text = _DISPATCH[request.subcommand](request, fmt)
    except BCSOPError as exc:
        return 1, "", dumps({"error": exc.code, "message": str(exc)})
    except ValueError as exc:
        # plain ValueErrors signal bad option values rather than domain failures
        return 2, "", f"usage error: {exc}\n"
    return 0, text, ""


def _float_list(text):
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not vals or not all(math.isfinite(x) for x in vals):
        raise argparse.ArgumentTypeError(f"expected finite numbers, got {text!r}")
    return vals


def _grid(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be start:stop:count")
    try:
        lo, hi, num = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi)) or num < 1:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    return np.linspace(lo, hi, num).tolist()


def _transform(text):
    vals = _float_list(text)
    if len(vals) != 2 or vals[0] == 0:
        raise argparse.ArgumentTypeError("transform must be w,v with w != 0")
    return Transform(*vals)


def _nonneg_int(text):
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return k


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bcsop", description="Symmetric orthogonal polynomials S_n(p,q,r,s;x)."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, params=True):
        if params:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--params", type=_float_list, help="p,q,r,s")
            g.add_argument("--subclass", help="named sub-class: " + ", ".join(sorted(TAGS)))
            p.add_argument("--a", type=float)
            p.add_argument("--b", type=float)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write to this file instead of stdout")
        p.add_argument("--tolerance", type=float, help="overrides BCSOP_TOLERANCE")

    p = sub.add_parser("eval", help="evaluate S̄_n (or S_n with --explicit)")
    common(p)
    p.add_argument("--n", type=_nonneg_int, required=True)
    xg = p.add_mutually_exclusive_group(required=True)
    xg.add_argument("--x", type=_float_list, help="comma-separated points")
    xg.add_argument("--x-grid", type=_grid, help="start:stop:count")
    p.add_argument("--method", choices=("explicit", "recurrence", "hypergeometric"), default="explicit")
    p.add_argument("--explicit", action="store_true", help="unnormalized S_n instead of monic")

    p = sub.add_parser("coeffs", help="coefficients of S̄_n")
    common(p)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--explicit", action="store_true")

    p = sub.add_parser("recurrence", help="C_1 .. C_n")
    common(p)
    p.add_argument("--n", type=_nonneg_int, required=True)

    p = sub.add_parser("weight", help="closed-form weight and its mass")
    common(p)
    p.add_argument("--transform", type=_transform, help="w,v with t = w x + v")

    p = sub.add_parser("identify-weight", help="parameters from W'/W")
    common(p, params=False)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec-file", help='JSON {"num": [...], "den": [...], "transform": ...}')
    src.add_argument("--num", type=_float_list, help="numerator, ascending coefficients")
    src.add_argument("--weight-poly", type=_float_list, help="polynomial weight, ascending coefficients")
    p.add_argument("--den", type=_float_list, help="denominator, ascending coefficients")
    p.add_argument("--transform", type=_transform, help="w,v with t = w x + v")

    p = sub.add_parser("identify-recurrence", help="parameters from C_1, C_2, ...")
    common(p, params=False)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cn-file", help="JSON array C_1 .. C_k")
    src.add_argument("--cn-expr", help="arithmetic expression in n, e.g. '-n/(4*n+2)'")
    p.add_argument("--probe-count", type=int)

    p = sub.add_parser("orthocheck", help="numerical Gram matrix against Favard norms")
    common(p)
    p.add_argument("--N", type=_nonneg_int, required=True)
    p.add_argument("--transform", type=_transform)

    p = sub.add_parser("quadrature", help="Gauss rule from the Jacobi matrix")
    common(p)
    p.add_argument("--n", type=_nonneg_int, required=True)

    p = sub.add_parser("tabulate", help="table of S̄_0 .. S̄_n on a grid")
    common(p)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--x-grid", type=_grid, required=True)
    p.add_argument("--explicit", action="store_true")
    return parser


def request_from_args(args):
    """Translate parsed arguments into a :class:`CommandRequest`."""
    d = vars(args)
    cmd = d["subcommand"]
    params = None
    if d.get("params") is not None:
        if len(d["params"]) != 4:
            raise UsageError("--params needs exactly four numbers p,q,r,s")
        if d.get("a") is not None or d.get("b") is not None:
            raise UsageError("--a/--b go with --subclass")
        params = ParamVector(*d["params"])
    elif d.get("subclass") is not None:
        try:
            params = SubclassTag(d["subclass"], d.get("a"), d.get("b"))
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    tol = d.get("tolerance")
    if tol is None:
        tol = tolerance_from_env()
    elif not (math.isfinite(tol) and tol > 0):
        raise UsageError("--tolerance must be positive and finite")
    opts = {"format": d.get("format", "json"), "tolerance": tol}
    for key in ("n", "N", "method", "probe_count", "transform"):
        if d.get(key) is not None:
            opts[key] = d[key]
    if "explicit" in d:
        opts["monic"] = not d["explicit"]
    xs = d.get("x") if d.get("x") is not None else d.get("x_grid")
    if xs is not None:
        opts["x"] = xs

    if cmd == "identify-weight":
        transform = d.get("transform")
        if d.get("spec_file"):
            with open(d["spec_file"]) as fh:
                spec = LogDerivSpec.from_json(json.load(fh))
            if transform is not None:
                spec = LogDerivSpec(spec.num, spec.den, transform)
        elif d.get("weight_poly"):
            spec = LogDerivSpec.from_polynomial_weight(d["weight_poly"], transform)
        else:
            if d.get("den") is None:
                raise UsageError("--num needs --den")
            spec = LogDerivSpec(d["num"], d["den"], transform)
        opts["logderiv"] = spec
    elif cmd == "identify-recurrence":
        if d.get("cn_file"):
            with open(d["cn_file"]) as fh:
                data = json.load(fh)
            if not isinstance(data, list) or not all(isinstance(c, (int, float)) for c in data):
                raise UsageError("--cn-file must hold a JSON array of numbers C_1 .. C_k")
            opts["cn"] = [float(c) for c in data]
        else:
            try:
                opts["cn"] = parse_cn_template(d["cn_expr"])
            except (SyntaxError, ValueError) as exc:
                raise UsageError(f"bad --cn-expr: {exc}") from None
    return CommandRequest(cmd, params, opts)


_VALUE_OPTIONS = {
    "--params", "--x", "--x-grid", "--num", "--den", "--weight-poly", "--transform", "--cn-expr",
}


def _attach_values(argv):
    # "--params -1,1,-3,2" would otherwise be read as an unknown flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        request = request_from_args(args)
    except UsageError as exc:
        parser.error(str(exc))
    except OSError as exc:
        parser.error(str(exc))
    status, out, err = run(request)
    if err:
        sys.stderr.write(err)
    if status == 0:
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
