"""Batch command-line front end emitting reproducible tables and scans.

Every output embeds the parsed run configuration and a format-version
string; reruns with an identical configuration are byte-identical (Monte
Carlo included, through the seed).  Big integers are serialized as decimal
strings, partitions as JSON integer arrays (CSV: "2+1").

Exit codes: 0 ok, 1 usage, 2 validation failure, 3 internal-consistency
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from .combinat import Partition, partitions_of
from .haar_mc import mc_bgw, mc_rhciz, rhciz_reduce
from .hurwitz import (
    InternalConsistencyError,
    build_disconnected,
    connected_table,
    simple_series_ratio_scan,
)
from .integrals import (
    EvalPoint,
    ModelParams,
    auto_d_max,
    bgw_character_eval,
    concentration_scan,
    qhciz_character_eval,
    qhciz_string_eval,
    rhciz_character_eval,
    string_coefficient,
    string_coefficient_square,
    truncation_bound,
)

FORMAT_VERSION = "qhciz-table-1"

USAGE_ERROR = 1
VALIDATION_ERROR = 2
INTERNAL_ERROR = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from exc


def _complex_pair(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex {text!r}") from exc
    raise argparse.ArgumentTypeError(f"bad complex {text!r}")


def _partition_arg(text: str) -> Partition:
    text = text.strip()
    try:
        if text in ("", "-", "0"):
            return Partition()
        return Partition(tuple(int(p) for p in text.split("+")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from exc


def _vector_arg(text: str) -> tuple[complex, ...]:
    try:
        return tuple(complex(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad vector {text!r}") from exc


def _pt_str(p: Partition) -> str:
    return "+".join(str(v) for v in p.parts) if p.parts else "-"


def _c_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _write(args, config: dict, rows: list[dict], columns: list[str], extra: dict):
    if args.format == "json":
        doc = {
            "format_version": FORMAT_VERSION,
            "config": config,
            **extra,
            "rows": rows,
        }
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"# format_version={FORMAT_VERSION}"]
        lines.append("# config=" + json.dumps(config, sort_keys=True))
        for key in sorted(extra):
            lines.append(f"# {key}={json.dumps(extra[key], sort_keys=True)}")
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(str(row[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args, fields: list[str]) -> dict:
    out = {"subcommand": args.cmd, "format": args.format}
    for field in fields:
        value = getattr(args, field)
        if isinstance(value, Fraction):
            value = str(value)
        elif isinstance(value, complex):
            value = _c_pair(value)
        elif isinstance(value, Partition):
            value = list(value.parts)
        elif isinstance(value, tuple):
            value = [str(v) for v in value]
        out[field] = value
    return out


# ---------------------------------------------------------------------------

def cmd_hurwitz(args) -> int:
    config = _config(args, ["dmax", "rmax", "connected"])
    rows = []
    if args.connected:
        for rec in connected_table(args.dmax, args.rmax):
            rows.append(
                {
                    "d": rec.d,
                    "alpha": _pt_str(rec.alpha) if args.format == "csv" else list(rec.alpha.parts),
                    "beta": _pt_str(rec.beta) if args.format == "csv" else list(rec.beta.parts),
                    "r": rec.r,
                    "s": rec.s,
                    "g": rec.g,
                    "count": str(rec.count),
                    "connected": True,
                }
            )
    else:
        series = build_disconnected(args.dmax, args.rmax)
        order = {
            d: {p.parts: i for i, p in enumerate(partitions_of(d))}
            for d in range(args.dmax + 1)
        }
        keys = sorted(
            (k for k, _ in series.items() if k.d > 0),
            key=lambda k: (k.d, order[k.d][k.alpha], order[k.d][k.beta], k.r, k.s),
        )
        for key in keys:
            w = series.coefficient(key) * (-1) ** key.r * math.factorial(key.d)
            rows.append(
                {
                    "d": key.d,
                    "alpha": _pt_str(Partition(key.alpha)) if args.format == "csv" else list(key.alpha),
                    "beta": _pt_str(Partition(key.beta)) if args.format == "csv" else list(key.beta),
                    "r": key.r,
                    "s": key.s,
                    "g": "",
                    "count": str(int(w)),
                    "connected": False,
                }
            )
    _write(args, config, rows, ["d", "alpha", "beta", "r", "s", "g", "count", "connected"], {})
    return 0


def cmd_string_coeff(args) -> int:
    config = _config(args, ["alpha", "beta", "q", "N", "square"])
    if args.alpha.size != args.beta.size:
        print("error: alpha and beta must have equal size", file=sys.stderr)
        return USAGE_ERROR
    fn = string_coefficient_square if args.square else string_coefficient
    value = fn(args.alpha, args.beta, args.q, args.N)
    rows = [
        {
            "N": args.N,
            "q": str(args.q),
            "alpha": _pt_str(args.alpha) if args.format == "csv" else list(args.alpha.parts),
            "beta": _pt_str(args.beta) if args.format == "csv" else list(args.beta.parts),
            "value": str(value),
        }
    ]
    _write(args, config, rows, ["N", "q", "alpha", "beta", "value"], {})
    return 0


def cmd_eval(args) -> int:
    config = _config(args, ["N", "q", "z", "dmax", "a", "b", "check_dual"])
    a = args.a if args.a is not None else (1.0,) * args.N
    b = args.b if args.b is not None else (1.0,) * args.N
    if len(a) != args.N or len(b) != args.N:
        print("error: a and b must have length N", file=sys.stderr)
        return USAGE_ERROR
    params = ModelParams(N=args.N, q=args.q, z=args.z, d_max=args.dmax)
    pt = EvalPoint(a, b)
    res = qhciz_character_eval(params, pt)
    row = {
        "N": args.N,
        "q": str(args.q),
        "z": _c_pair(args.z) if args.format == "json" else f"{args.z.real};{args.z.imag}",
        "value": _c_pair(res.value) if args.format == "json" else f"{res.value.real};{res.value.imag}",
        "tail": res.tail,
        "d_max": res.d_max,
    }
    extra = {}
    if args.check_dual:
        dual = qhciz_string_eval(params, pt)
        denom = max(abs(res.value), 1.0)
        rel = abs(res.value - dual.value) / denom
        extra["dual_relative_difference"] = rel
        extra["dual_ok"] = bool(rel <= 1e-9)
        if rel > 1e-9:
            _write(args, config, [row], list(row.keys()), extra)
            return VALIDATION_ERROR
    _write(args, config, [row], list(row.keys()), extra)
    return 0


def cmd_mc_validate(args) -> int:
    config = _config(args, ["case", "M", "N", "z", "n", "seed", "dmax"])
    matrix_rng = np.random.default_rng([args.seed, 17])
    M, N = args.M, args.N
    if M < N:
        print("error: need M >= N", file=sys.stderr)
        return USAGE_ERROR
    if args.case == "rhciz":
        scale = 2.0 * math.sqrt(M * N)
        A = (matrix_rng.standard_normal((M, N)) + 1j * matrix_rng.standard_normal((M, N))) / scale
        B = (matrix_rng.standard_normal((N, M)) + 1j * matrix_rng.standard_normal((N, M))) / scale
        C = (matrix_rng.standard_normal((N, M)) + 1j * matrix_rng.standard_normal((N, M))) / scale
        D = (matrix_rng.standard_normal((M, N)) + 1j * matrix_rng.standard_normal((M, N))) / scale
        est = mc_rhciz(A, B, C, D, args.z, args.n, args.seed)
        a, b = rhciz_reduce(A, B, C, D)
        series = rhciz_character_eval(M, N, args.z, a, b, d_max=args.dmax).value
    else:
        scale = 2.0 * N
        P = (matrix_rng.standard_normal((N, N)) + 1j * matrix_rng.standard_normal((N, N))) / scale
        Q = (matrix_rng.standard_normal((N, N)) + 1j * matrix_rng.standard_normal((N, N))) / scale
        est = mc_bgw(P, Q, args.z, N, args.n, args.seed)
        eigs = np.linalg.eigvals(P @ Q)
        series = bgw_character_eval(tuple(eigs), args.z, N, d_max=args.dmax).value
    zscore = abs(est.value - series) / est.stderr if est.stderr > 0 else 0.0
    row = {
        "case": args.case,
        "M": M,
        "N": N,
        "n": est.n_samples,
        "seed": est.seed,
        "mc": _c_pair(est.value) if args.format == "json" else f"{est.value.real};{est.value.imag}",
        "stderr": est.stderr,
        "series": _c_pair(series) if args.format == "json" else f"{series.real};{series.imag}",
        "zscore": zscore,
    }
    _write(args, config, [row], list(row.keys()), {"passed": bool(zscore <= 5.0)})
    return 0 if zscore <= 5.0 else VALIDATION_ERROR


def cmd_concentration(args) -> int:
    config = _config(args, ["k", "nmin", "nmax", "q", "z", "dcap"])
    if args.nmax < args.nmin:
        print("error: need nmax >= nmin", file=sys.stderr)
        return USAGE_ERROR
    n_values = list(range(args.nmin, args.nmax + 1))
    rows_raw, slope = concentration_scan(args.k, n_values, args.q, args.z, d_cap=args.dcap)
    rows = [
        {"N": N, "deviation": dev, "d_used": used} for (N, dev, used) in rows_raw
    ]
    _write(args, config, rows, ["N", "deviation", "d_used"], {"slope": slope})
    return 0


def cmd_radius_scan(args) -> int:
    config = _config(args, ["dmax", "genus"])
    rows = []
    for d, coeff, ratio in simple_series_ratio_scan(args.dmax, args.genus):
        rows.append(
            {
                "d": d,
                "coefficient": str(coeff),
                "ratio": "" if ratio is None else ratio,
            }
        )
    _write(args, config, rows, ["d", "coefficient", "ratio"], {"target_ratio": 13.5})
    return 0


def cmd_truncation_check(args) -> int:
    config = _config(args, ["t", "rho", "N", "samples", "seed"])
    t = float(args.t)
    rho = float(args.rho)
    u, v, bound = truncation_bound(t, rho, args.N)
    cut = int(t * args.N * args.N)
    rng = np.random.default_rng([args.seed, 23])
    full_d = max(auto_d_max(rho, args.N, tol=1e-18) + 4, cut + 4)
    violations = 0
    max_diff = 0.0
    rows = []
    for _ in range(args.samples):
        a = _disc_samples(rng, args.N)
        b = _disc_samples(rng, args.N)
        z = rho * _disc_samples(rng, 1)[0]
        pt = EvalPoint(a, b)
        full = qhciz_character_eval(
            ModelParams(N=args.N, q=args.q, z=z, d_max=full_d), pt
        ).value
        part = qhciz_character_eval(
            ModelParams(N=args.N, q=args.q, z=z, d_max=max(cut, 1)), pt
        ).value
        if cut == 0:
            part = 1 + 0j
        diff = abs(full - part)
        max_diff = max(max_diff, diff)
        if diff > bound:
            violations += 1
    rows.append(
        {
            "N": args.N,
            "t": t,
            "rho": rho,
            "samples": args.samples,
            "truncation_degree": cut,
            "max_diff": max_diff,
            "bound": bound,
            "violations": violations,
        }
    )
    _write(
        args,
        config,
        rows,
        ["N", "t", "rho", "samples", "truncation_degree", "max_diff", "bound", "violations"],
        {"u": u, "v": v},
    )
    return 0 if violations == 0 else VALIDATION_ERROR


def _disc_samples(rng, n: int) -> tuple[complex, ...]:
    radius = np.sqrt(rng.uniform(0, 1, n))
    angle = rng.uniform(0, 2 * np.pi, n)
    return tuple(complex(r * np.cos(t), r * np.sin(t)) for r, t in zip(radius, angle))


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="qhciz", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("hurwitz", help="monotone Hurwitz number tables")
    p.add_argument("--dmax", type=_positive_int, required=True)
    p.add_argument("--rmax", type=_nonneg_int, required=True)
    p.add_argument("--connected", type=lambda s: s.lower() != "false", default=True)
    common(p)
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("string-coeff", help="exact string coefficients")
    p.add_argument("--alpha", type=_partition_arg, required=True)
    p.add_argument("--beta", type=_partition_arg, required=True)
    p.add_argument("--q", type=_fraction, required=True)
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--square", action="store_true")
    common(p)
    p.set_defaults(func=cmd_string_coeff)

    p = sub.add_parser("eval", help="evaluate the partial sum at a point")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--q", type=_fraction, required=True)
    p.add_argument("--z", type=_complex_pair, required=True)
    p.add_argument("--dmax", type=_positive_int, default=None)
    p.add_argument("--a", type=_vector_arg, default=None)
    p.add_argument("--b", type=_vector_arg, default=None)
    p.add_argument("--check-dual", action="store_true", dest="check_dual")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mc-validate", help="Monte Carlo vs series cross-check")
    p.add_argument("--case", choices=["rhciz", "bgw"], required=True)
    p.add_argument("--M", type=_positive_int, required=True)
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--z", type=_complex_pair, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=_nonneg_int, required=True)
    p.add_argument("--dmax", type=_positive_int, default=None)
    common(p)
    p.set_defaults(func=cmd_mc_validate)

    p = sub.add_parser("concentration", help="deviation scan of the genus-normalized ratio")
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.add_argument("--nmin", type=_positive_int, required=True)
    p.add_argument("--nmax", type=_positive_int, required=True)
    p.add_argument("--q", type=_fraction, required=True)
    p.add_argument("--z", type=_complex_pair, required=True)
    p.add_argument("--dcap", type=_positive_int, default=None)
    common(p)
    p.set_defaults(func=cmd_concentration)

    p = sub.add_parser("radius-scan", help="simple-number coefficient ratios")
    p.add_argument("--dmax", type=_positive_int, required=True)
    p.add_argument("--genus", type=_nonneg_int, default=0)
    common(p)
    p.set_defaults(func=cmd_radius_scan)

    p = sub.add_parser("truncation-check", help="empirical strong-coupling bound check")
    p.add_argument("--t", type=_fraction, required=True)
    p.add_argument("--rho", type=_fraction, required=True)
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--q", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--samples", type=_positive_int, default=50)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    common(p)
    p.set_defaults(func=cmd_truncation_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return INTERNAL_ERROR
    except OverflowError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return VALIDATION_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
