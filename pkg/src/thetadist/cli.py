"""Command-line front-end.

Subcommands: ``eval`` (curve tables), ``sample`` (variate streams),
``fit`` (estimators on a data file), ``study`` (the estimator comparison
experiment), and ``app`` (application scenarios).  Output is data only:
CSV with a header row, or JSON for ``fit``; plotting is left to external
tools.  Numbers are serialized with shortest round-trip precision so
identical invocations are byte-identical.

Exit codes: 0 success, 2 usage, 3 domain/data error, 4 convergence
failure, 5 I/O error.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import applications as apps
from . import approx, estimation
from .distribution import (
    ThetaParam,
    cdf,
    laplace_transform,
    mgf,
    pdf,
    quantile,
    spectrum_magnitude_sq,
    spectrum_phase,
)
from .errors import ConvergenceError, DomainError
from .sampling import SampleSet, SeriesSamplerConfig, sample_theta_inverse, sample_theta_series

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4
EXIT_IO = 5


def _fmt(v):
    """Shortest round-trip decimal for floats; plain str otherwise."""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_csv(path, header, rows):
    out, close = _open_out(path)
    try:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
    finally:
        if close:
            out.close()


def _grid(lo, hi, points, log):
    if points < 1:
        raise DomainError(f"--points must be >= 1, got {points}")
    if points == 1:
        return np.array([lo])
    if log:
        if lo <= 0 or hi <= 0:
            raise DomainError("--log requires positive --from/--to")
        return np.geomspace(lo, hi, points)
    return np.linspace(lo, hi, points)


def _default_seed():
    env = os.environ.get("THETADIST_SEED")
    return int(env) if env else 0


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


# ---------------------------------------------------------------- eval

def _cmd_eval(args):
    p = ThetaParam(args.m)
    xs = _grid(args.xfrom, args.xto, args.points, args.log)
    what = args.what

    if what == "spectrum":
        rows = [(float(w), spectrum_magnitude_sq(p, w), spectrum_phase(p, w)) for w in xs]
        _write_csv(args.output, ["omega", "magnitude_sq", "phase"], rows)
        return EXIT_OK

    if what == "quantile":
        if args.xfrom <= 0.0 or args.xto >= 1.0:
            raise DomainError("quantile grid must lie inside (0, 1)")
        rows = [(float(u), quantile(p, u)) for u in xs]
        _write_csv(args.output, ["u", "quantile"], rows)
        return EXIT_OK

    if what in ("laplace", "mgf"):
        fn = laplace_transform if what == "laplace" else mgf
        rows = []
        for v in xs:
            try:
                rows.append((float(v), fn(p, float(v))))
            except DomainError as exc:
                raise DomainError(f"at grid point {what}={v!r}: {exc}") from None
        _write_csv(args.output, [("alpha" if what == "laplace" else "t"), "value"], rows)
        return EXIT_OK

    # pdf / cdf tables with optional approximation columns
    exact_fn = cdf if what == "cdf" else pdf
    header = ["x", "exact"]
    lp = approx.lognormal_match(p) if args.with_lognormal else None
    if args.with_asymptotic:
        header.append("asymptotic")
    if args.with_lognormal:
        header.append("lognormal")
    boundary = p.m * math.pi**2 / 2.0
    rows = []
    for x in xs:
        x = float(x)
        row = [x, exact_fn(p, x)]
        if args.with_asymptotic:
            if 0.0 < x <= boundary:
                row.append(approx.asymptotic_cdf(p, x) if what == "cdf"
                           else approx.asymptotic_pdf(p, x))
            else:
                row.append("")  # outside the certified domain
        if args.with_lognormal:
            row.append(approx.lognormal_cdf(lp, x) if what == "cdf"
                       else approx.lognormal_pdf(lp, x))
        rows.append(row)
    _write_csv(args.output, header, rows)
    return EXIT_OK


# -------------------------------------------------------------- sample

def _cmd_sample(args):
    if args.n < 1:
        raise DomainError(f"--n must be >= 1, got {args.n}")
    p = ThetaParam(args.m)
    rng = np.random.default_rng(args.seed)
    if args.method == "series":
        cfg = SeriesSamplerConfig(truncation_k=args.k, tail_policy=args.tail)
        values = sample_theta_series(rng, p, cfg, size=args.n)
    else:
        values = sample_theta_inverse(rng, p, size=args.n)
    out, close = _open_out(args.output)
    try:
        for v in values:
            out.write(repr(float(v)) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


# ----------------------------------------------------------------- fit

def _read_values(path):
    if path == "-":
        lines = sys.stdin.readlines()
    else:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    values = []
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            v = float(text)
        except ValueError:
            raise DomainError(f"line {lineno}: cannot parse {text!r} as a number") from None
        if not (math.isfinite(v) and v > 0.0):
            raise DomainError(f"line {lineno}: value {v!r} is not a positive finite number")
        values.append(v)
    if not values:
        raise DomainError("input contains no values")
    return values


def _report_dict(rep):
    return {
        "method": rep.method,
        "m_hat": rep.m_hat,
        "u": rep.u_used,
        "iterations": rep.iterations,
        "residual": rep.residual,
    }


def _cmd_fit(args):
    sample = SampleSet(_read_values(args.input))
    reports = []
    if args.method in ("exact", "all"):
        reports.append(estimation.estimate_exact_cdf(sample, args.u))
    if args.method in ("asymptotic", "all"):
        reports.append(estimation.estimate_asymptotic(sample, args.u))
    if args.method in ("lognormal", "all"):
        reports.append(estimation.estimate_lognormal_mle(sample))
    doc = {"n": len(sample), "estimates": [_report_dict(r) for r in reports]}
    out, close = _open_out(args.output)
    try:
        json.dump(doc, out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


# --------------------------------------------------------------- study

def _cmd_study(args):
    cfg = estimation.StudyConfig(
        true_m=args.m,
        n_per_sample=args.n,
        replicates=args.replicates,
        seed=args.seed,
        u=args.u,
    )
    result = estimation.run_estimator_study(cfg)

    rows = []
    for method in estimation.METHODS:
        for j, v in enumerate(result.estimates[method]):
            rows.append((j, method, float(v)))
    _write_csv(args.estimates_out, ["replicate", "method", "m_hat"], rows)

    edges = result.bin_edges
    header = (["method", "count", "mean", "variance"]
              + [f"edge_{i}" for i in range(len(edges))]
              + [f"count_{i}" for i in range(len(edges) - 1)])
    srows = []
    for method in estimation.METHODS:
        est = result.estimates[method]
        n_ok = int(np.sum(np.isfinite(est)))
        srows.append([method, n_ok, result.mean[method], result.variance[method]]
                     + [float(e) for e in edges]
                     + [int(c) for c in result.counts[method]])
    _write_csv(args.summary_out, header, srows)
    if not args.quiet:
        print(f"study: {args.replicates} replicates written to "
              f"{args.estimates_out} and {args.summary_out}", file=sys.stderr)
    return EXIT_OK


# ----------------------------------------------------------------- app

def _load_config(path):
    cfg = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise DomainError(f"{path}:{lineno}: expected key=value, got {text!r}")
            key, _, val = text.partition("=")
            cfg[key.strip()] = val.strip()
    return cfg


def _scenario_value(args, config, key, cast=float, default=None):
    cli_val = getattr(args, key.replace("lambda", "lam"), None)
    if cli_val is not None:
        return cli_val
    if key in config:
        return cast(config[key])
    if default is not None:
        return default
    raise DomainError(f"missing scenario parameter {key!r} (flag or config file)")


def _cmd_app(args):
    config = _load_config(args.config) if args.config else {}

    if args.scenario == "rf":
        d = _scenario_value(args, config, "d")
        lam = _scenario_value(args, config, "lambda")
        m, mean, var = apps.field_summary(apps.interference_param(d, lam))
        _write_csv(args.output, ["m", "mean", "variance"], [(m, mean, var)])
        return EXIT_OK

    if args.scenario == "efield":
        d = _scenario_value(args, config, "d")
        lam = _scenario_value(args, config, "lambda")
        eps = _scenario_value(args, config, "epsilon0")
        m, mean, var = apps.field_summary(apps.electric_field_param(lam, d, eps))
        _write_csv(args.output, ["m", "mean", "variance"], [(m, mean, var)])
        return EXIT_OK

    if args.scenario == "gravity":
        d = _scenario_value(args, config, "d")
        lam = _scenario_value(args, config, "lambda")
        m, mean, var = apps.field_summary(apps.gravity_trade_param(lam, d))
        _write_csv(args.output, ["m", "mean", "variance"], [(m, mean, var)])
        return EXIT_OK

    if args.scenario == "points":
        kind = _scenario_value(args, config, "kind", cast=str, default="constant_spacing")
        kind = {"constant": "constant_spacing", "sqrt": "sqrt_spacing"}.get(kind, kind)
        d = _scenario_value(args, config, "d", default=1.0)
        t = getattr(args, "t", None)
        if t is None and "t" in config:
            t = int(config["t"])
        rng = np.random.default_rng(args.seed)
        pts = apps.place_points(rng, args.count, kind, d=d, extent_t=t)
        _write_csv(args.output, ["x", "y"], [(float(a), float(b)) for a, b in pts])
        return EXIT_OK

    # coverage
    d = _scenario_value(args, config, "d")
    lam = _scenario_value(args, config, "lambda")
    z = _scenario_value(args, config, "z")
    m_list = args.m if args.m is not None else config.get("m", None)
    if m_list is None:
        raise DomainError("missing scenario parameter 'm' (flag or config file)")
    ms = [float(v) for v in str(m_list).split(",") if v]
    ts = _grid(args.t_from, args.t_to, args.points, args.log)
    rows = []
    for m in ms:
        sc = apps.SinrScenario(z=z, m=m, d=d, lam=lam)
        for t in ts:
            rows.append((m, float(t), apps.coverage_probability(sc, float(t))))
    _write_csv(args.output, ["m", "t", "coverage"], rows)
    return EXIT_OK


# ---------------------------------------------------------------- main

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="thetadist",
        description="Jacobi theta distribution: evaluation, sampling, fitting, "
                    "estimator studies, and application scenarios.",
    )
    parser.add_argument("--quiet", action="store_true",
                        help="suppress diagnostics on stderr")
    # accepted before or after the subcommand; SUPPRESS keeps a trailing
    # occurrence from clobbering a leading one with its default
    quiet_parent = argparse.ArgumentParser(add_help=False)
    quiet_parent.add_argument("--quiet", action="store_true",
                              default=argparse.SUPPRESS,
                              help="suppress diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="tabulate distribution curves as CSV", parents=[quiet_parent])
    pe.add_argument("--m", type=float, required=True)
    pe.add_argument("--what", required=True,
                    choices=["pdf", "cdf", "quantile", "laplace", "mgf", "spectrum"])
    pe.add_argument("--from", dest="xfrom", type=float, required=True)
    pe.add_argument("--to", dest="xto", type=float, required=True)
    pe.add_argument("--points", type=_positive_int, default=200)
    pe.add_argument("--log", action="store_true", help="log-spaced grid")
    pe.add_argument("--with-lognormal", action="store_true")
    pe.add_argument("--with-asymptotic", action="store_true")
    pe.add_argument("--output", "-o", default=None)
    pe.set_defaults(func=_cmd_eval)

    ps = sub.add_parser("sample", help="draw variates, one per line", parents=[quiet_parent])
    ps.add_argument("--m", type=float, required=True)
    ps.add_argument("--n", type=_positive_int, required=True)
    ps.add_argument("--method", choices=["series", "inverse"], default="series")
    ps.add_argument("--seed", type=int, default=_default_seed())
    ps.add_argument("--k", type=_positive_int, default=10_000, help="series truncation")
    ps.add_argument("--tail", choices=["drop", "mean_compensate"],
                    default="mean_compensate")
    ps.add_argument("--output", "-o", default=None)
    ps.set_defaults(func=_cmd_sample)

    pf = sub.add_parser("fit", help="estimate m from a file of values (JSON out, parents=[quiet_parent])", parents=[quiet_parent])
    pf.add_argument("--input", "-i", required=True, help="file of values, '-' = stdin")
    pf.add_argument("--method", choices=["exact", "asymptotic", "lognormal", "all"],
                    default="all")
    pf.add_argument("--u", type=float, default=0.5, help="quantile level")
    pf.add_argument("--output", "-o", default=None)
    pf.set_defaults(func=_cmd_fit)

    pt = sub.add_parser("study", help="estimator comparison experiment (two CSVs, parents=[quiet_parent])", parents=[quiet_parent])
    pt.add_argument("--m", type=float, required=True)
    pt.add_argument("--n", type=_positive_int, required=True)
    pt.add_argument("--replicates", type=_positive_int, required=True)
    pt.add_argument("--seed", type=int, default=_default_seed())
    pt.add_argument("--u", type=float, default=0.5)
    pt.add_argument("--estimates-out", default="study_estimates.csv")
    pt.add_argument("--summary-out", default="study_summary.csv")
    pt.set_defaults(func=_cmd_study)

    pa = sub.add_parser("app", help="application scenarios (CSV out, parents=[quiet_parent])", parents=[quiet_parent])
    pa.add_argument("scenario", choices=["rf", "coverage", "points", "gravity", "efield"])
    pa.add_argument("--config", help="flat key=value scenario file")
    pa.add_argument("--d", type=float)
    pa.add_argument("--lambda", dest="lam", type=float)
    pa.add_argument("--z", type=float)
    pa.add_argument("--m", help="comma-separated list for coverage curves")
    pa.add_argument("--epsilon0", type=float)
    pa.add_argument("--count", type=_positive_int, default=1000)
    pa.add_argument("--kind", choices=["constant", "sqrt"])
    pa.add_argument("--t", type=int, help="sqrt-grid horizon")
    pa.add_argument("--t-from", dest="t_from", type=float, default=0.01)
    pa.add_argument("--t-to", dest="t_to", type=float, default=100.0)
    pa.add_argument("--points", type=_positive_int, default=50)
    pa.add_argument("--log", action="store_true")
    pa.add_argument("--seed", type=int, default=_default_seed())
    pa.add_argument("--output", "-o", default=None)
    pa.set_defaults(func=_cmd_app)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "app" and args.kind is not None:
        args.kind = {"constant": "constant_spacing", "sqrt": "sqrt_spacing"}[args.kind]
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"thetadist: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"thetadist: convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"thetadist: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
