"""Command-line pipeline: fit tails, tabulate extremes, bootstrap,
forecast, generate synthetic catalogs, cross-validate thresholds.

Every run writes into --out-dir: report.txt (human readable),
report.json (flat key/value record), the CSV data tables behind each
figure, the SVG figures themselves (unless --format csv), and
manifest.txt recording every flag and seed needed to reproduce the
outputs byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from datetime import date
from pathlib import Path

import numpy as np

from . import figures, kernels
from .catalog import (
    bin_events,
    day_number,
    filter_tail,
    load_catalog,
    write_catalog,
)
from .errors import TailcastError
from .lgcp import (
    McmcConfig,
    OuParams,
    forecast_counts,
    ou_moments,
    sample_posterior,
)
from .powerlaw import (
    PiecewiseModel,
    PowerLawModel,
    TailFit,
    bootstrap_fit,
    cv_select_xmin,
    exceedance_probability,
    extreme_tail_ks,
    fit_piecewise,
    ks_distance,
    likelihood_ratio_test,
    log_likelihood,
    mle_alpha,
    sample_max_quantile,
    select_xmin,
    tail_survival,
)
from .rng import substream
from .synth import SynthSpec, sample_power_law, synthetic_catalog

__all__ = ["main", "build_parser", "RunConfig"]

_VERSION = "0.1.0"


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: subcommand plus every flag after defaulting."""

    subcommand: str
    out_dir: Path
    fmt: str
    seed: int
    options: tuple[tuple[str, str], ...]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        skip = {"func", "command", "out_dir", "format", "seed"}
        opts = tuple(
            (k, repr(v) if isinstance(v, float) else str(v))
            for k, v in sorted(vars(args).items())
            if k not in skip
        )
        return cls(
            subcommand=args.command,
            out_dir=Path(args.out_dir),
            fmt=args.format,
            seed=args.seed,
            options=opts,
        )


def _fmt_cell(v) -> str:
    """CSV cell: blanks for missing, shortest round-trip repr for floats."""
    if v is None:
        return ""
    if isinstance(v, float):  # np.float64 included
        return "" if math.isnan(v) else repr(float(v))
    return str(v)


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt_cell(v) for v in row])


def _json_default(v):
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    raise TypeError(f"not JSON serializable: {type(v)}")


def _write_report(out_dir: Path, lines: list[str], record: dict) -> None:
    with open(out_dir / "report.txt", "w") as fh:
        fh.write("\n".join(lines) + "\n")
    with open(out_dir / "report.json", "w") as fh:
        json.dump(record, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def _write_manifest(config: RunConfig) -> None:
    lines = [
        f"tool=tailcast {_VERSION}",
        f"backend={kernels.BACKEND}",
        f"numpy={np.__version__}",
        f"command={config.subcommand}",
        f"format={config.fmt}",
        f"seed={config.seed}",
    ]
    lines += [f"{k}={v}" for k, v in config.options]
    with open(config.out_dir / "manifest.txt", "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _load_filtered(args) -> tuple[np.ndarray, list[str], object]:
    """Load a catalog, apply --weapon/--start/--end, return severities."""
    catalog, warn = load_catalog(args.catalog)
    window = None
    if args.start or args.end:
        t0 = day_number(date.fromisoformat(args.start)) if args.start else -math.inf
        t1 = day_number(date.fromisoformat(args.end)) if args.end else math.inf
        window = (t0, t1)
    catalog = filter_tail(catalog, 0.0, weapon=args.weapon, window=window)
    lines = [
        f"catalog: {args.catalog}",
        f"events loaded: {len(catalog)} (dropped rows: bad_date={warn.bad_date} "
        f"bad_severity={warn.bad_severity} missing_fields={warn.missing_fields})",
    ]
    return catalog.severities, lines, catalog


def _tail_fit_fixed(severities: np.ndarray, x_min: float) -> TailFit:
    tail = severities[severities >= x_min]
    model = PowerLawModel(alpha=mle_alpha(tail, x_min), x_min=x_min)
    return TailFit(
        model=model,
        ks_error=ks_distance(model, tail, x_min),
        n_tail=int(tail.size),
        log_lik=log_likelihood(model, tail),
    )


# ---------------------------------------------------------------- fit


def cmd_fit(args, out_dir: Path) -> tuple[dict, list[str]]:
    severities, lines, _ = _load_filtered(args)
    if args.xmin is not None:
        fit = _tail_fit_fixed(severities, args.xmin)
    else:
        fit = select_xmin(severities)
    model = fit.model
    x_min = model.x_min
    tail = np.sort(severities[severities >= x_min])

    exceed = exceedance_probability(model, fit.n_tail, args.x_target)
    s_start = max(float(np.quantile(tail, 1.0 - args.tail_fraction)), x_min)
    ext_single = extreme_tail_ks(model, tail, s_start)

    record = {
        "n_events": int(severities.size),
        "x_min": x_min,
        "alpha": model.alpha,
        "ks": fit.ks_error,
        "n_tail": fit.n_tail,
        "log_lik": fit.log_lik,
        "x_target": args.x_target,
        "exceedance_x_target": exceed,
        "extreme_ks_single": ext_single,
        "extreme_tail_start": s_start,
    }
    lines += [
        f"single power law: alpha={model.alpha:.4f} x_min={x_min:g} "
        f"(n_tail={fit.n_tail})",
        f"KS error: {fit.ks_error:.4f}",
        f"extreme-tail KS (x >= {s_start:g}): {ext_single:.4f}",
        f"P(sample max >= {args.x_target:g}) over {fit.n_tail} events: {exceed:.4f}",
    ]

    pw = None
    if args.x_break is not None:
        pw = fit_piecewise(tail, x_min, args.x_break)
        stat, p1 = likelihood_ratio_test(fit, pw, df=1)
        _, p2 = likelihood_ratio_test(fit, pw, df=2)
        ext_pw = extreme_tail_ks(pw.model, tail, s_start)
        record.update(
            {
                "x_break": args.x_break,
                "alpha1": pw.model.alpha1,
                "alpha2": pw.model.alpha2,
                "ks_piecewise": pw.ks_error,
                "n_upper": pw.n_upper,
                "lrt_stat": stat,
                "lrt_p_df1": p1,
                "lrt_p_df2": p2,
                "extreme_ks_piecewise": ext_pw,
            }
        )
        lines += [
            f"piecewise: alpha1={pw.model.alpha1:.4f} alpha2={pw.model.alpha2:.4f} "
            f"break={args.x_break:g} (events above break: {pw.n_upper})",
            f"KS error piecewise: {pw.ks_error:.4f} (single: {fit.ks_error:.4f})",
            f"extreme-tail KS piecewise: {ext_pw:.4f} (single: {ext_single:.4f})",
            f"LRT: stat={stat:.4f} p={p1:.4f} (df=1) / p={p2:.4f} (df=2)",
        ]

    # survival table: empirical P(X >= x) at each distinct tail value
    xs = np.unique(tail)
    first = np.searchsorted(tail, xs, side="left")
    emp = (tail.size - first) / tail.size
    single = tail_survival(model, xs)
    pw_col = tail_survival(pw.model, xs) if pw is not None else [None] * xs.size
    _write_csv(
        out_dir / "ccdf.csv",
        ["x", "empirical", "single", "piecewise"],
        zip(xs.tolist(), emp.tolist(), single.tolist(), pw_col),
    )
    if args.format != "csv":
        figures.ccdf_figure(out_dir / "ccdf.csv", out_dir / "ccdf.svg")
    return record, lines


# ----------------------------------------------------------- extremes


def cmd_extremes(args, out_dir: Path) -> tuple[dict, list[str]]:
    if args.alpha_max < args.alpha_min:
        raise ValueError("--alpha-max must be >= --alpha-min")
    if args.alpha_step <= 0:
        raise ValueError("--alpha-step must be > 0")
    n_steps = int(round((args.alpha_max - args.alpha_min) / args.alpha_step))
    alphas = args.alpha_min + args.alpha_step * np.arange(n_steps + 1)
    qs = (0.90, 0.95, 0.99)

    rows = []
    for k, a in enumerate(alphas):
        model = PowerLawModel(alpha=float(a), x_min=args.xmin)
        row = [float(a)]
        row += [sample_max_quantile(model, args.n, q) for q in qs]
        if args.mc:
            # max of n uniforms is U^(1/n); one draw per replicate
            rng = substream(args.seed, k)
            u = rng.random(args.mc) ** (1.0 / args.n)
            maxima = args.xmin * (1.0 - u) ** (1.0 / (1.0 - float(a)))
            row += [float(np.quantile(maxima, q)) for q in qs]
        else:
            row += [None, None, None]
        row.append(exceedance_probability(model, args.n, args.reference))
        row.append(args.reference)
        rows.append(row)

    header = ["alpha", "q90", "q95", "q99", "mc_q90", "mc_q95", "mc_q99",
              "exceed_reference", "reference"]
    _write_csv(out_dir / "percentiles.csv", header, rows)
    if args.format != "csv":
        figures.percentile_figure(out_dir / "percentiles.csv", out_dir / "percentiles.svg")

    lines = [
        f"sample-max percentiles for n={args.n}, x_min={args.xmin:g}",
        "alpha    q90          q95          q99          P(max >= ref)",
    ] + [
        f"{r[0]:.3f}  {r[1]:>11.1f}  {r[2]:>11.1f}  {r[3]:>11.1f}  {r[-2]:.4f}"
        for r in rows
    ]
    record = {
        "n": args.n,
        "x_min": args.xmin,
        "reference": args.reference,
        "alpha_min": float(alphas[0]),
        "alpha_max": float(alphas[-1]),
        "rows": len(rows),
        "mc_replicates": args.mc or 0,
    }
    return record, lines


# ---------------------------------------------------------- bootstrap


def cmd_bootstrap(args, out_dir: Path) -> tuple[dict, list[str]]:
    severities, lines, _ = _load_filtered(args)
    result = bootstrap_fit(severities, args.resamples, args.seed)
    alphas = result.alphas

    _write_csv(
        out_dir / "bootstrap.csv",
        ["x_min", "alpha"],
        zip(result.xmins.tolist(), alphas.tolist()),
    )
    counts, edges = np.histogram(alphas, bins=args.bins)
    _write_csv(
        out_dir / "bootstrap_hist.csv",
        ["bin_left", "bin_right", "count"],
        zip(edges[:-1].tolist(), edges[1:].tolist(), counts.tolist()),
    )
    if args.format != "csv":
        figures.histogram_figure(out_dir / "bootstrap_hist.csv", out_dir / "bootstrap.svg")

    record = {
        "n_resamples": result.n_resamples,
        "n_failures": result.n_failures,
        "alpha_mean": float(alphas.mean()),
        "alpha_q05": float(np.quantile(alphas, 0.05)),
        "alpha_q50": float(np.quantile(alphas, 0.50)),
        "alpha_q95": float(np.quantile(alphas, 0.95)),
    }
    lines += [
        f"bootstrap: {result.n_resamples} resamples, {result.n_failures} degenerate",
        f"alpha: mean={record['alpha_mean']:.4f} "
        f"[q05={record['alpha_q05']:.4f}, q95={record['alpha_q95']:.4f}]",
    ]
    for center, half in args.window:
        frac = float(np.mean(np.abs(alphas - center) <= half))
        record[f"fraction_alpha_{center:g}_pm_{half:g}"] = frac
        lines.append(f"fraction of draws with alpha in {center:g} +/- {half:g}: {frac:.4f}")
    return record, lines


# ----------------------------------------------------------- forecast


def cmd_forecast(args, out_dir: Path) -> tuple[dict, list[str]]:
    _, lines, catalog = _load_filtered(args)
    catalog = filter_tail(catalog, args.xmin)
    if len(catalog) == 0:
        raise ValueError(f"no events with severity >= {args.xmin:g}")
    counts = bin_events(catalog, args.dt)
    lines.append(
        f"binned {len(catalog)} events (severity >= {args.xmin:g}) into "
        f"{len(counts.counts)} bins of {args.dt:g} days"
    )

    config = McmcConfig(
        n_samples=args.samples,
        burn_in=args.burn_in,
        thin=args.thin,
        step_size_init=args.step,
        seed=args.seed,
    )
    draws = sample_posterior(counts, config)
    fc = forecast_counts(draws, args.horizon, args.sims_per_draw, seed=args.seed)

    params = draws.params_array
    names = ("omega", "mu", "sigma")
    record = {
        "n_bins": len(counts.counts),
        "dt": args.dt,
        "horizon": args.horizon,
        "path_acceptance": draws.path_acceptance,
        "step_size": draws.step_size,
        "forecast_mean": fc.mean,
        "forecast_q05": fc.quantile(0.05),
        "forecast_q10": fc.quantile(0.10),
        "forecast_q50": fc.quantile(0.50),
        "forecast_q90": fc.quantile(0.90),
        "forecast_q95": fc.quantile(0.95),
    }
    for j, name in enumerate(names):
        col = params[:, j]
        record[f"{name}_mean"] = float(col.mean())
        record[f"{name}_q05"] = float(np.quantile(col, 0.05))
        record[f"{name}_q95"] = float(np.quantile(col, 0.95))
        record[f"{name}_acceptance"] = draws.param_acceptance[j]
    lines += [
        f"posterior ({len(draws)} draws): "
        + " ".join(
            f"{n}={record[n + '_mean']:.4g} [{record[n + '_q05']:.4g}, "
            f"{record[n + '_q95']:.4g}]"
            for n in names
        ),
        f"path acceptance {draws.path_acceptance:.3f} (step {draws.step_size:.4g}); "
        f"param acceptance "
        + " ".join(f"{n}={a:.3f}" for n, a in zip(names, draws.param_acceptance)),
        f"forecast over {args.horizon:g} days: mean={fc.mean:.1f} "
        f"median={fc.quantile(0.5):.0f} [q05={fc.quantile(0.05):.0f}, "
        f"q95={fc.quantile(0.95):.0f}]",
        f"central 80% of forecast totals: [{fc.quantile(0.10):.0f}, "
        f"{fc.quantile(0.90):.0f}]",
    ]
    if args.count_range is not None:
        lo, hi = args.count_range
        p = fc.prob_range(lo, hi)
        record["prob_count_range"] = p
        record["count_range_lo"], record["count_range_hi"] = lo, hi
        lines.append(f"P({lo:g} <= total <= {hi:g}) = {p:.4f}")

    _write_csv(out_dir / "params.csv", list(names), params.tolist())
    paths = draws.paths_array
    _write_csv(
        out_dir / "paths.csv",
        [f"bin_{k}" for k in range(paths.shape[1])],
        [[format(v, ".10g") for v in row] for row in paths],
    )

    # intensity band over the observed window, then forecast trajectories
    lam = np.exp(paths)
    n_bins = paths.shape[1]
    n_fut = max(1, math.ceil(args.horizon / args.dt - 1e-12))
    traj_count = min(args.trajectories, len(draws))
    header = ["time_days", "observed", "post_mean", "lo90", "hi90"] + [
        f"traj_{i}" for i in range(traj_count)
    ]
    rows = []
    y = counts.counts_array
    for k in range(n_bins):
        rows.append(
            [k * args.dt, y[k] / args.dt, float(lam[:, k].mean()),
             float(np.quantile(lam[:, k], 0.05)), float(np.quantile(lam[:, k], 0.95))]
            + [None] * traj_count
        )
    trajs = np.empty((traj_count, n_fut))
    for i in range(traj_count):
        # 4-part stream key cannot collide with forecast's (seed, i, j)
        rng = substream(args.seed, i, 0, 0)
        p = OuParams(*params[i])
        x = float(paths[i, -1])
        for b in range(n_fut):
            m, v = ou_moments(x, p, args.dt)
            x = m + math.sqrt(v) * rng.standard_normal()
            trajs[i, b] = math.exp(x)
    for b in range(n_fut):
        rows.append(
            [(n_bins + b) * args.dt, None, None, None, None]
            + [float(trajs[i, b]) for i in range(traj_count)]
        )
    _write_csv(out_dir / "intensity.csv", header, rows)

    counts_hist, edges = np.histogram(fc.counts, bins=args.bins)
    freq = counts_hist / fc.counts.size
    _write_csv(
        out_dir / "forecast_hist.csv",
        ["count", "frequency"],
        zip(edges[:-1].tolist(), freq.tolist()),
    )
    if args.format != "csv":
        figures.intensity_figure(
            out_dir / "intensity.csv", out_dir / "forecast_hist.csv",
            out_dir / "intensity.svg",
        )
    return record, lines


# -------------------------------------------------------------- synth


def cmd_synth(args, out_dir: Path) -> tuple[dict, list[str]]:
    if args.kind == "power-law":
        model = PowerLawModel(alpha=args.alpha, x_min=args.xmin)
    elif args.kind == "piecewise":
        model = PiecewiseModel(
            alpha1=args.alpha1, alpha2=args.alpha2,
            x_min=args.xmin, x_break=args.x_break,
        )
    else:
        model = OuParams(omega=args.omega, mu=args.mu, sigma=args.sigma)
    spec = SynthSpec(kind=args.kind, model=model, n=args.n, seed=args.seed, dt=args.dt)
    catalog = synthetic_catalog(spec)
    write_catalog(catalog, out_dir / "catalog.csv")
    record = {
        "kind": args.kind,
        "n": args.n,
        "dt": args.dt,
        "n_events": len(catalog),
        "seed": args.seed,
        **{k: v for k, v in vars(model).items()},
    }
    lines = [
        f"synthetic {args.kind} catalog: {len(catalog)} events -> catalog.csv",
        f"model: {model}",
    ]
    return record, lines


# ------------------------------------------------------------ cv-xmin


def cmd_cv_xmin(args, out_dir: Path) -> tuple[dict, list[str]]:
    severities, lines, _ = _load_filtered(args)
    fit, scores = cv_select_xmin(
        severities,
        k_folds=args.folds,
        x_tail_fraction=args.tail_fraction,
        seed=args.seed,
        return_scores=True,
    )
    _write_csv(
        out_dir / "cv.csv",
        ["x_min", "mean_extreme_ks", "se"],
        scores.tolist(),
    )
    record = {
        "x_min": fit.model.x_min,
        "alpha": fit.model.alpha,
        "ks": fit.ks_error,
        "n_tail": fit.n_tail,
        "k_folds": args.folds,
        "x_tail_fraction": args.tail_fraction,
        "candidates_scored": int(scores.shape[0]),
    }
    lines += [
        f"cross-validated threshold ({args.folds} folds, extreme fraction "
        f"{args.tail_fraction:g}): x_min={fit.model.x_min:g}",
        f"refit on full sample: alpha={fit.model.alpha:.4f} n_tail={fit.n_tail} "
        f"KS={fit.ks_error:.4f}",
    ]
    return record, lines


# ----------------------------------------------------------- plumbing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--out-dir", default=".", help="output directory (default .)")
    common.add_argument(
        "--format", choices=("csv", "svg", "both"), default="both",
        help="emit data tables, figures, or both (default both)",
    )

    catalog_flags = argparse.ArgumentParser(add_help=False)
    catalog_flags.add_argument("catalog", help="event catalog CSV")
    catalog_flags.add_argument("--weapon", default=None, help="keep one weapon category")
    catalog_flags.add_argument("--start", default=None, help="window start YYYY-MM-DD")
    catalog_flags.add_argument("--end", default=None, help="window end YYYY-MM-DD")

    parser = argparse.ArgumentParser(
        prog="tailcast",
        description="Heavy-tail severity fitting and event-count forecasting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", parents=[common, catalog_flags],
                       help="fit power-law severity tails")
    p.add_argument("--xmin", type=float, default=None,
                   help="fix the threshold instead of scanning")
    p.add_argument("--break", dest="x_break", type=float, default=None,
                   help="also fit a piecewise model with this break point")
    p.add_argument("--x-target", type=float, default=2749.0,
                   help="severity for the exceedance report (default 2749)")
    p.add_argument("--tail-fraction", type=float, default=0.05,
                   help="extreme-tail fraction for the KS diagnostic (default 0.05)")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("extremes", parents=[common],
                       help="tabulate sample-max percentiles over an alpha grid")
    p.add_argument("--alpha-min", type=float, required=True)
    p.add_argument("--alpha-max", type=float, required=True)
    p.add_argument("--alpha-step", type=float, default=0.1)
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--n", type=int, required=True, help="catalog size")
    p.add_argument("--reference", type=float, default=2749.0,
                   help="reference severity line (default 2749)")
    p.add_argument("--mc", type=int, default=None,
                   help="add Monte Carlo columns with this many replicates")
    p.set_defaults(func=cmd_extremes)

    p = sub.add_parser("bootstrap", parents=[common, catalog_flags],
                       help="bootstrap the joint threshold/exponent fit")
    p.add_argument("--resamples", type=int, default=1000)
    p.add_argument("--bins", type=int, default=40, help="histogram bins (default 40)")
    p.add_argument("--window", type=float, nargs=2, action="append",
                   metavar=("CENTER", "HALFWIDTH"), default=None,
                   help="report fraction of draws with alpha in CENTER +/- HALFWIDTH "
                        "(repeatable; default 2.2 0.05)")
    p.set_defaults(func=cmd_bootstrap)

    p = sub.add_parser("forecast", parents=[common, catalog_flags],
                       help="fit the count model and forecast future totals")
    p.add_argument("--horizon", type=float, required=True, help="forecast days")
    p.add_argument("--dt", type=float, default=30.0, help="bin width, days (default 30)")
    p.add_argument("--xmin", type=float, default=0.0,
                   help="count only events with severity >= xmin (default 0)")
    p.add_argument("--burn-in", type=int, default=5000)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--thin", type=int, default=5)
    p.add_argument("--step", type=float, default=0.1, help="initial Langevin step")
    p.add_argument("--sims-per-draw", type=int, default=10)
    p.add_argument("--trajectories", type=int, default=5,
                   help="forecast sample paths drawn in the figure (default 5)")
    p.add_argument("--bins", type=int, default=40, help="histogram bins (default 40)")
    p.add_argument("--count-range", type=float, nargs=2, metavar=("LO", "HI"),
                   default=None, help="report P(LO <= forecast total <= HI)")
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("synth", parents=[common],
                       help="generate a synthetic catalog CSV")
    p.add_argument("--kind", choices=("power-law", "piecewise", "lgcp"), required=True)
    p.add_argument("--n", type=int, required=True,
                   help="number of events (power-law/piecewise) or bins (lgcp)")
    p.add_argument("--alpha", type=float, default=2.4)
    p.add_argument("--alpha1", type=float, default=2.0)
    p.add_argument("--alpha2", type=float, default=3.0)
    p.add_argument("--xmin", type=float, default=10.0)
    p.add_argument("--break", dest="x_break", type=float, default=80.0)
    p.add_argument("--omega", type=float, default=1.0 / 180.0)
    p.add_argument("--mu", type=float, default=math.log(0.1))
    p.add_argument("--sigma", type=float, default=0.08)
    p.add_argument("--dt", type=float, default=30.0)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("cv-xmin", parents=[common, catalog_flags],
                       help="cross-validated threshold selection")
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--tail-fraction", type=float, default=0.05)
    p.set_defaults(func=cmd_cv_xmin)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "window", None) is None and args.command == "bootstrap":
        args.window = [(2.2, 0.05)]
    config = RunConfig.from_args(args)
    try:
        config.out_dir.mkdir(parents=True, exist_ok=True)
        record, lines = args.func(args, config.out_dir)
        _write_report(config.out_dir, lines, record)
        _write_manifest(config)
    except (TailcastError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
