"""Command-line front end.

Exit codes: 0 success, 1 invalid configuration or input, 2 infeasible
scenario (no heads elected, LoS threshold unreachable), 3 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import re
import sys
from pathlib import Path
from typing import Sequence

from . import scenario as sc
from .clustering import clustering_report, devices_to_csv
from .config import RunConfig, parse_config
from .emit import fmt6, to_json
from .errors import A2GError, ConfigError, DomainError, InfeasibleError, ScenarioError
from .geometry import GroundPosition
from .svg import render_svg

EXIT_OK, EXIT_CONFIG, EXIT_INFEASIBLE, EXIT_IO = 0, 1, 2, 3

FIGURES = ("fig3", "fig4", "fig5", "fig6", "fig7")
FIGURE_TITLES = {
    "fig3": "LoS probability vs head-UAV distance",
    "fig4": "LoS probability vs head elevation angle",
    "fig5": "Head elevation angle vs head-UAV distance",
    "fig6": "UAV received power vs head elevation angle",
    "fig7": "Uplink QPSK bit error rate vs received power",
}


def figure_series(cfg: RunConfig, fig: str) -> list[sc.CurveSeries]:
    """Compute one figure's series from the configured grids."""
    g = cfg.sweeps[fig]
    env, lb, hs = cfg.environment, cfg.link_budget, cfg.uav.altitudes
    if fig == "fig3":
        return sc.sweep_plos_vs_distance(hs, g["d_max_m"], g["step_m"], env)
    if fig == "fig4":
        return sc.sweep_plos_vs_elevation(
            g["theta_min_deg"], g["theta_max_deg"], g["step_deg"], env, hs, g["d_max_m"]
        )
    if fig == "fig5":
        return sc.sweep_elevation_vs_distance(hs, None, g["d_max_m"], g["step_m"])
    if fig == "fig6":
        return sc.sweep_rx_power_vs_elevation(
            g["alphas"], g["altitude"], g["theta_min_deg"], g["theta_max_deg"], g["step_deg"], lb
        )
    if fig == "fig7":
        return [sc.sweep_ber_vs_rx_power(g["p_min_dbm"], g["p_max_dbm"], g["step_db"], lb)]
    raise ConfigError(f"unknown figure {fig!r}")


def series_csv(s: sc.CurveSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x_{s.x_name}", f"y_{s.y_name}"])
    w.writerows([fmt6(x), fmt6(y)] for x, y in s.points)
    return buf.getvalue()


def figure_csv(series: Sequence[sc.CurveSeries]) -> str:
    """All series of one figure in a single table, keyed by a ``series`` column."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    first = series[0]
    w.writerow(["series", f"x_{first.x_name}", f"y_{first.y_name}"])
    for s in series:
        w.writerows([s.label, fmt6(x), fmt6(y)] for x, y in s.points)
    return buf.getvalue()


def series_json(series: Sequence[sc.CurveSeries]) -> str:
    return to_json(
        [
            {
                "label": s.label,
                "x_name": s.x_name,
                "x_unit": s.x_unit,
                "y_name": s.y_name,
                "y_unit": s.y_unit,
                "points": [list(p) for p in s.points],
            }
            for s in series
        ]
    )


def _slug(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9.]+", "_", label).strip("_")


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8", newline="\n")
    return path


def _outdir(cfg: RunConfig) -> Path:
    out = Path(cfg.output.directory)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_resolved(cfg: RunConfig, out: Path) -> Path:
    return _write(out / "resolved_config.json", to_json(cfg.to_dict()))


def link_table(report: sc.LinkReport) -> str:
    ber = "0 (below numeric floor)" if report.ber == 0.0 else fmt6(report.ber)
    rows = [
        ("cluster head", str(report.ch_id)),
        ("slant distance [m]", fmt6(report.slant_distance_m)),
        ("elevation [deg]", fmt6(report.elevation_deg)),
        ("LoS probability", fmt6(report.p_los)),
        ("LoS feasible", "yes" if report.los_feasible else "no"),
        ("received power [dBm]", fmt6(report.rx_power_dbm)),
        ("min tx power [W]", fmt6(report.min_tx_power_w)),
        ("bit error rate", ber),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def cmd_link(cfg: RunConfig, x: float, y: float, fmt: str = "table") -> str:
    report = sc.evaluate_link(GroundPosition(x, y), cfg.scenario())
    return to_json(report.as_dict()) if fmt == "json" else link_table(report)


def cmd_sweep(cfg: RunConfig, fig: str, fmt: str = "csv", svg: bool = False) -> list[Path]:
    series = figure_series(cfg, fig)
    out = _outdir(cfg)
    written = []
    if fmt == "json":
        written.append(_write(out / f"{fig}.json", series_json(series)))
    else:
        for s in series:
            written.append(_write(out / f"{fig}_{_slug(s.label)}.csv", series_csv(s)))
    if svg:
        written.append(_write(out / f"{fig}.svg", render_svg(series, FIGURE_TITLES[fig])))
    return written


def cmd_figures(cfg: RunConfig) -> list[Path]:
    out = _outdir(cfg)
    written = []
    for fig in FIGURES:
        series = figure_series(cfg, fig)
        written.append(_write(out / f"{fig}.csv", figure_csv(series)))
        written.append(_write(out / f"{fig}.svg", render_svg(series, FIGURE_TITLES[fig])))
    written.append(_write_resolved(cfg, out))
    return written


def clusters_json(devices, clusters, uncovered, report) -> str:
    return to_json(
        {
            "clusters": [
                {"head_id": c.head_id, "member_ids": list(c.member_ids)} for c in clusters
            ],
            "uncovered": list(uncovered),
            "summary": report.as_dict(),
        }
    )


def summary_text(report) -> str:
    return (
        f"devices {report.total}: heads {report.heads}, members {report.members}, "
        f"uncovered {report.uncovered}; mean cluster size {fmt6(report.mean_cluster_size)}; "
        f"coverage {fmt6(report.coverage_fraction)}\n"
    )


def cmd_cluster(cfg: RunConfig) -> tuple[list[Path], str]:
    devices, clusters, uncovered = sc.cluster_devices(cfg.scenario())
    report = clustering_report(clusters, uncovered, devices)
    out = _outdir(cfg)
    written = [
        _write(out / "devices.csv", devices_to_csv(devices)),
        _write(out / "clusters.json", clusters_json(devices, clusters, uncovered, report)),
        _write_resolved(cfg, out),
    ]
    return written, summary_text(report)


def cmd_scenario(cfg: RunConfig) -> tuple[list[Path], str]:
    result = sc.run_scenario(cfg.scenario())
    out = _outdir(cfg)
    written = [
        _write(out / "report.json", to_json(result.as_dict())),
        _write(out / "devices.csv", devices_to_csv(result.devices)),
        _write_resolved(cfg, out),
    ]
    text = summary_text(result.clustering) + (
        f"min coverage altitude {fmt6(result.min_coverage_altitude_m)} m; "
        f"heads failing LoS threshold at {fmt6(cfg.uav.altitude)} m: {len(result.infeasible_heads)}\n"
    )
    return written, text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration (defaults if omitted)")
    common.add_argument("--out", help="output directory (overrides output.directory)")
    common.add_argument("--seed", type=int, help="clustering seed (overrides clustering.seed)")

    parser = argparse.ArgumentParser(prog="a2g-sim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("link", parents=[common], help="evaluate one head-to-UAV link")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("sweep", parents=[common], help="run one figure sweep")
    p.add_argument("figure", choices=FIGURES)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--svg", action="store_true", help="also write an SVG chart")

    sub.add_parser("cluster", parents=[common], help="generate devices and form clusters")
    sub.add_parser("scenario", parents=[common], help="full clustering + uplink report")
    sub.add_parser("figures", parents=[common], help="regenerate every figure (CSV + SVG)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = parse_config(args.config) if args.config else RunConfig()
        cfg = cfg.with_overrides(seed=args.seed, out=args.out)
        if args.command == "link":
            sys.stdout.write(cmd_link(cfg, args.x, args.y, args.format))
        elif args.command == "sweep":
            for path in cmd_sweep(cfg, args.figure, args.format, args.svg):
                print(path)
        elif args.command == "figures":
            for path in cmd_figures(cfg):
                print(path)
        else:
            run = cmd_cluster if args.command == "cluster" else cmd_scenario
            paths, text = run(cfg)
            sys.stdout.write(text)
            for path in paths:
                print(path)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ScenarioError, InfeasibleError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except A2GError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
