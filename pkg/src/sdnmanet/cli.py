"""Command-line front end.

Subcommands::

    sweep <config> --out <dir>                 full sweep: CSV reports + SVG charts
    simulate <config> --n <int> --mode <mode>  one scenario as a CSV row on stdout
    cost <config> --n <int>                    CAPEX/OPEX/crossover table on stdout
    capacity <config> --n <int>                per-mode capacity breakdown on stdout
    resources <config>                         utilization curves over the sweep range

``--seed`` overrides the config seed, ``--quiet`` silences progress notes.
Exit codes: 0 success, 1 config error, 2 runtime/model error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from . import capacity as cap
from . import econ
from . import resources as res
from .charts import line_chart
from .config import ConfigError, parse_config
from .report import (
    format_value,
    render_comparison_csv,
    render_metrics_csv,
    render_single_metrics_csv,
)
from .simulator import (
    MODES,
    ScenarioConfig,
    compare,
    evolve_topology,
    run_scenario,
    sweep,
)
from .topology import NoRouteError


def _load_config(args: argparse.Namespace) -> ScenarioConfig:
    cfg = parse_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    return cfg


def _note(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _csv_table(header: list[str], rows: list[list[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    _note(args, f"running sweep over n={cfg.sweep_points()} with {cfg.seeds_per_point} seeds per point")
    pairs = sweep(cfg)
    comparison = compare(pairs, cfg.costs, cfg.reference_n)
    os.makedirs(args.out, exist_ok=True)
    _write_text(os.path.join(args.out, "metrics.csv"), render_metrics_csv(pairs))
    _write_text(os.path.join(args.out, "comparison.csv"), render_comparison_csv(comparison))

    ns = [trad.n for trad, _ in pairs]

    def series(attr: str) -> list[tuple[str, list[tuple[float, float]]]]:
        return [
            ("traditional", [(float(t.n), getattr(t, attr)) for t, _ in pairs]),
            ("sdn", [(float(s.n), getattr(s, attr)) for _, s in pairs]),
        ]

    charts = {
        "latency.svg": line_chart(
            "Average latency vs network size", "nodes", "latency (ms)", series("latency_avg_ms")
        ),
        "capacity.svg": line_chart(
            "Effective capacity vs network size", "nodes", "capacity (bits/s)",
            series("effective_capacity_bps"),
        ),
        "pdr.svg": line_chart(
            "Packet delivery ratio vs network size", "nodes", "PDR", series("pdr")
        ),
        "queue.svg": line_chart(
            "Controller queue backlog vs network size", "nodes", "pending requests",
            series("queue_backlog"),
        ),
        "utilization.svg": line_chart(
            "Controller resource utilization (SDN)", "nodes", "utilization (%)",
            [
                (kind, [(float(s.n), getattr(s, attr)) for _, s in pairs])
                for kind, attr in (
                    ("cpu", "cpu_pct"), ("memory", "mem_pct"),
                    ("network", "net_pct"), ("storage", "storage_pct"),
                )
            ],
        ),
    }
    for name, svg in charts.items():
        _write_text(os.path.join(args.out, name), svg)
    _note(args, f"wrote metrics.csv, comparison.csv, and {len(charts)} charts to {args.out}")
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    report = run_scenario(cfg, args.n, args.mode, cfg.seed)
    sys.stdout.write(render_single_metrics_csv(report))
    return 0


def _cmd_cost(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    n, costs = args.n, cfg.costs
    capex_trad = econ.capex_traditional(n, costs)
    capex_sdn = econ.capex_sdn(n, costs)
    hw_trad = n * costs.node_hw_traditional
    opex_trad = econ.opex_traditional(n, costs)
    opex_sdn = econ.opex_sdn(n, costs)
    crossover = econ.crossover_n(costs)
    rows: list[list[object]] = [
        ["capex_traditional", capex_trad],
        ["capex_hardware_traditional", hw_trad],
        ["capex_sdn", capex_sdn],
        ["opex_traditional", opex_trad],
        ["opex_sdn", opex_sdn],
        ["hardware_capex_reduction", 1.0 - capex_sdn / hw_trad],
        ["opex_reduction", 1.0 - opex_sdn / opex_trad],
        ["crossover_n", crossover if crossover is not None else "never"],
    ]
    sys.stdout.write(_csv_table(["metric", "value"], rows))
    return 0


def _cmd_capacity(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    topo = evolve_topology(cfg, args.n, cfg.seed)
    packets = cap.pairwise_packet_count(topo, cfg.mean_speed_mps(), cfg.overhead, cfg.sim_duration_s)
    rate = cap.overhead_bits(packets, cfg.overhead) / cfg.sim_duration_s
    caps = [node.capacity_bps for node in topo.nodes]
    breakdowns = {
        "traditional": cap.capacity_traditional(caps, cfg.overhead.flood_multiplier * rate),
        "sdn": cap.capacity_sdn(caps, cfg.controller_capacity_bps, rate),
    }
    rows = [
        [mode, b.node_sum, b.controller, b.overhead, b.effective, b.saturated]
        for mode, b in breakdowns.items()
    ]
    sys.stdout.write(_csv_table(
        ["mode", "node_sum_bps", "controller_bps", "overhead_bps", "effective_bps", "saturated"],
        rows,
    ))
    return 0


def _cmd_resources(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    rows = [
        [n] + [res.utilization(kind, n, cfg.resources) for kind in res.RESOURCE_KINDS]
        for n in cfg.sweep_points()
    ]
    sys.stdout.write(_csv_table(["n", "cpu_pct", "mem_pct", "net_pct", "storage_pct"], rows))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", help="scenario config file (key = value lines)")
    common.add_argument("--seed", type=int, default=None, help="override the config seed")
    common.add_argument("--quiet", action="store_true", help="suppress progress output")

    parser = argparse.ArgumentParser(
        prog="sdnmanet",
        description="Compare traditional and SDN-enabled MANET/IoT networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", parents=[common], help="run the full sweep and write reports")
    p_sweep.add_argument("--out", required=True, help="output directory")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_sim = sub.add_parser("simulate", parents=[common], help="one scenario as a CSV row")
    p_sim.add_argument("--n", type=int, required=True, help="node count")
    p_sim.add_argument("--mode", choices=MODES, required=True)
    p_sim.set_defaults(func=_cmd_simulate)

    p_cost = sub.add_parser("cost", parents=[common], help="CAPEX/OPEX/crossover table")
    p_cost.add_argument("--n", type=int, required=True, help="node count")
    p_cost.set_defaults(func=_cmd_cost)

    p_cap = sub.add_parser("capacity", parents=[common], help="capacity breakdown per mode")
    p_cap.add_argument("--n", type=int, required=True, help="node count")
    p_cap.set_defaults(func=_cmd_capacity)

    p_res = sub.add_parser("resources", parents=[common], help="utilization curves over the sweep")
    p_res.set_defaults(func=_cmd_resources)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, NoRouteError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
