"""CSV serialization of sweep results.

Fixed column order, RFC-4180-style rows (CRLF line endings, quoting only
when needed), floats rendered with six significant digits and a ``.``
decimal point regardless of locale, so identical runs produce identical
bytes on every platform.
"""

from __future__ import annotations

import csv
import io

from .simulator import ComparisonReport, MetricsReport

METRICS_COLUMNS = (
    "n", "mode", "latency_avg_ms", "latency_max_ms", "throughput_bps", "pdr",
    "control_overhead_bits", "queue_backlog", "effective_capacity_bps",
    "cpu_pct", "mem_pct", "net_pct", "storage_pct", "saturated",
)

COMPARISON_COLUMNS = (
    "n", "capex_reduction", "opex_reduction", "latency_reduction",
    "throughput_gain", "pdr_delta", "overhead_ratio", "capacity_ratio",
)


def format_value(value: object) -> str:
    """Render one CSV cell: bools as true/false, floats to 6 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def metrics_row(report: MetricsReport) -> list[str]:
    return [format_value(getattr(report, column)) for column in METRICS_COLUMNS]


def render_metrics_csv(pairs: list[tuple[MetricsReport, MetricsReport]]) -> str:
    """Metrics table: ascending n, traditional before sdn at each point."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(METRICS_COLUMNS)
    for trad, sdn in pairs:
        writer.writerow(metrics_row(trad))
        writer.writerow(metrics_row(sdn))
    return buffer.getvalue()


def render_comparison_csv(report: ComparisonReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(COMPARISON_COLUMNS)
    for row in report.rows:
        writer.writerow([format_value(getattr(row, column)) for column in COMPARISON_COLUMNS])
    return buffer.getvalue()


def render_single_metrics_csv(report: MetricsReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(METRICS_COLUMNS)
    writer.writerow(metrics_row(report))
    return buffer.getvalue()


def parse_metrics_csv(text: str) -> list[MetricsReport]:
    """Parse a metrics table back into reports (at serialized precision)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != METRICS_COLUMNS:
        raise ValueError(f"unexpected metrics header: {header}")
    reports = []
    for row in reader:
        if not row:
            continue
        values = dict(zip(METRICS_COLUMNS, row))
        reports.append(MetricsReport(
            n=int(values["n"]),
            mode=values["mode"],
            latency_avg_ms=float(values["latency_avg_ms"]),
            latency_max_ms=float(values["latency_max_ms"]),
            throughput_bps=float(values["throughput_bps"]),
            pdr=float(values["pdr"]),
            control_overhead_bits=float(values["control_overhead_bits"]),
            queue_backlog=float(values["queue_backlog"]),
            effective_capacity_bps=float(values["effective_capacity_bps"]),
            cpu_pct=float(values["cpu_pct"]),
            mem_pct=float(values["mem_pct"]),
            net_pct=float(values["net_pct"]),
            storage_pct=float(values["storage_pct"]),
            saturated=values["saturated"] == "true",
        ))
    return reports
