"""Deterministic comparison of traditional and SDN-enabled MANET/IoT networks.

Library modules map one-to-one onto the model families: ``topology``
(graphs and mobility), ``routing`` (path cost and latency), ``controller``
(request queueing), ``capacity`` (overhead and effective capacity),
``econ`` (capex/opex/risk), ``resources`` (utilization curves), and
``simulator`` (the sweep harness). The ``sdnmanet`` command drives sweeps
and writes CSV reports plus SVG charts.
"""

from .simulator import (
    ComparisonReport,
    ComparisonRow,
    MetricsReport,
    ScenarioConfig,
    compare,
    run_scenario,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "ComparisonRow",
    "MetricsReport",
    "ScenarioConfig",
    "compare",
    "run_scenario",
    "sweep",
    "__version__",
]
