"""Control-message overhead and effective network capacity for both modes.

Overhead follows a pairwise model: every linked node pair contributes
control packets in proportion to its distance and the mean node speed.
Effective capacity is the node capacity sum (plus the controller's own
contribution in SDN mode) minus the overhead rate, clamped at zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .topology import Topology, distance


@dataclass(frozen=True)
class OverheadParams:
    """Pairwise control-traffic model parameters."""

    packet_size_bits: int = 512
    pair_coefficient: float = 0.001  # packets per (meter * m/s * second)
    flood_multiplier: float = 1.5    # traditional-mode flooding penalty

    def __post_init__(self) -> None:
        if self.packet_size_bits <= 0:
            raise ValueError("packet_size_bits must be positive")
        if self.pair_coefficient < 0 or self.flood_multiplier < 0:
            raise ValueError("coefficients must be non-negative")


@dataclass(frozen=True)
class CapacityGains:
    """Multiplicative uplift from hierarchical clustering and slicing.

    The network splits into a clustered share and a sliced share, each
    scaled by its own gain; defaults yield a 1.35x aggregate uplift.
    """

    clustered_share: float = 0.6
    clustered_gain: float = 1.25
    sliced_share: float = 0.4
    sliced_gain: float = 1.5


@dataclass(frozen=True)
class CapacityBreakdown:
    """Effective capacity and the terms it was computed from, bits/s."""

    node_sum: float
    controller: float
    overhead: float
    effective: float
    saturated: bool


def pairwise_packet_count(
    t: Topology,
    mean_speed: float,
    params: OverheadParams,
    window_s: float,
) -> int:
    """Control packets generated along existing links over ``window_s``.

    Each edge contributes ``round(coefficient * distance * mean_speed *
    window)`` packets (banker's rounding, like the built-in).
    """
    if window_s <= 0.0:
        raise ValueError("window must be positive")
    total = 0
    for a, b in t.edges:
        total += round(params.pair_coefficient * distance(t, a, b) * mean_speed * window_s)
    return total


def overhead_bits(packets: int, params: OverheadParams) -> float:
    """Total overhead: packet count times packet size."""
    if packets < 0:
        raise ValueError("packet count must be non-negative")
    return packets * params.packet_size_bits


def capacity_sdn(
    node_capacities: list[float],
    controller_capacity: float,
    overhead: float,
) -> CapacityBreakdown:
    """Node capacities plus the controller's contribution, minus overhead."""
    if controller_capacity < 0 or overhead < 0 or any(c < 0 for c in node_capacities):
        raise ValueError("capacities and overhead must be non-negative")
    node_sum = sum(node_capacities)
    raw = node_sum + controller_capacity - overhead
    return CapacityBreakdown(
        node_sum=node_sum,
        controller=controller_capacity,
        overhead=overhead,
        effective=max(0.0, raw),
        saturated=raw < 0.0,
    )


def capacity_traditional(
    node_capacities: list[float],
    flood_overhead: float,
) -> CapacityBreakdown:
    """Node capacities minus flooding overhead; no controller term."""
    if flood_overhead < 0 or any(c < 0 for c in node_capacities):
        raise ValueError("capacities and overhead must be non-negative")
    node_sum = sum(node_capacities)
    raw = node_sum - flood_overhead
    return CapacityBreakdown(
        node_sum=node_sum,
        controller=0.0,
        overhead=flood_overhead,
        effective=max(0.0, raw),
        saturated=raw < 0.0,
    )


def capacity_total(clustered: float, sliced: float) -> float:
    """Combined capacity of the clustered and sliced portions."""
    if clustered < 0 or sliced < 0:
        raise ValueError("capacities must be non-negative")
    return clustered + sliced


def clustered_sliced_capacity(baseline: float, gains: CapacityGains) -> float:
    """Capacity after management uplift: each share scaled by its gain."""
    if baseline < 0:
        raise ValueError("baseline capacity must be non-negative")
    clustered = baseline * gains.clustered_share * gains.clustered_gain
    sliced = baseline * gains.sliced_share * gains.sliced_gain
    return capacity_total(clustered, sliced)


def max_supported_nodes(
    mode: str,
    per_node_demand: float,
    params: OverheadParams,
    topology_generator: Callable[[int], Topology],
    mean_speed: float,
    controller_capacity: float = 0.0,
    n_max: int = 200,
) -> int:
    """Largest node count whose effective capacity still covers demand.

    Binary search over 1..n_max for the largest ``n`` with
    ``effective_capacity(n) >= n * per_node_demand``; returns 0 when even a
    single node cannot be served. ``topology_generator`` must return a
    deterministic topology for each ``n``.
    """
    if per_node_demand <= 0.0:
        raise ValueError("per-node demand must be positive")
    if mode not in ("traditional", "sdn"):
        raise ValueError(f"mode must be 'traditional' or 'sdn', got {mode!r}")

    def supportable(n: int) -> bool:
        t = topology_generator(n)
        packets = pairwise_packet_count(t, mean_speed, params, window_s=1.0)
        rate = overhead_bits(packets, params)
        caps = [node.capacity_bps for node in t.nodes]
        if mode == "sdn":
            breakdown = capacity_sdn(caps, controller_capacity, rate)
        else:
            breakdown = capacity_traditional(caps, params.flood_multiplier * rate)
        return breakdown.effective >= n * per_node_demand

    if not supportable(1):
        return 0
    lo, hi = 1, n_max
    while lo < hi:  # invariant: supportable(lo); search for the last True
        mid = (lo + hi + 1) // 2
        if supportable(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo
