"""SDN controller as a finite-capacity request server.

Two deliberately decoupled views of the same bottleneck:

* the request backlog follows literal queueing (a fluid bound plus a
  discrete-event M/D/1 trace), growing without limit once the aggregate
  event rate exceeds the service capacity;
* the reported request latency follows a saturating curve that rises with
  network size but asymptotically respects the configured threshold.

A FIFO queue in permanent overload would imply unbounded waits, so no
single model can both show the near-linear backlog growth and keep latency
under the threshold; the pair below reproduces both behaviors.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .rng import exp_interval

#: Fixed ratio between reported average and maximum request latency.
AVG_TO_MAX_LATENCY = 0.6

#: Sampling interval for queue traces, seconds.
TRACE_SAMPLE_S = 0.1


@dataclass(frozen=True)
class ControllerConfig:
    """Capacity and load parameters of the central controller."""

    capacity_mu: float = 10.0           # requests served per second
    event_rate_lambda: float = 20.0     # events per second per node
    latency_threshold_ms: float = 30.0  # acceptable request latency
    sim_duration_s: float = 30.0
    half_saturation_nodes: int = 40     # nodes at which latency reaches half the threshold

    def __post_init__(self) -> None:
        if self.capacity_mu <= 0:
            raise ValueError("capacity_mu must be positive")
        if self.event_rate_lambda < 0:
            raise ValueError("event_rate_lambda must be non-negative")
        if self.latency_threshold_ms <= 0:
            raise ValueError("latency_threshold_ms must be positive")
        if self.sim_duration_s <= 0:
            raise ValueError("sim_duration_s must be positive")
        if self.half_saturation_nodes <= 0:
            raise ValueError("half_saturation_nodes must be positive")


@dataclass(frozen=True)
class ControllerTrace:
    """Sampled queue history of one controller simulation."""

    times: tuple[float, ...]
    queue_sizes: tuple[int, ...]
    served_latencies_ms: tuple[float, ...]
    final_backlog: int


def fluid_backlog(n: int, cfg: ControllerConfig) -> float:
    """Deterministic backlog bound: excess arrival rate times duration."""
    if n < 0:
        raise ValueError("node count must be non-negative")
    excess = n * cfg.event_rate_lambda - cfg.capacity_mu
    return max(0.0, excess * cfg.sim_duration_s)


def simulate_queue(n: int, cfg: ControllerConfig, seed: int) -> ControllerTrace:
    """Discrete-event trace of the controller queue.

    Poisson arrivals at aggregate rate ``n * event_rate_lambda``,
    deterministic service at ``capacity_mu``, FIFO order; the queue length
    (requests arrived but not yet completed) is sampled every
    ``TRACE_SAMPLE_S`` seconds. Bit-reproducible for a given seed.
    """
    if n < 0:
        raise ValueError("node count must be non-negative")
    rng = random.Random(seed)
    horizon = cfg.sim_duration_s
    rate = n * cfg.event_rate_lambda
    arrivals: list[float] = []
    if rate > 0:
        t = exp_interval(rng, rate)
        while t <= horizon:
            arrivals.append(t)
            t += exp_interval(rng, rate)
    service = 1.0 / cfg.capacity_mu
    departures: list[float] = []
    latencies: list[float] = []
    prev_done = 0.0
    for a in arrivals:
        done = (a if a > prev_done else prev_done) + service
        prev_done = done
        if done <= horizon:
            departures.append(done)
            latencies.append((done - a) * 1000.0)

    samples = round(horizon / TRACE_SAMPLE_S)
    times: list[float] = []
    sizes: list[int] = []
    arrived = completed = 0
    for step in range(1, samples + 1):
        ts = step * TRACE_SAMPLE_S
        while arrived < len(arrivals) and arrivals[arrived] <= ts:
            arrived += 1
        while completed < len(departures) and departures[completed] <= ts:
            completed += 1
        times.append(ts)
        sizes.append(arrived - completed)
    final = sizes[-1] if sizes else 0
    return ControllerTrace(
        times=tuple(times),
        queue_sizes=tuple(sizes),
        served_latencies_ms=tuple(latencies),
        final_backlog=final,
    )


def max_latency_model(n: int, cfg: ControllerConfig) -> float:
    """Worst-case request latency in ms: rises with n, saturates below the
    threshold (``threshold * n / (n + half_saturation_nodes)``)."""
    if n < 0:
        raise ValueError("node count must be non-negative")
    return cfg.latency_threshold_ms * n / (n + cfg.half_saturation_nodes)


def avg_latency_model(n: int, cfg: ControllerConfig) -> float:
    """Average request latency in ms, a fixed fraction of the maximum."""
    return AVG_TO_MAX_LATENCY * max_latency_model(n, cfg)


def saturation_point(cfg: ControllerConfig) -> int | None:
    """Smallest node count whose aggregate event rate exceeds capacity.

    Returns ``None`` when the per-node event rate is zero (the controller
    never saturates). The capacity/rate quotient is snapped to the nearest
    integer before the strict comparison so that decimal-looking rates such
    as 0.1 behave like their exact values.
    """
    lam = cfg.event_rate_lambda
    if lam == 0:
        return None
    quotient = cfg.capacity_mu / lam
    nearest = round(quotient)
    if abs(quotient - nearest) <= 1e-9 * max(1.0, abs(quotient)):
        return int(nearest) + 1
    return math.ceil(quotient)
