"""Network graph model: generation, mobility, distances, paths, clustering.

Nodes live in a rectangular area and are linked by an Erdos-Renyi random
graph; every node carries a position, a velocity, a data-rate capacity, and
a random-waypoint target. All operations are pure (they return fresh
values) and deterministic given their seed, so concurrent sweep workers can
share nothing and still agree bit for bit.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field

from .rng import rand_index, uniform_in

# Floor applied to edge weights so coincident nodes cannot produce a
# zero-weight (hence invalid) link.
_MIN_EDGE_WEIGHT = 1e-9


class NoRouteError(Exception):
    """Destination not reachable from the source in the current graph."""


@dataclass(frozen=True)
class NodeState:
    """One node: where it is, how it moves, and how much it can carry."""

    position: tuple[float, float]  # meters
    velocity: tuple[float, float]  # meters/second, points at the waypoint
    capacity_bps: float            # bits/second
    waypoint: tuple[float, float]  # meters


@dataclass
class Topology:
    """Weighted undirected graph over mobile nodes.

    Edges are unordered pairs ``(a, b)`` with ``a < b``; weights default to
    the Euclidean distance between endpoints in meters.
    """

    nodes: list[NodeState]
    edges: tuple[tuple[int, int], ...]
    edge_weight: dict[tuple[int, int], float]
    area: tuple[float, float] = (1000.0, 1000.0)
    _adjacency: dict[int, tuple[int, ...]] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        n = len(self.nodes)
        neighbors: dict[int, list[int]] = {i: [] for i in range(n)}
        seen: set[tuple[int, int]] = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop on node {a}")
            if not (0 <= a < b < n):
                raise ValueError(f"edge ({a}, {b}) has invalid endpoints for n={n}")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
            if self.edge_weight.get((a, b), 0.0) <= 0.0:
                raise ValueError(f"edge ({a}, {b}) must have a positive weight")
            neighbors[a].append(b)
            neighbors[b].append(a)
        self._adjacency = {i: tuple(sorted(neighbors[i])) for i in range(n)}

    def neighbors(self, i: int) -> tuple[int, ...]:
        _check_node(self, i)
        return self._adjacency[i]


@dataclass(frozen=True)
class Clustering:
    """Geographic partition of nodes with one head per cluster."""

    assignments: dict[int, int]  # node -> cluster index
    heads: tuple[int, ...]       # heads[c] is the head node of cluster c


def _check_node(t: Topology, i: int) -> None:
    if not isinstance(i, int) or not 0 <= i < len(t.nodes):
        raise IndexError(f"node {i} not in topology of {len(t.nodes)} nodes")


def _euclid(p: tuple[float, float], q: tuple[float, float]) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def generate_erdos_renyi(
    n: int,
    p: float,
    seed: int,
    area: tuple[float, float] = (1000.0, 1000.0),
    node_capacity_bps: float = 15_000.0,
) -> Topology:
    """Build a G(n, p) graph with uniformly placed nodes.

    Each of the n(n-1)/2 unordered pairs becomes an edge independently with
    probability ``p``. Positions are uniform over ``area``; nodes start at
    rest with their waypoint on their own position, so the first mobility
    step draws fresh targets. Identical arguments give identical output.
    """
    if n < 1:
        raise ValueError("network must contain at least one node")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"link probability must be within [0, 1], got {p}")
    if node_capacity_bps <= 0.0:
        raise ValueError("node capacity must be positive")
    rng = random.Random(seed)
    nodes = []
    for _ in range(n):
        pos = (uniform_in(rng, 0.0, area[0]), uniform_in(rng, 0.0, area[1]))
        nodes.append(
            NodeState(position=pos, velocity=(0.0, 0.0),
                      capacity_bps=node_capacity_bps, waypoint=pos)
        )
    edges = []
    weights = {}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.append((a, b))
                weights[(a, b)] = max(
                    _euclid(nodes[a].position, nodes[b].position), _MIN_EDGE_WEIGHT
                )
    return Topology(nodes=nodes, edges=tuple(edges), edge_weight=weights, area=area)


def step_mobility(
    t: Topology,
    dt: float,
    speed_range: tuple[float, float],
    seed: int,
) -> Topology:
    """Advance every node by one random-waypoint step of ``dt`` seconds.

    A node moves toward its waypoint at its current speed; on arrival it
    draws a new waypoint uniformly in the area and a new speed uniformly in
    ``speed_range`` (the arrival consumes the remainder of the step). Edge
    weights are recomputed from the new positions.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    lo, hi = speed_range
    if not 0.0 <= lo <= hi:
        raise ValueError(f"speed range must satisfy 0 <= min <= max, got {speed_range}")
    rng = random.Random(seed)
    width, height = t.area
    moved: list[NodeState] = []
    for node in t.nodes:
        pos, vel, wp = node.position, node.velocity, node.waypoint
        speed = math.hypot(*vel)
        dist_to_wp = _euclid(pos, wp)
        if speed * dt >= dist_to_wp:
            # Arrived: land on the waypoint and pick the next leg.
            pos = wp
            wp = (uniform_in(rng, 0.0, width), uniform_in(rng, 0.0, height))
            speed = uniform_in(rng, lo, hi) if hi > lo else lo
            leg = _euclid(pos, wp)
            if speed > 0.0 and leg > 0.0:
                vel = ((wp[0] - pos[0]) / leg * speed, (wp[1] - pos[1]) / leg * speed)
            else:
                vel = (0.0, 0.0)
        else:
            pos = (pos[0] + vel[0] * dt, pos[1] + vel[1] * dt)
        pos = (min(max(pos[0], 0.0), width), min(max(pos[1], 0.0), height))
        moved.append(NodeState(position=pos, velocity=vel,
                               capacity_bps=node.capacity_bps, waypoint=wp))
    weights = {
        (a, b): max(_euclid(moved[a].position, moved[b].position), _MIN_EDGE_WEIGHT)
        for a, b in t.edges
    }
    return Topology(nodes=moved, edges=t.edges, edge_weight=weights, area=t.area)


def distance(t: Topology, a: int, b: int) -> float:
    """Euclidean distance in meters between nodes ``a`` and ``b``."""
    _check_node(t, a)
    _check_node(t, b)
    return _euclid(t.nodes[a].position, t.nodes[b].position)


def degree(t: Topology, i: int) -> int:
    """Number of links incident to node ``i``."""
    _check_node(t, i)
    return len(t._adjacency[i])


def shortest_path(
    t: Topology,
    src: int,
    dst: int,
    node_weight: dict[int, float],
) -> tuple[list[int], float]:
    """Minimum-cost path where cost is the sum of weight*degree over path nodes.

    The cost of a path is ``sum(node_weight[i] * degree(i))`` over every node
    on it, including both endpoints. Ties between equal-cost paths break
    toward the lexicographically smallest node sequence. Raises
    ``NoRouteError`` when ``dst`` cannot be reached.
    """
    _check_node(t, src)
    _check_node(t, dst)
    n = len(t.nodes)
    for i in range(n):
        if i not in node_weight:
            raise ValueError(f"node_weight missing node {i}")
        if node_weight[i] <= 0.0:
            raise ValueError(f"node_weight[{i}] must be positive")
    entry = [node_weight[i] * len(t._adjacency[i]) for i in range(n)]
    heap: list[tuple[float, tuple[int, ...]]] = [(entry[src], (src,))]
    settled: set[int] = set()
    while heap:
        cost, path = heapq.heappop(heap)
        u = path[-1]
        if u in settled:
            continue
        settled.add(u)
        if u == dst:
            return list(path), cost
        for v in t._adjacency[u]:
            if v not in settled:
                heapq.heappush(heap, (cost + entry[v], path + (v,)))
    raise NoRouteError(f"no route from {src} to {dst}")


def cluster(t: Topology, k: int, seed: int) -> Clustering:
    """Partition node positions into ``k`` geographic clusters.

    Lloyd-style k-means seeded with ``k`` distinct node positions; each
    cluster's head is its member nearest the final centroid. Deterministic
    given the seed.
    """
    n = len(t.nodes)
    if not 1 <= k <= n:
        raise ValueError(f"cluster count must be within [1, {n}], got {k}")
    rng = random.Random(seed)
    order = list(range(n))
    for j in range(k):  # partial Fisher-Yates for k distinct seeds
        swap = j + rand_index(rng, n - j)
        order[j], order[swap] = order[swap], order[j]
    positions = [node.position for node in t.nodes]
    centroids = [positions[order[j]] for j in range(k)]

    def nearest(pos: tuple[float, float]) -> int:
        best_c, best_d = 0, float("inf")
        for c, ctr in enumerate(centroids):
            d = (pos[0] - ctr[0]) ** 2 + (pos[1] - ctr[1]) ** 2
            if d < best_d:
                best_c, best_d = c, d
        return best_c

    assign = [nearest(pos) for pos in positions]
    for _ in range(100):
        for c in range(k):
            members = [i for i in range(n) if assign[i] == c]
            if members:
                centroids[c] = (
                    sum(positions[i][0] for i in members) / len(members),
                    sum(positions[i][1] for i in members) / len(members),
                )
        new_assign = [nearest(pos) for pos in positions]
        if new_assign == assign:
            break
        assign = new_assign

    # Repair any empty cluster by donating the farthest member of the
    # largest cluster, so every head exists inside its own cluster.
    for c in range(k):
        if not any(a == c for a in assign):
            sizes = [sum(1 for a in assign if a == d) for d in range(k)]
            donor = sizes.index(max(sizes))
            members = [i for i in range(n) if assign[i] == donor]
            far = max(
                members,
                key=lambda i: (_euclid(positions[i], centroids[donor]), -i),
            )
            assign[far] = c
            centroids[c] = positions[far]

    heads = []
    for c in range(k):
        members = [i for i in range(n) if assign[i] == c]
        heads.append(min(members, key=lambda i: (_euclid(positions[i], centroids[c]), i)))
    return Clustering(assignments={i: assign[i] for i in range(n)}, heads=tuple(heads))
