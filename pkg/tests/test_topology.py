"""Graph generation, mobility, distance, degree, path, and clustering tests."""

import math
import random

import pytest

from sdnmanet.topology import (
    NodeState,
    NoRouteError,
    Topology,
    cluster,
    degree,
    distance,
    generate_erdos_renyi,
    shortest_path,
    step_mobility,
)


def brute_force_min_cost(t, src, dst, weights):
    """Independent oracle: enumerate every simple path by DFS."""
    best = None
    entry = {i: weights[i] * degree(t, i) for i in range(len(t.nodes))}

    def walk(node, visited, path, cost):
        nonlocal best
        if node == dst:
            if best is None or (cost, path) < best:
                best = (cost, tuple(path))
            return
        for nxt in t.neighbors(node):
            if nxt not in visited:
                visited.add(nxt)
                path.append(nxt)
                walk(nxt, visited, path, cost + entry[nxt])
                path.pop()
                visited.remove(nxt)

    walk(src, {src}, [src], entry[src])
    return best


def line_topology(weights=None):
    """A - B - C with unit edge weights at fixed positions."""
    nodes = [
        NodeState(position=(float(i), 0.0), velocity=(0.0, 0.0),
                  capacity_bps=1000.0, waypoint=(float(i), 0.0))
        for i in range(3)
    ]
    edges = ((0, 1), (1, 2))
    return Topology(nodes=nodes, edges=edges,
                    edge_weight={e: 1.0 for e in edges}, area=(10.0, 10.0))


def diamond_topology():
    """4-cycle A-B-C plus A-D-C; every node has degree 2."""
    nodes = [
        NodeState(position=(float(i), 0.0), velocity=(0.0, 0.0),
                  capacity_bps=1000.0, waypoint=(float(i), 0.0))
        for i in range(4)
    ]
    edges = ((0, 1), (0, 3), (1, 2), (2, 3))  # A=0, B=1, C=2, D=3
    return Topology(nodes=nodes, edges=edges,
                    edge_weight={e: 1.0 for e in edges}, area=(10.0, 10.0))


# ---------------------------------------------------------------- generation

def test_single_node_has_no_edges():
    assert generate_erdos_renyi(1, 0.5, seed=7).edges == ()


def test_full_probability_gives_complete_graph():
    t = generate_erdos_renyi(5, 1.0, seed=1)
    assert len(t.edges) == 10
    assert all(degree(t, i) == 4 for i in range(5))


def test_zero_probability_gives_empty_graph():
    assert generate_erdos_renyi(10, 0.0, seed=3).edges == ()


def test_generation_rejects_bad_arguments():
    with pytest.raises(ValueError):
        generate_erdos_renyi(0, 0.5, seed=1)
    with pytest.raises(ValueError):
        generate_erdos_renyi(5, -0.1, seed=1)
    with pytest.raises(ValueError):
        generate_erdos_renyi(5, 1.1, seed=1)


def test_edge_count_matches_binomial_statistics():
    # mean edges = p * n(n-1)/2 = 995 at n=200, p=0.05; the 100-seed sample
    # mean must sit within 3 standard errors.
    counts = [len(generate_erdos_renyi(200, 0.05, seed=s).edges) for s in range(100)]
    mean = sum(counts) / len(counts)
    stderr = math.sqrt(19_900 * 0.05 * 0.95 / len(counts))
    assert abs(mean - 995.0) <= 3 * stderr


def test_generation_is_deterministic():
    a = generate_erdos_renyi(60, 0.1, seed=123)
    b = generate_erdos_renyi(60, 0.1, seed=123)
    assert a == b
    c = generate_erdos_renyi(60, 0.1, seed=124)
    assert a != c


def test_positions_fall_inside_area():
    t = generate_erdos_renyi(50, 0.05, seed=9, area=(300.0, 200.0))
    for node in t.nodes:
        assert 0.0 <= node.position[0] <= 300.0
        assert 0.0 <= node.position[1] <= 200.0


def test_handshake_lemma_on_random_graphs():
    for s in range(20):
        t = generate_erdos_renyi(40, 0.15, seed=s)
        assert sum(degree(t, i) for i in range(40)) == 2 * len(t.edges)


# ------------------------------------------------------------------ mobility

def test_zero_speed_range_leaves_positions_unchanged():
    t = generate_erdos_renyi(20, 0.2, seed=5)
    stepped = step_mobility(t, 1.0, (0.0, 0.0), seed=11)
    assert [n.position for n in stepped.nodes] == [n.position for n in t.nodes]


def test_linear_motion_toward_waypoint():
    node = NodeState(position=(0.0, 0.0), velocity=(5.0, 0.0),
                     capacity_bps=1000.0, waypoint=(10.0, 0.0))
    t = Topology(nodes=[node], edges=(), edge_weight={}, area=(20.0, 20.0))
    stepped = step_mobility(t, 1.0, (1.0, 1.0), seed=2)
    assert stepped.nodes[0].position == (5.0, 0.0)


def test_mobility_preserves_nodes_and_bounds():
    t = generate_erdos_renyi(15, 0.2, seed=3, area=(100.0, 80.0))
    for step in range(1000):
        t = step_mobility(t, 1.0, (1.0, 10.0), seed=step)
    assert len(t.nodes) == 15
    for node in t.nodes:
        assert 0.0 <= node.position[0] <= 100.0
        assert 0.0 <= node.position[1] <= 80.0


def test_mobility_recomputes_edge_weights_from_distances():
    t = generate_erdos_renyi(12, 0.4, seed=8)
    stepped = step_mobility(t, 2.0, (1.0, 5.0), seed=21)
    for (a, b), w in stepped.edge_weight.items():
        assert w == pytest.approx(max(distance(stepped, a, b), 1e-9))


def test_mobility_rejects_bad_arguments():
    t = generate_erdos_renyi(3, 0.5, seed=1)
    with pytest.raises(ValueError):
        step_mobility(t, 0.0, (1.0, 2.0), seed=1)
    with pytest.raises(ValueError):
        step_mobility(t, 1.0, (3.0, 2.0), seed=1)


# ------------------------------------------------------------------ distance

def test_distance_345_triangle():
    nodes = [
        NodeState(position=(0.0, 0.0), velocity=(0.0, 0.0), capacity_bps=1.0, waypoint=(0.0, 0.0)),
        NodeState(position=(3.0, 4.0), velocity=(0.0, 0.0), capacity_bps=1.0, waypoint=(3.0, 4.0)),
    ]
    t = Topology(nodes=nodes, edges=(), edge_weight={}, area=(10.0, 10.0))
    assert distance(t, 0, 1) == 5.0
    assert distance(t, 1, 0) == 5.0
    assert distance(t, 0, 0) == 0.0


def test_distance_triangle_inequality():
    rng = random.Random(99)
    t = generate_erdos_renyi(30, 0.1, seed=77)
    for _ in range(200):
        a, b, c = rng.sample(range(30), 3)
        assert distance(t, a, c) <= distance(t, a, b) + distance(t, b, c) + 1e-9


def test_distance_invalid_node_raises():
    t = generate_erdos_renyi(3, 0.5, seed=1)
    with pytest.raises(IndexError):
        distance(t, 0, 3)
    with pytest.raises(IndexError):
        degree(t, -1)


# ---------------------------------------------------------------- path costs

def test_isolated_node_degree_zero():
    t = generate_erdos_renyi(4, 0.0, seed=1)
    assert degree(t, 2) == 0


def test_shortest_path_line():
    t = line_topology()
    path, cost = shortest_path(t, 0, 2, {0: 1.0, 1: 1.0, 2: 1.0})
    assert path == [0, 1, 2]
    assert cost == 4.0  # degrees 1 + 2 + 1


def test_shortest_path_prefers_light_detour():
    t = diamond_topology()
    weights = {0: 1.0, 1: 3.0, 2: 1.0, 3: 1.0}
    path, cost = shortest_path(t, 0, 2, weights)
    assert path == [0, 3, 2]
    assert cost == 6.0  # 2 + 2 + 2, avoiding the weight-3 node


def test_shortest_path_degenerate_source_equals_destination():
    t = line_topology()
    path, cost = shortest_path(t, 1, 1, {0: 1.0, 1: 2.0, 2: 1.0})
    assert path == [1]
    assert cost == 4.0  # w=2 times degree 2


def test_shortest_path_unreachable_raises():
    t = generate_erdos_renyi(4, 0.0, seed=1)
    with pytest.raises(NoRouteError):
        shortest_path(t, 0, 3, {i: 1.0 for i in range(4)})


def test_shortest_path_requires_full_weight_cover():
    t = line_topology()
    with pytest.raises(ValueError):
        shortest_path(t, 0, 2, {0: 1.0, 1: 1.0})


def test_shortest_path_matches_exhaustive_oracle():
    rng = random.Random(4242)
    for trial in range(100):
        n = rng.randint(2, 8)
        t = generate_erdos_renyi(n, rng.uniform(0.3, 0.9), seed=trial)
        weights = {i: rng.uniform(0.1, 5.0) for i in range(n)}
        src, dst = rng.sample(range(n), 2)
        expected = brute_force_min_cost(t, src, dst, weights)
        if expected is None:
            with pytest.raises(NoRouteError):
                shortest_path(t, src, dst, weights)
            continue
        path, cost = shortest_path(t, src, dst, weights)
        assert cost == pytest.approx(expected[0], rel=1e-12)
        assert tuple(path) == expected[1]  # lexicographic tie-break agrees


# ---------------------------------------------------------------- clustering

def test_single_cluster_holds_everyone():
    t = generate_erdos_renyi(12, 0.1, seed=6)
    c = cluster(t, 1, seed=5)
    assert set(c.assignments.values()) == {0}
    assert len(c.heads) == 1


def test_one_cluster_per_node():
    t = generate_erdos_renyi(9, 0.2, seed=14)
    c = cluster(t, 9, seed=3)
    assert sorted(c.assignments.values()) == list(range(9))
    assert sorted(c.heads) == list(range(9))
    for node, assigned in c.assignments.items():
        assert c.heads[assigned] == node


def test_cluster_count_exceeding_nodes_raises():
    t = generate_erdos_renyi(4, 0.5, seed=1)
    with pytest.raises(ValueError):
        cluster(t, 5, seed=1)


def test_cluster_assignments_are_nearest_centroid_at_convergence():
    for seed in range(10):
        t = generate_erdos_renyi(40, 0.05, seed=seed)
        c = cluster(t, 4, seed=seed + 100)
        centroids = {}
        for idx in range(4):
            members = [i for i, a in c.assignments.items() if a == idx]
            assert members, "every cluster stays populated"
            centroids[idx] = (
                sum(t.nodes[i].position[0] for i in members) / len(members),
                sum(t.nodes[i].position[1] for i in members) / len(members),
            )
        for i, assigned in c.assignments.items():
            px, py = t.nodes[i].position
            own = (px - centroids[assigned][0]) ** 2 + (py - centroids[assigned][1]) ** 2
            for idx, (cx, cy) in centroids.items():
                assert own <= (px - cx) ** 2 + (py - cy) ** 2 + 1e-9


def test_cluster_heads_belong_to_their_cluster():
    t = generate_erdos_renyi(25, 0.1, seed=31)
    c = cluster(t, 5, seed=8)
    for idx, head in enumerate(c.heads):
        assert c.assignments[head] == idx


def test_cluster_is_deterministic():
    t = generate_erdos_renyi(30, 0.1, seed=2)
    assert cluster(t, 3, seed=17) == cluster(t, 3, seed=17)
