"""Reachability partitions of bridges and the crossing-edge structure.

Removing a bridge splits its snapshot into exactly two components; an edge
whose endpoints land on opposite sides is a *crossing* edge.  ``compute_cross``
inverts that relation: for every temporal edge it lists the bridges whose
partition the edge crosses, which is exactly what the changeability DP
consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import GraphError, TemporalEdge, TemporalGraph, find_bridges

CrossMap = Mapping[TemporalEdge, tuple[TemporalEdge, ...]]


@dataclass(frozen=True)
class ReachabilityPartition:
    """The two components of a snapshot after removing one bridge."""

    bridge: TemporalEdge
    comp_u: frozenset[int]
    comp_v: frozenset[int]


def _reach(n: int, pairs, skip: tuple[int, int], start: int) -> set[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        if (u, v) == skip:
            continue
        adj[u].append(v)
        adj[v].append(u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def reachability_partition(g: TemporalGraph, bridge: TemporalEdge) -> ReachabilityPartition:
    """Partition of the vertices by the two sides of ``bridge``.

    Two traversals of the snapshot minus the bridge, one from each endpoint.
    Raises if the edge is missing or is not actually a bridge.
    """
    bridge = TemporalEdge(*bridge)
    if bridge not in g.edges:
        raise GraphError(f"not a temporal edge of the graph: {bridge!r}")
    pairs = g.snapshot(bridge.t)
    comp_u = _reach(g.n, pairs, bridge.pair, bridge.u)
    comp_v = _reach(g.n, pairs, bridge.pair, bridge.v)
    if bridge.v in comp_u:
        raise GraphError(f"not a bridge: {bridge!r}")
    return ReachabilityPartition(bridge, frozenset(comp_u), frozenset(comp_v))


def is_crossing(p: ReachabilityPartition, pair: tuple[int, int]) -> bool:
    """True iff ``pair`` has one endpoint on each side of the partition."""
    a, b = pair
    return (a in p.comp_u and b in p.comp_v) or (a in p.comp_v and b in p.comp_u)


def compute_cross(g: TemporalGraph, counters: dict | None = None) -> dict[TemporalEdge, tuple[TemporalEdge, ...]]:
    """For every temporal edge, the bridges whose partition it crosses.

    Work per bridge is one traversal of its snapshot plus one scan over all
    temporal edges, so the total is quadratic in the edge count.  A bridge
    is never listed in its own entry.  When ``counters`` is given, it is
    filled with the amount of work done per kind, for complexity tests.
    """
    edge_list = g.sorted_edges()
    cross: dict[TemporalEdge, list[TemporalEdge]] = {e: [] for e in edge_list}
    bridges = sorted(find_bridges(g))
    by_t = g.edges_by_time()
    partition_visits = 0
    crossing_tests = 0
    side = [False] * g.n
    for bridge in bridges:
        # mark one side of the partition; the other side is its complement
        reached = _reach(g.n, by_t[bridge.t], bridge.pair, bridge.u)
        partition_visits += len(reached)
        for i in range(g.n):
            side[i] = i in reached
        for e in edge_list:
            crossing_tests += 1
            if side[e.u] != side[e.v] and e != bridge:
                cross[e].append(bridge)
    if counters is not None:
        counters["bridges"] = len(bridges)
        counters["partition_visits"] = partition_visits
        counters["crossing_tests"] = crossing_tests
    return {e: tuple(members) for e, members in cross.items()}
