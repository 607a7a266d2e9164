"""Shared fixture builders, naive oracles, and random-instance utilities."""

from __future__ import annotations

import random

from tgr import (
    RelabelOp,
    TemporalEdge,
    TemporalGraph,
    apply_relabel,
    find_bridges,
    generate_random_instance,
    is_always_connected,
)
from tgr.core import static_connected


def tri_pair():
    g1 = TemporalGraph.build(
        "abc", 2, [("a", "b", 1), ("b", "c", 1), ("a", "c", 1), ("a", "b", 2), ("b", "c", 2)]
    )
    g2 = TemporalGraph.build(
        "abc", 2, [("a", "b", 1), ("b", "c", 1), ("a", "c", 2), ("a", "b", 2), ("b", "c", 2)]
    )
    return g1, g2


def infeas_pair():
    g1 = TemporalGraph.build(
        "abc", 2, [("a", "b", 1), ("a", "c", 1), ("a", "c", 2), ("b", "c", 2)]
    )
    g2 = TemporalGraph.build(
        "abc", 2, [("b", "c", 1), ("a", "c", 1), ("a", "c", 2), ("a", "b", 2)]
    )
    return g1, g2


def chain2():
    return TemporalGraph.build(
        "abcd",
        2,
        [
            ("a", "b", 1),
            ("b", "c", 1),
            ("c", "a", 1),
            ("a", "d", 1),
            ("a", "b", 2),
            ("a", "d", 2),
            ("d", "c", 2),
        ],
    )


def two_triangles():
    edges = [("a", "b", t) for t in (1, 2)]
    edges += [("b", "c", t) for t in (1, 2)]
    edges += [("a", "c", t) for t in (1, 2)]
    return TemporalGraph.build("abc", 2, edges)


def te(g: TemporalGraph, u: str, v: str, t: int) -> TemporalEdge:
    i, j = sorted((g.index(u), g.index(v)))
    return TemporalEdge(i, j, t)


def op(g: TemporalGraph, u: str, v: str, t_from: int, t_to: int) -> RelabelOp:
    i, j = sorted((g.index(u), g.index(v)))
    return RelabelOp(i, j, t_from, t_to)


def named(g: TemporalGraph, edges) -> list[tuple[str, str, int]]:
    return sorted((g.name(e.u), g.name(e.v), e.t) for e in edges)


def naive_bridges(g: TemporalGraph) -> frozenset[TemporalEdge]:
    """Delete each temporal edge and test its snapshot's connectivity."""
    out = set()
    for e in g.edges:
        pairs = [x.pair for x in g.edges if x.t == e.t and x != e]
        if not static_connected(g.n, pairs):
            out.add(e)
    return frozenset(out)


def all_valid_moves(g: TemporalGraph) -> list[RelabelOp]:
    moves = []
    bridges = find_bridges(g)
    for e in sorted(g.edges):
        if e in bridges:
            continue
        for t2 in range(1, g.lifetime + 1):
            if t2 != e.t and TemporalEdge(e.u, e.v, t2) not in g.edges:
                moves.append(RelabelOp(e.u, e.v, e.t, t2))
    return moves


def perturb(g: TemporalGraph, steps: int, rng: random.Random) -> TemporalGraph:
    """Random walk of valid relabels; the result is feasibly reachable."""
    cur = g
    for _ in range(steps):
        moves = all_valid_moves(cur)
        if not moves:
            break
        cur = apply_relabel(cur, rng.choice(moves))
    return cur


def small_instance(seed: int) -> TemporalGraph:
    """Random instance with n <= 5, lifetime 2, at most 12 temporal edges."""
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    cap = n * (n - 1) // 2 - (n - 1)
    extra = rng.randint(0, max(0, min(cap, 6 - (n - 1))))
    return generate_random_instance(n, 2, extra, seed)


def random_compatible_target(g: TemporalGraph, rng: random.Random, tries: int = 60):
    """Always-connected graph with the same per-pair label counts as ``g``.

    Sampled by shuffling each pair's labels, so it may or may not be
    reachable from ``g``.  Returns None if no connected shuffle is found.
    """
    counts = sorted(g.pair_counts().items())
    for _ in range(tries):
        edges = []
        for (u, v), c in counts:
            for t in rng.sample(range(1, g.lifetime + 1), c):
                edges.append(TemporalEdge(u, v, t))
        cand = g.with_edges(edges)
        if is_always_connected(cand):
            return cand
    return None
