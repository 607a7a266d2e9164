"""Level classification of temporal edges by how many relabels it takes to
turn them into non-bridges, with back-references for reconstructing a
shortest enabling sequence.

Level 0 holds the non-bridges.  A bridge gets level k+1 when some level-k
edge crosses its partition: once that helper is a non-bridge, moving the
helper's pair into the bridge's snapshot closes a cycle through the bridge.
Edges never reached by this breadth-first sweep can never be relabeled, no
matter what happens first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import GraphError, RelabelOp, TemporalEdge, TemporalGraph, find_bridges
from .reachability import CrossMap, compute_cross


@dataclass(frozen=True)
class ChangeTable:
    """Per-edge levels plus back-references; unleveled edges are unchangeable."""

    edges: frozenset[TemporalEdge]
    levels: Mapping[TemporalEdge, int]
    back_refs: Mapping[TemporalEdge, TemporalEdge]
    max_level: int  # largest occupied level, -1 if none

    def level(self, edge: TemporalEdge) -> int | None:
        """Level of ``edge``, or None when it is unchangeable."""
        edge = TemporalEdge(*edge)
        if edge not in self.edges:
            raise GraphError(f"not a temporal edge of the graph: {edge!r}")
        return self.levels.get(edge)

    def is_changeable(self, edge: TemporalEdge) -> bool:
        return self.level(edge) is not None

    def unchangeable_edges(self) -> list[TemporalEdge]:
        return sorted(e for e in self.edges if e not in self.levels)


def compute_change_table(g: TemporalGraph, cross: CrossMap) -> ChangeTable:
    """Breadth-first level assignment over the crossing structure.

    Level 0 is the set of non-bridges.  Each level-k edge then promotes the
    still-unleveled bridges it crosses to level k+1, recording itself as the
    back-reference.  Frontiers and crossing lists are processed in canonical
    order, so back-references are deterministic.  The sweep stops at the
    first empty level; everything unleveled is unchangeable.  A candidate
    whose enabling relabel would land on an occupied slot is skipped (this
    only happens when helper and candidate share the vertex pair).
    """
    bridges = find_bridges(g)
    levels: dict[TemporalEdge, int] = {}
    back_refs: dict[TemporalEdge, TemporalEdge] = {}
    frontier = sorted(e for e in g.edges if e not in bridges)
    for e in frontier:
        levels[e] = 0
    k = 0
    max_level = 0 if frontier else -1
    while frontier:
        nxt: list[TemporalEdge] = []
        for helper in frontier:
            for cand in cross[helper]:
                if cand in levels:
                    continue
                if TemporalEdge(helper.u, helper.v, cand.t) in g.edges:
                    continue  # enabling relabel would collide
                levels[cand] = k + 1
                back_refs[cand] = helper
                nxt.append(cand)
        frontier = sorted(nxt)
        if frontier:
            k += 1
            max_level = k
    return ChangeTable(g.edges, levels, back_refs, max_level)


def sequence_to_nonbridge(
    g: TemporalGraph, table: ChangeTable, target: TemporalEdge
) -> list[RelabelOp]:
    """Shortest relabeling sequence after which ``target`` is a non-bridge.

    Walks the back-reference chain down to a non-bridge, then emits one op
    per link: each moves the previous link's pair into the next link's
    snapshot.  The table must have been computed for exactly this graph.
    """
    target = TemporalEdge(*target)
    k = table.level(target)
    if k is None:
        raise GraphError(f"edge is unchangeable: {target!r}")
    chain = [target]
    while table.levels[chain[-1]] > 0:
        chain.append(table.back_refs[chain[-1]])
    chain.reverse()  # chain[0] is a non-bridge, chain[-1] == target
    return [
        RelabelOp(prev.u, prev.v, prev.t, nxt.t)
        for prev, nxt in zip(chain, chain[1:])
    ]


def classify(g: TemporalGraph) -> ChangeTable:
    """Crossing structure plus level table in one call."""
    return compute_change_table(g, compute_cross(g))
