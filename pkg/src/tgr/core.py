"""Temporal graphs as immutable values, plus the elementary operations on them.

A temporal graph is a fixed vertex set together with a set of undirected
edges, each active at one integer time in ``1..lifetime``.  Vertices are
dense indices internally; a name table maps them to external tokens.  All
operations are pure: relabeling an edge returns a new graph value.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Malformed graph data or an operation used outside its contract."""


class TemporalEdge(NamedTuple):
    """Undirected edge ``{u, v}`` (stored with u < v) active at time ``t``."""

    u: int
    v: int
    t: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


class RelabelOp(NamedTuple):
    """Move the edge ``{u, v}`` from ``from_time`` to ``to_time``."""

    u: int
    v: int
    from_time: int
    to_time: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)

    def source(self) -> TemporalEdge:
        return TemporalEdge(self.u, self.v, self.from_time)

    def target(self) -> TemporalEdge:
        return TemporalEdge(self.u, self.v, self.to_time)

    def inverse(self) -> "RelabelOp":
        return RelabelOp(self.u, self.v, self.to_time, self.from_time)


ReconfigSequence = Sequence[RelabelOp]


@dataclass(frozen=True)
class TemporalGraph:
    """Immutable temporal graph: name table, lifetime, set of temporal edges."""

    names: tuple[str, ...]
    lifetime: int
    edges: frozenset[TemporalEdge]

    def __post_init__(self):
        if self.lifetime < 1:
            raise GraphError("lifetime must be at least 1")
        if len(set(self.names)) != len(self.names):
            raise GraphError("duplicate vertex names")
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(
            self, "edges", frozenset(TemporalEdge(*e) for e in self.edges)
        )
        n = len(self.names)
        for e in self.edges:
            if not 0 <= e.u < e.v < n:
                raise GraphError(f"bad edge endpoints {e!r} for {n} vertices")
            if not 1 <= e.t <= self.lifetime:
                raise GraphError(f"edge time out of range: {e!r}")

    @classmethod
    def build(
        cls,
        names: Iterable[str],
        lifetime: int,
        edges: Iterable[tuple[str, str, int]],
    ) -> "TemporalGraph":
        """Construct from named edges; rejects self-loops and duplicates."""
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise GraphError("duplicate vertex names")
        out: set[TemporalEdge] = set()
        for uname, vname, t in edges:
            if uname not in index:
                raise GraphError(f"undeclared vertex name {uname!r}")
            if vname not in index:
                raise GraphError(f"undeclared vertex name {vname!r}")
            u, v = index[uname], index[vname]
            if u == v:
                raise GraphError(f"self-loop on {uname!r}")
            if u > v:
                u, v = v, u
            e = TemporalEdge(u, v, t)
            if e in out:
                raise GraphError(f"duplicate temporal edge {uname} {vname} {t}")
            out.add(e)
        return cls(names, lifetime, frozenset(out))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex name {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def snapshot(self, t: int) -> tuple[tuple[int, int], ...]:
        """Static edges active at time ``t``, in canonical order."""
        if not 1 <= t <= self.lifetime:
            raise GraphError(f"snapshot time {t} outside 1..{self.lifetime}")
        return tuple(sorted(e.pair for e in self.edges if e.t == t))

    def edges_by_time(self) -> dict[int, list[tuple[int, int]]]:
        """All snapshots at once: time -> list of static pairs."""
        by_t: dict[int, list[tuple[int, int]]] = {
            t: [] for t in range(1, self.lifetime + 1)
        }
        for e in self.edges:
            by_t[e.t].append(e.pair)
        return by_t

    def sorted_edges(self) -> list[TemporalEdge]:
        return sorted(self.edges)

    def pair_counts(self) -> Counter:
        return Counter(e.pair for e in self.edges)

    def with_edges(self, edges: Iterable[TemporalEdge]) -> "TemporalGraph":
        return TemporalGraph(self.names, self.lifetime, frozenset(edges))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a relabeling sequence step by step."""

    ok: bool
    length: int
    failed_step: int | None = None
    failure: str | None = None  # "malformed" | "missing_edge" | "collision" | "disconnects"
    final_matches: bool = False


# ---------------------------------------------------------------------------
# Static-graph helpers shared by the temporal operations (and by the oracle,
# which works on raw edge sets rather than TemporalGraph values).

def static_connected(n: int, pairs: Iterable[tuple[int, int]]) -> bool:
    """True iff the static graph on ``n`` vertices is connected (n <= 1: yes)."""
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def static_bridges(n: int, pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    """Bridges of a static simple graph, via an iterative lowlink DFS."""
    edge_list = list(pairs)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edge_list):
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]  # (vertex, next adjacency index)
        while stack:
            x, i = stack.pop()
            if i < len(adj[x]):
                stack.append((x, i + 1))
                y, eid = adj[x][i]
                if eid == parent_edge[x]:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    parent_edge[y] = eid
                    stack.append((y, 0))
                elif disc[y] < low[x]:
                    low[x] = disc[y]
            elif parent_edge[x] != -1:
                u, v = edge_list[parent_edge[x]]
                p = u if v == x else v
                if low[x] < low[p]:
                    low[p] = low[x]
                if low[x] > disc[p]:
                    out.add(edge_list[parent_edge[x]])
    return out


# ---------------------------------------------------------------------------
# Temporal operations.

def is_always_connected(g: TemporalGraph) -> bool:
    """True iff every snapshot of ``g`` is connected."""
    by_t = g.edges_by_time()
    return all(static_connected(g.n, by_t[t]) for t in range(1, g.lifetime + 1))


def find_bridges(g: TemporalGraph) -> frozenset[TemporalEdge]:
    """All temporal edges whose removal disconnects their snapshot.

    Requires an always-connected input; each snapshot is processed once in
    linear time.
    """
    by_t = g.edges_by_time()
    out: set[TemporalEdge] = set()
    for t in range(1, g.lifetime + 1):
        pairs = by_t[t]
        if not static_connected(g.n, pairs):
            raise GraphError(f"snapshot {t} is not connected")
        for u, v in static_bridges(g.n, pairs):
            out.add(TemporalEdge(u, v, t))
    return frozenset(out)


def is_valid_relabel(g: TemporalGraph, op: RelabelOp) -> bool:
    """True iff applying ``op`` to ``g`` keeps every snapshot connected.

    Assumes ``g`` is always-connected.  Equivalent characterization used
    here: the source edge exists, the target slot is free, and the source
    is not a bridge.  Malformed ops yield False rather than an error.
    """
    u, v = op.u, op.v
    if u > v:
        u, v = v, u
    if u == v or u < 0 or v >= g.n:
        return False
    if not (1 <= op.from_time <= g.lifetime and 1 <= op.to_time <= g.lifetime):
        return False
    if op.from_time == op.to_time:
        return False
    if TemporalEdge(u, v, op.from_time) not in g.edges:
        return False
    if TemporalEdge(u, v, op.to_time) in g.edges:
        return False
    return (u, v) not in static_bridges(g.n, g.snapshot(op.from_time))


def apply_relabel(g: TemporalGraph, op: RelabelOp) -> TemporalGraph:
    """Move one temporal edge; returns a new graph, input untouched.

    Does not require the relabel to be *valid* (connectivity-preserving);
    it only enforces the slot semantics, so callers can explore invalid
    moves and detect them afterwards.
    """
    u, v = op.u, op.v
    if u > v:
        u, v = v, u
    if op.from_time == op.to_time:
        raise GraphError("relabel must change the time")
    src = TemporalEdge(u, v, op.from_time)
    tgt = TemporalEdge(u, v, op.to_time)
    if src not in g.edges:
        raise GraphError(f"source temporal edge not present: {src!r}")
    if tgt in g.edges:
        raise GraphError(f"target slot already occupied: {tgt!r}")
    return g.with_edges(g.edges - {src} | {tgt})


def validate_sequence(
    g1: TemporalGraph, seq: ReconfigSequence, g2: TemporalGraph
) -> ValidationReport:
    """Check a relabeling sequence from ``g1``: every step applicable and
    connectivity-preserving, and the final graph equal to ``g2``.

    All failures are reported, never raised: the report carries the first
    failing step index and the failure kind.
    """
    require_compatible(g1, g2)
    for g in (g1, g2):
        if not is_always_connected(g):
            raise GraphError("endpoint graph is not always-connected")
    cur = g1
    for i, op in enumerate(seq):
        u, v = op.u, op.v
        if u > v:
            u, v = v, u
        malformed = (
            u == v
            or u < 0
            or v >= cur.n
            or not (1 <= op.from_time <= cur.lifetime)
            or not (1 <= op.to_time <= cur.lifetime)
            or op.from_time == op.to_time
        )
        if malformed:
            return ValidationReport(False, len(seq), i, "malformed", False)
        src = TemporalEdge(u, v, op.from_time)
        if src not in cur.edges:
            return ValidationReport(False, len(seq), i, "missing_edge", False)
        if TemporalEdge(u, v, op.to_time) in cur.edges:
            return ValidationReport(False, len(seq), i, "collision", False)
        if (u, v) in static_bridges(cur.n, cur.snapshot(op.from_time)):
            return ValidationReport(False, len(seq), i, "disconnects", False)
        cur = apply_relabel(cur, op)
    final_matches = cur == g2
    return ValidationReport(final_matches, len(seq), None, None, final_matches)


def require_compatible(g1: TemporalGraph, g2: TemporalGraph) -> None:
    """Raise unless both graphs share the vertex table and lifetime."""
    if g1.names != g2.names:
        raise GraphError("graphs have different vertex sets")
    if g1.lifetime != g2.lifetime:
        raise GraphError("graphs have different lifetimes")


def difference(g1: TemporalGraph, g2: TemporalGraph) -> int:
    """Number of temporal edges of ``g1`` that are absent from ``g2``."""
    require_compatible(g1, g2)
    return len(g1.edges - g2.edges)


def check_pair_counts(g1: TemporalGraph, g2: TemporalGraph) -> bool:
    """True iff every vertex pair carries equally many time labels in both."""
    require_compatible(g1, g2)
    return g1.pair_counts() == g2.pair_counts()


def align_names(g: TemporalGraph, like: TemporalGraph) -> TemporalGraph:
    """Renumber ``g`` to use the vertex order of ``like`` (same name set)."""
    if g.names == like.names:
        return g
    if set(g.names) != set(like.names):
        raise GraphError("graphs have different vertex sets")
    remap = {i: like.index(name) for i, name in enumerate(g.names)}
    edges = []
    for e in g.edges:
        u, v = remap[e.u], remap[e.v]
        if u > v:
            u, v = v, u
        edges.append(TemporalEdge(u, v, e.t))
    return TemporalGraph(like.names, g.lifetime, frozenset(edges))
