"""Line-based text formats for graphs (.tg), relabeling sequences (.tgs)
and vertex-cover instances (.vc).  Parsing is strict: every violation is a
ParseError carrying the offending line number.
"""

from __future__ import annotations

from pathlib import Path

from .core import GraphError, RelabelOp, TemporalGraph

TG_VERSION = 1
TGS_VERSION = 1
VC_VERSION = 1


class ParseError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield no, s.split()


def _check_name(source: str, no: int, token: str) -> str:
    if "," in token:
        raise ParseError(source, no, f"vertex name may not contain a comma: {token!r}")
    return token


def _int(source: str, no: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(source, no, f"{what} must be an integer, got {token!r}") from None


def parse_temporal_graph(text: str, source: str = "<string>") -> TemporalGraph:
    header_seen = False
    lifetime: int | None = None
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[str, str, int]] = []
    seen: set[tuple[int, int, int]] = set()
    for no, tokens in _lines(text):
        if not header_seen:
            if tokens != ["tg", str(TG_VERSION)]:
                raise ParseError(source, no, f"expected header 'tg {TG_VERSION}'")
            header_seen = True
            continue
        directive = tokens[0]
        if directive == "t":
            if lifetime is not None:
                raise ParseError(source, no, "duplicate 't' directive")
            if edges:
                raise ParseError(source, no, "'t' must come before edges")
            if len(tokens) != 2:
                raise ParseError(source, no, "expected 't <lifetime>'")
            lifetime = _int(source, no, tokens[1], "lifetime")
            if lifetime < 1:
                raise ParseError(source, no, "lifetime must be at least 1")
        elif directive == "v":
            if len(tokens) != 2:
                raise ParseError(source, no, "expected 'v <name>'")
            name = _check_name(source, no, tokens[1])
            if name in index:
                raise ParseError(source, no, f"duplicate vertex name {name!r}")
            index[name] = len(names)
            names.append(name)
        elif directive == "e":
            if len(tokens) != 4:
                raise ParseError(source, no, "expected 'e <u> <v> <t>'")
            if lifetime is None:
                raise ParseError(source, no, "edge before 't' directive")
            uname, vname = tokens[1], tokens[2]
            t = _int(source, no, tokens[3], "edge time")
            for nm in (uname, vname):
                if nm not in index:
                    raise ParseError(source, no, f"undeclared vertex name {nm!r}")
            if uname == vname:
                raise ParseError(source, no, f"self-loop on {uname!r}")
            if not 1 <= t <= lifetime:
                raise ParseError(source, no, f"edge time {t} outside 1..{lifetime}")
            u, v = sorted((index[uname], index[vname]))
            if (u, v, t) in seen:
                raise ParseError(source, no, f"duplicate temporal edge {uname} {vname} {t}")
            seen.add((u, v, t))
            edges.append((uname, vname, t))
        else:
            raise ParseError(source, no, f"unknown directive {directive!r}")
    if not header_seen:
        raise ParseError(source, 1, f"missing header 'tg {TG_VERSION}'")
    if lifetime is None:
        raise ParseError(source, 1, "missing 't' directive")
    return TemporalGraph.build(names, lifetime, edges)


def format_temporal_graph(g: TemporalGraph) -> str:
    lines = [f"tg {TG_VERSION}", f"t {g.lifetime}"]
    lines.extend(f"v {name}" for name in g.names)
    lines.extend(
        f"e {g.name(e.u)} {g.name(e.v)} {e.t}" for e in g.sorted_edges()
    )
    return "\n".join(lines) + "\n"


def load_temporal_graph(path: str | Path) -> TemporalGraph:
    path = Path(path)
    return parse_temporal_graph(path.read_text(encoding="utf-8"), str(path))


def save_temporal_graph(g: TemporalGraph, path: str | Path) -> None:
    Path(path).write_text(format_temporal_graph(g), encoding="utf-8")


def parse_sequence(text: str, g: TemporalGraph, source: str = "<string>") -> list[RelabelOp]:
    """Parse a .tgs file; vertex names are resolved against ``g``."""
    header_seen = False
    ops: list[RelabelOp] = []
    for no, tokens in _lines(text):
        if not header_seen:
            if tokens != ["tgs", str(TGS_VERSION)]:
                raise ParseError(source, no, f"expected header 'tgs {TGS_VERSION}'")
            header_seen = True
            continue
        if tokens[0] != "r" or len(tokens) != 5:
            raise ParseError(source, no, "expected 'r <u> <v> <t_from> <t_to>'")
        uname, vname = tokens[1], tokens[2]
        t_from = _int(source, no, tokens[3], "from-time")
        t_to = _int(source, no, tokens[4], "to-time")
        try:
            u, v = g.index(uname), g.index(vname)
        except GraphError as exc:
            raise ParseError(source, no, str(exc)) from None
        if u == v:
            raise ParseError(source, no, f"self-loop on {uname!r}")
        if t_from == t_to:
            raise ParseError(source, no, "from-time equals to-time")
        for t in (t_from, t_to):
            if not 1 <= t <= g.lifetime:
                raise ParseError(source, no, f"time {t} outside 1..{g.lifetime}")
        if u > v:
            u, v = v, u
        ops.append(RelabelOp(u, v, t_from, t_to))
    if not header_seen:
        raise ParseError(source, 1, f"missing header 'tgs {TGS_VERSION}'")
    return ops


def format_sequence(ops, g: TemporalGraph) -> str:
    lines = [f"tgs {TGS_VERSION}"]
    lines.extend(
        f"r {g.name(op.u)} {g.name(op.v)} {op.from_time} {op.to_time}" for op in ops
    )
    return "\n".join(lines) + "\n"


def load_sequence(path: str | Path, g: TemporalGraph) -> list[RelabelOp]:
    path = Path(path)
    return parse_sequence(path.read_text(encoding="utf-8"), g, str(path))


def save_sequence(ops, g: TemporalGraph, path: str | Path) -> None:
    Path(path).write_text(format_sequence(ops, g), encoding="utf-8")


def parse_edge_list(text: str, source: str = "<string>") -> list[tuple[str, str]]:
    """Bare edge list: one 'u v' pair per line, '#' comments."""
    edges: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for no, tokens in _lines(text):
        if len(tokens) != 2:
            raise ParseError(source, no, "expected '<u> <v>'")
        u = _check_name(source, no, tokens[0])
        v = _check_name(source, no, tokens[1])
        if u == v:
            raise ParseError(source, no, f"self-loop on {u!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(source, no, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return edges


def parse_vc(text: str, source: str = "<string>"):
    """Parse a .vc sidecar: cover budget plus the instance's vertices/edges.

    Returns ``(vertices, edges, k)``.
    """
    header_seen = False
    k: int | None = None
    names: list[str] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for no, tokens in _lines(text):
        if not header_seen:
            if tokens != ["vc", str(VC_VERSION)]:
                raise ParseError(source, no, f"expected header 'vc {VC_VERSION}'")
            header_seen = True
            continue
        directive = tokens[0]
        if directive == "k":
            if k is not None:
                raise ParseError(source, no, "duplicate 'k' directive")
            if len(tokens) != 2:
                raise ParseError(source, no, "expected 'k <budget>'")
            k = _int(source, no, tokens[1], "cover budget")
            if k < 0:
                raise ParseError(source, no, "cover budget must be non-negative")
        elif directive == "v":
            if len(tokens) != 2:
                raise ParseError(source, no, "expected 'v <name>'")
            name = _check_name(source, no, tokens[1])
            if name in declared:
                raise ParseError(source, no, f"duplicate vertex name {name!r}")
            declared.add(name)
            names.append(name)
        elif directive == "e":
            if len(tokens) != 3:
                raise ParseError(source, no, "expected 'e <u> <v>'")
            u, v = tokens[1], tokens[2]
            for nm in (u, v):
                if nm not in declared:
                    raise ParseError(source, no, f"undeclared vertex name {nm!r}")
            if u == v:
                raise ParseError(source, no, f"self-loop on {u!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(source, no, f"duplicate edge {u} {v}")
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(source, no, f"unknown directive {directive!r}")
    if not header_seen:
        raise ParseError(source, 1, f"missing header 'vc {VC_VERSION}'")
    if k is None:
        raise ParseError(source, 1, "missing 'k' directive")
    return names, edges, k


def format_vc(vertices, edges, k: int) -> str:
    lines = [f"vc {VC_VERSION}", f"k {k}"]
    lines.extend(f"v {name}" for name in vertices)
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
