"""Edge-list text format.

::

    # comment lines start with '#'
    <n> <m>
    <tail> <head>      (m lines, 1-based ids; repeats are parallel arcs)

Blank lines are ignored. Vertex and arc witness files use the same
comment rules; a leading ``SIZE s`` line (as printed by the CLI) is
accepted and checked against the number of entries.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .errors import GraphInputError
from .graph import DiGraph


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(lineno, line, count=None):
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected integers, got {line!r}") from None
    if count is not None and len(vals) != count:
        raise GraphInputError(f"line {lineno}: expected {count} integers, got {len(vals)}")
    return vals


def parse_edge_list(text: str) -> DiGraph:
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise GraphInputError("empty input: missing '<n> <m>' header")
    lineno, line = header
    n, m = _ints(lineno, line, 2)
    if n < 0 or m < 0:
        raise GraphInputError(f"line {lineno}: n and m must be non-negative")
    arcs = []
    for lineno, line in lines:
        if len(arcs) == m:
            raise GraphInputError(f"line {lineno}: more than the declared {m} arcs")
        t, h = _ints(lineno, line, 2)
        for x in (t, h):
            if not 1 <= x <= n:
                raise GraphInputError(f"line {lineno}: vertex id {x} outside [1, {n}]")
        arcs.append((t - 1, h - 1))
    if len(arcs) != m:
        raise GraphInputError(f"declared {m} arcs but found {len(arcs)}")
    return DiGraph(n, arcs)


def serialize(G: DiGraph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}\n" for c in comments]
    out.append(f"{G.n} {G.m}\n")
    out.extend(f"{t + 1} {h + 1}\n" for t, h in zip(G.tails, G.heads))
    return "".join(out)


def read_graph(path: str) -> DiGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph(path: str, G: DiGraph, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(G, comments))


def occurrence_indices(G: DiGraph) -> list[int]:
    """1-based rank of each arc among arcs with the same (tail, head), by arc id."""
    seen: dict = {}
    out = []
    for key in zip(G.tails, G.heads):
        seen[key] = seen.get(key, 0) + 1
        out.append(seen[key])
    return out


def format_arc(G: DiGraph, a: int, occ: Optional[list] = None) -> str:
    occ = occ if occ is not None else occurrence_indices(G)
    return f"{G.tails[a] + 1} {G.heads[a] + 1} {occ[a]}"


def _strip_size(entries, what):
    if entries and entries[0][1].split()[0] == "SIZE":
        lineno, line = entries[0]
        parts = line.split()
        if len(parts) != 2 or not parts[1].isdigit():
            raise GraphInputError(f"line {lineno}: malformed SIZE line")
        if int(parts[1]) != len(entries) - 1:
            raise GraphInputError(f"SIZE says {parts[1]} {what} but {len(entries) - 1} follow")
        return entries[1:]
    return entries


def parse_vertex_list(text: str, n: int) -> frozenset:
    """Whitespace-separated 1-based vertex ids -> 0-based frozenset."""
    entries = _strip_size(list(_data_lines(text)), "vertices")
    out = set()
    for lineno, line in entries:
        for x in _ints(lineno, line):
            if not 1 <= x <= n:
                raise GraphInputError(f"line {lineno}: vertex id {x} outside [1, {n}]")
            out.add(x - 1)
    return frozenset(out)


def parse_arc_list(text: str, G: DiGraph) -> frozenset:
    """Lines ``tail head [occurrence]`` (1-based) -> arc ids of ``G``."""
    index = {}
    for a, occ in enumerate(occurrence_indices(G)):
        index[(G.tails[a], G.heads[a], occ)] = a
    out = set()
    for lineno, line in _strip_size(list(_data_lines(text)), "arcs"):
        vals = _ints(lineno, line)
        if len(vals) not in (2, 3):
            raise GraphInputError(f"line {lineno}: expected 'tail head [occurrence]'")
        t, h = vals[0] - 1, vals[1] - 1
        occ = vals[2] if len(vals) == 3 else 1
        a = index.get((t, h, occ))
        if a is None:
            raise GraphInputError(f"line {lineno}: no arc {vals[0]} -> {vals[1]} (occurrence {occ})")
        out.add(a)
    return frozenset(out)


def parse_id_csv(spec: str, n: int) -> frozenset:
    """``"1,4,5"`` -> 0-based frozenset."""
    out = set()
    for tok in spec.replace(" ", "").split(","):
        if not tok:
            continue
        try:
            x = int(tok)
        except ValueError:
            raise GraphInputError(f"bad vertex id {tok!r}") from None
        if not 1 <= x <= n:
            raise GraphInputError(f"vertex id {x} outside [1, {n}]")
        out.add(x - 1)
    return frozenset(out)
