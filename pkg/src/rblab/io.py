"""Text formats: `rbsys v1` (graph systems) and `rbwt v1` (weighted graphs).

Both are UTF-8 with LF line endings and a fixed canonical printing, so that
parse(print(x)) == x and re-printing a parsed file is byte-identical.  Lines
whose first non-blank character is '#' are comments; parsing skips them (and
blank lines), printing never emits them.
"""

from __future__ import annotations

import re

from .errors import FormatError
from .model import GraphSystem, SimpleGraph
from .nesting import WeightedGraph

_HEADER_RE = re.compile(r"^n=(\d+) k=(\d+)$")
_GRAPH_RE = re.compile(r"^graph (\d+):(.*)$")


def print_system(system: GraphSystem) -> str:
    lines = ["rbsys v1", f"n={system.n} k={system.k}"]
    for i, g in enumerate(system.members, start=1):
        edges = " ".join(f"{u}-{v}" for u, v in g.sorted_edges())
        lines.append(f"graph {i}: {edges}" if edges else f"graph {i}:")
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def parse_system(text: str) -> GraphSystem:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "rbsys v1":
        raise FormatError("expected header 'rbsys v1'", lines[0][0] if lines else 1)
    if len(lines) < 2:
        raise FormatError("missing 'n=<int> k=<int>' line")
    lineno, header = lines[1]
    m = _HEADER_RE.match(header)
    if not m:
        raise FormatError("expected 'n=<int> k=<int>'", lineno)
    n, k = int(m.group(1)), int(m.group(2))
    body = lines[2:]
    if len(body) != k:
        raise FormatError(f"expected {k} graph lines, found {len(body)}")
    members = []
    for expect, (lineno, raw) in enumerate(body, start=1):
        gm = _GRAPH_RE.match(raw)
        if not gm:
            raise FormatError("expected 'graph <i>: <u>-<v> ...'", lineno)
        if int(gm.group(1)) != expect:
            raise FormatError(f"expected graph {expect}, found graph {gm.group(1)}", lineno)
        edges = []
        for token in gm.group(2).split():
            em = re.fullmatch(r"(\d+)-(\d+)", token)
            if not em:
                raise FormatError(f"bad edge token {token!r}", lineno)
            u, v = int(em.group(1)), int(em.group(2))
            if not 1 <= u < v <= n:
                raise FormatError(f"edge {u}-{v} needs 1 <= u < v <= {n}", lineno)
            if (u, v) in edges:
                raise FormatError(f"duplicate edge {u}-{v}", lineno)
            edges.append((u, v))
        members.append(SimpleGraph(n, frozenset(edges)))
    return GraphSystem(n, tuple(members))


def print_weighted(wg: WeightedGraph) -> str:
    lines = ["rbwt v1", f"n={wg.n} k={wg.k}"]
    for u, v, w in wg.pairs():
        if w > 0:
            lines.append(f"{u} {v} {w}")
    return "\n".join(lines) + "\n"


def parse_weighted(text: str) -> WeightedGraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "rbwt v1":
        raise FormatError("expected header 'rbwt v1'", lines[0][0] if lines else 1)
    if len(lines) < 2:
        raise FormatError("missing 'n=<int> k=<int>' line")
    lineno, header = lines[1]
    m = _HEADER_RE.match(header)
    if not m:
        raise FormatError("expected 'n=<int> k=<int>'", lineno)
    n, k = int(m.group(1)), int(m.group(2))
    weights = {}
    for lineno, raw in lines[2:]:
        parts = raw.split()
        if len(parts) != 3:
            raise FormatError("expected '<u> <v> <w>'", lineno)
        try:
            u, v, w = (int(p) for p in parts)
        except ValueError:
            raise FormatError("expected three integers", lineno) from None
        if not 1 <= u < v <= n:
            raise FormatError(f"pair {u} {v} needs 1 <= u < v <= {n}", lineno)
        if not 0 < w <= k:
            raise FormatError(f"weight {w} outside (0, {k}]", lineno)
        if (u, v) in weights:
            raise FormatError(f"duplicate pair {u} {v}", lineno)
        weights[(u, v)] = w
    return WeightedGraph.from_map(n, k, weights)


def load_system(path) -> GraphSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_system(fh.read())


def save_system(path, system: GraphSystem) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(print_system(system))


def load_weighted(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_weighted(fh.read())


def save_weighted(path, wg: WeightedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(print_weighted(wg))
