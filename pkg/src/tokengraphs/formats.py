"""Text formats: graph6, edge lists, DOT, and the GraphSpec mini-language."""
from __future__ import annotations

import os
import re
import sys
from typing import TextIO

from .errors import TokenGraphError
from .graph import Graph, family, make_graph
from .subsets import fmt_subset


class GraphSpecError(TokenGraphError, ValueError):
    """Parse failure; ``position`` is a 0-based character offset or a 1-based line number."""

    def __init__(self, message: str, position: int | None = None, unit: str = "char"):
        where = f" (at {unit} {position})" if position is not None else ""
        super().__init__(message + where)
        self.position = position
        self.unit = unit


# -- graph6 -------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(G: Graph) -> str:
    bits = [1 if G.adjacent(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6))
    return _encode_n(G.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphSpecError(f"invalid graph6 character {ch!r}", pos)
    if not s:
        raise GraphSpecError("empty graph6 string", 0)
    if s[0] != "~":
        n, start = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        if len(s) < 8:
            raise GraphSpecError("truncated graph6 size field", len(s))
        n = 0
        for ch in s[2:8]:
            n = n << 6 | ord(ch) - 63
        start = 8
    else:
        if len(s) < 4:
            raise GraphSpecError("truncated graph6 size field", len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | ord(ch) - 63
        start = 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[start:]
    if len(body) != need:
        raise GraphSpecError(f"graph6 body has {len(body)} characters, expected {need} for n={n}", start + min(len(body), need))
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise GraphSpecError("nonzero graph6 padding bits", len(s) - 1)
    return make_graph(n, edges)


def read_graph6_file(path: str) -> list[Graph]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(from_graph6(line))
            except GraphSpecError as exc:
                raise GraphSpecError(f"{path}: {exc}", lineno, "line") from None
    return out


# -- edge lists ---------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise GraphSpecError("edge list is empty", 1, "line")

    def ints(lineno, line):
        parts = line.split()
        if len(parts) != 2:
            raise GraphSpecError(f"expected two integers, got {line!r}", lineno, "line")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphSpecError(f"expected two integers, got {line!r}", lineno, "line") from None

    n, m = ints(*rows[0])
    if n < 0 or m < 0:
        raise GraphSpecError("negative count in header", rows[0][0], "line")
    if len(rows) - 1 != m:
        raise GraphSpecError(f"header promises {m} edges, found {len(rows) - 1}", rows[-1][0], "line")
    edges = []
    for lineno, line in rows[1:]:
        u, v = ints(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphSpecError(f"endpoint out of range 0..{n - 1}", lineno, "line")
        if u == v:
            raise GraphSpecError(f"loop edge at {u}", lineno, "line")
        edges.append((u, v))
    return make_graph(n, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.edge_count}"] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def to_dot(G: Graph, labels: list[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        lab = labels[v] if labels else str(v)
        lines.append(f'  {v} [label="{lab}"];')
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def subset_labels(configs) -> list[str]:
    return [fmt_subset(m) for m in configs]


# -- GraphSpec ----------------------------------------------------------------

_FAMILIES = {
    "path": ("path", 1),
    "cycle": ("cycle", 1),
    "complete": ("complete", 1),
    "biclique": ("complete_bipartite", 2),
    "star": ("star", 1),
    "dtree": ("diameter_tree", 2),
}
_FAMILY_RE = re.compile(r"([a-z]+):(.*)")


def parse_graph_spec(spec: str, stdin: TextIO | None = None) -> Graph:
    """``family:params``, ``-`` (edge list on stdin), an edge-list file path, or graph6."""
    if spec == "-":
        return parse_edge_list((stdin or sys.stdin).read())
    m = _FAMILY_RE.fullmatch(spec)
    if m and m.group(1) in _FAMILIES:
        kind, arity = _FAMILIES[m.group(1)]
        raw = m.group(2)
        offset = len(m.group(1)) + 1
        pieces = raw.split("x") if arity > 1 else [raw]
        if len(pieces) != arity:
            raise GraphSpecError(f"{m.group(1)} takes {arity} parameter(s) separated by 'x'", offset)
        params = []
        pos = offset
        for piece in pieces:
            if not piece.isdigit():
                raise GraphSpecError(f"expected a non-negative integer, got {piece!r}", pos)
            params.append(int(piece))
            pos += len(piece) + 1
        try:
            return family(kind, *params)
        except ValueError as exc:
            raise GraphSpecError(str(exc), offset) from None
    if m:
        raise GraphSpecError(f"unknown family {m.group(1)!r}; known: {', '.join(_FAMILIES)}", 0)
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        if spec.endswith(".g6"):
            first = text.strip().splitlines()[0] if text.strip() else ""
            return from_graph6(first)
        return parse_edge_list(text)
    return from_graph6(spec)
