"""Plain-text graph and vertex-set files.

Graph files are line oriented::

    c optional comment
    p <n> <edge-count>
    e <u> <v>
    ...

Vertex ids are 0-indexed. Blank lines and ``c`` lines are ignored anywhere.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import ParseError
from .graph import Graph


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    n = expected = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <edge-count>'", lineno)
            n, expected = _int(parts[1], lineno), _int(parts[2], lineno)
            if n < 0 or expected < 0:
                raise ParseError("negative count in header", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before header", lineno)
            if len(parts) != 3:
                raise ParseError("edge must be 'e <u> <v>'", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {key}", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p' header")
    if len(edges) != expected:
        raise ParseError(f"header announces {expected} edges, found {len(edges)}")
    return Graph(n, edges)


def emit_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {line}" for line in comments]
    lines.append(f"p {g.n} {g.number_of_edges()}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_node_set(text: str) -> frozenset[int]:
    """One vertex id per line; ``#`` starts a comment."""
    out = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.add(_int(body, lineno))
    return frozenset(out)


def emit_node_set(c: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in sorted(c))
