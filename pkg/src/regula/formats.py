"""Text formats for graphs, colorings and factors.

Graph stanza::

    p <n> <m>
    e <u> <v>        (m lines, 0-based, a loop is ``e u u``)

Stanzas in a stream are separated by blank lines.  Lines starting with
``#`` are comments.  Colorings are ``c <edge_id> <color>`` lines and
factors are ``f <edge_id>`` lines.
"""

from __future__ import annotations

import io
import sys
from typing import Iterable, Iterator, TextIO

from .errors import ParseError
from .graph import Pseudograph


def format_graph(g: Pseudograph) -> str:
    lines = [f"p {g.vertex_count} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_graphs(graphs: Iterable[Pseudograph]) -> str:
    return "\n".join(format_graph(g) for g in graphs)


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def iter_graphs(lines: Iterable[str]) -> Iterator[Pseudograph]:
    """Parse a stream of stanzas."""
    header = None
    edges: list[tuple[int, int]] = []
    header_line = 0
    lineno = 0

    def finish():
        n, m = header
        if len(edges) != m:
            raise ParseError(f"header announces {m} edges but stanza has {len(edges)}", header_line)
        return Pseudograph(n, tuple(edges))

    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if header is not None:
                yield finish()
                header, edges = None, []
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if header is not None:
                raise ParseError("duplicate 'p' header in stanza", lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", lineno)
            n, m = _int(parts[1], lineno), _int(parts[2], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
            header, header_line = (n, m), lineno
        elif tag == "e":
            if header is None:
                raise ParseError("edge line before 'p' header", lineno)
            if len(parts) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
            if len(edges) >= header[1]:
                raise ParseError(f"more than {header[1]} edges in stanza", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown line tag {tag!r}", lineno)
    if header is not None:
        yield finish()


def parse_graphs(text: str) -> list[Pseudograph]:
    return list(iter_graphs(io.StringIO(text)))


def parse_graph(text: str) -> Pseudograph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def open_text(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def read_graphs(path: str) -> list[Pseudograph]:
    fh = open_text(path)
    try:
        return list(iter_graphs(fh))
    finally:
        if fh is not sys.stdin:
            fh.close()


def read_graph(path: str) -> Pseudograph:
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise ParseError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


# -- colorings and factors -------------------------------------------------


# solver output starts with a status line; accepting it lets `solve | verify` compose
_STATUS_LINES = {"SAT"}


def format_coloring(colors) -> str:
    return "".join(f"c {eid} {col}\n" for eid, col in enumerate(colors))


def parse_coloring(text: str) -> dict[int, int]:
    """Edge id -> color.  Duplicate edge ids are rejected."""
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line in _STATUS_LINES:
            continue
        parts = line.split()
        if parts[0] != "c" or len(parts) != 3:
            raise ParseError("coloring line must be 'c <edge_id> <color>'", lineno)
        eid, col = _int(parts[1], lineno), _int(parts[2], lineno)
        if eid in out:
            raise ParseError(f"edge {eid} colored twice", lineno)
        if col < 1:
            raise ParseError("colors are positive integers", lineno)
        out[eid] = col
    return out


def format_factor(edge_ids) -> str:
    return "".join(f"f {eid}\n" for eid in sorted(edge_ids))


def parse_factor(text: str) -> list[int]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line in _STATUS_LINES:
            continue
        parts = line.split()
        if parts[0] != "f" or len(parts) != 2:
            raise ParseError("factor line must be 'f <edge_id>'", lineno)
        out.append(_int(parts[1], lineno))
    if len(set(out)) != len(out):
        raise ParseError("duplicate edge id in factor")
    return out
