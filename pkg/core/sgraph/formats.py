#!/usr/bin/env python3
"""
Line-oriented text format for 2-edge-colored graphs.

    # comment lines start with '#'
    signed <n>
    v <name>                 optional, declares names in id order
    e <name1> <name2> <+|->  one edge per line

Vertices without a declared name are called v0..v(n-1).
"""

import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import FormatError, GraphError
from core.sgraph.graph import Graph2EC, Sign, default_name

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterable[Tuple[int, List[str]]]:
    """Yield (line number, tokens) for every non-blank, non-comment line."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield line_no, line.split()


def parse_graph(text: str) -> Graph2EC:
    """Parse the graph format; every problem is reported with its line number."""
    n: Optional[int] = None
    names: List[str] = []
    index: Dict[str, int] = {}
    edges: Dict[Tuple[int, int], Sign] = {}
    seen_edges = False

    for line_no, tokens in _content_lines(text):
        keyword = tokens[0]
        if n is None:
            if keyword != 'signed' or len(tokens) != 2:
                raise FormatError("expected header 'signed <n>'", line_no)
            try:
                n = int(tokens[1])
            except ValueError:
                raise FormatError(f"vertex count {tokens[1]!r} is not an integer", line_no) from None
            if n < 0:
                raise FormatError("vertex count must be non-negative", line_no)
            index = {default_name(v): v for v in range(n)}
            continue

        if keyword == 'v':
            if len(tokens) != 2:
                raise FormatError("expected 'v <name>'", line_no)
            if seen_edges:
                raise FormatError("vertex names must precede edges", line_no)
            if len(names) >= n:
                raise FormatError(f"more than {n} vertex names declared", line_no)
            name = tokens[1]
            if name in names:
                raise FormatError(f"duplicate vertex name {name!r}", line_no)
            names.append(name)
            # declared names shadow the automatic ones from here on
            index = _name_index(names, n)
        elif keyword == 'e':
            if len(tokens) != 4:
                raise FormatError("expected 'e <name1> <name2> <+|->'", line_no)
            seen_edges = True
            a, b, token = tokens[1:]
            try:
                u, v = index[a], index[b]
            except KeyError as e:
                raise FormatError(f"unknown vertex {e.args[0]!r}", line_no) from None
            try:
                sign = Sign.parse(token)
            except GraphError as e:
                raise FormatError(str(e), line_no) from None
            if u == v:
                raise FormatError(f"loop at vertex {a!r}", line_no)
            key = (min(u, v), max(u, v))
            if key in edges:
                what = "duplicate edge" if edges[key] is sign else "digon"
                raise FormatError(f"{what} between {a!r} and {b!r}", line_no)
            edges[key] = sign
        else:
            raise FormatError(f"unknown line type {keyword!r}", line_no)

    if n is None:
        raise FormatError("missing header 'signed <n>'")
    full_names = names + [default_name(v) for v in range(len(names), n)]
    try:
        return Graph2EC(n, tuple((u, v, s) for (u, v), s in edges.items()), tuple(full_names))
    except GraphError as e:
        raise FormatError(str(e)) from None


def _name_index(names: Sequence[str], n: int) -> Dict[str, int]:
    full = list(names) + [default_name(v) for v in range(len(names), n)]
    return {name: v for v, name in enumerate(full)}


def serialize_graph(g: Graph2EC, comments: Sequence[str] = ()) -> str:
    """Canonical text: comments, header, names (only if not the defaults), sorted edges."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"signed {g.n}")
    if any(name != default_name(v) for v, name in enumerate(g.names)):
        lines.extend(f"v {name}" for name in g.names)
    lines.extend(f"e {g.names[u]} {g.names[v]} {s.token}" for u, v, s in g.edges)
    return "\n".join(lines) + "\n"


def read_source(path: PathLike) -> str:
    """Text of an input file; undecodable bytes are a format error."""
    try:
        return Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise FormatError(f"{path} is not valid UTF-8 (byte {e.start})") from None


def read_graph(path: PathLike) -> Graph2EC:
    logger.info(f"Reading graph from {path}")
    return parse_graph(read_source(path))


def write_graph(path: PathLike, g: Graph2EC, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(serialize_graph(g, comments), encoding='utf-8')
    logger.info(f"Saved graph with {g.n} vertices and {g.m} edges to: {path}")
