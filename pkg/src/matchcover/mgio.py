"""Reader and writer for the ``.mg`` text graph format.

::

    # optional comment lines
    mg 1
    n 4
    e 0 1
    e 0 1      <- repeated lines are parallel edges

Indices are 0-based.  Loops, out-of-range indices and unknown directives are
rejected with :class:`MGFormatError`.
"""

from __future__ import annotations

from pathlib import Path

from .graph import MultiGraph


class MGFormatError(ValueError):
    pass


def parse_mg(text: str) -> MultiGraph:
    version_seen = False
    n = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "mg":
            if version_seen or len(parts) != 2 or parts[1] != "1":
                raise MGFormatError(f"line {lineno}: bad header {line!r}")
            version_seen = True
        elif not version_seen:
            raise MGFormatError(f"line {lineno}: expected 'mg 1' header first")
        elif tag == "n":
            if n is not None or len(parts) != 2:
                raise MGFormatError(f"line {lineno}: bad vertex count {line!r}")
            n = _int(parts[1], lineno)
            if n < 0:
                raise MGFormatError(f"line {lineno}: negative vertex count")
        elif tag == "e":
            if n is None:
                raise MGFormatError(f"line {lineno}: edge before vertex count")
            if len(parts) != 3:
                raise MGFormatError(f"line {lineno}: bad edge {line!r}")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if u == v:
                raise MGFormatError(f"line {lineno}: loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise MGFormatError(f"line {lineno}: index out of range in {line!r}")
            edges.append((u, v))
        else:
            raise MGFormatError(f"line {lineno}: unknown directive {tag!r}")
    if not version_seen:
        raise MGFormatError("missing 'mg 1' header")
    if n is None:
        raise MGFormatError("missing vertex count")
    return MultiGraph(n, tuple(edges))


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MGFormatError(f"line {lineno}: not an integer: {tok!r}") from None


def format_mg(g: MultiGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("mg 1")
    lines.append(f"n {g.n}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_mg(path) -> MultiGraph:
    return parse_mg(Path(path).read_text(encoding="ascii"))


def write_mg(path, g: MultiGraph, comment: str | None = None) -> None:
    Path(path).write_text(format_mg(g, comment), encoding="ascii", newline="\n")
