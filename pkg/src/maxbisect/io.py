"""Reading and writing graphs.

Native edge-list format (0-based):

    # optional comment lines
    n m
    u v          (exactly m lines)

DIMACS-style input is also accepted: ``c`` comment lines, one ``p edge n m``
header, then ``e u v`` lines with 1-based vertex ids, converted on read.
The writer always emits the native 0-based format with edges in canonical
order, so parse(write(g)) == g.
"""

from __future__ import annotations

import os
from typing import IO, Iterator

import numpy as np

from maxbisect.graph import Graph, new_graph


def _data_lines(handle: IO[str], comment: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield lineno, line


def parse_graph(handle: IO[str]) -> Graph:
    """Parse a graph from an open text stream, auto-detecting the format."""
    header: tuple[int, str] | None = None
    for lineno, line in _data_lines(handle, comment="#"):
        header = (lineno, line)
        break
    if header is None:
        raise ValueError("empty graph file: expected an 'n m' or 'p edge n m' header")
    lineno, line = header
    if line.startswith(("p ", "p\t")) or line.startswith("c ") or line == "c":
        return _parse_dimacs(handle, lineno, line)
    return _parse_native(handle, lineno, line)


def _parse_native(handle: IO[str], lineno: int, header: str) -> Graph:
    fields = header.split()
    if len(fields) != 2:
        raise ValueError(f"line {lineno}: header must be 'n m', got {header!r}")
    n, m = _int_fields(fields, lineno)
    edges = _read_edge_lines(_data_lines(handle, comment="#"), m, base=0)
    return new_graph(n, edges)


def _parse_dimacs(handle: IO[str], lineno: int, first: str) -> Graph:
    lines = _data_lines(handle, comment="c")
    if first.startswith("p"):
        n, m = _dimacs_header(first, lineno)
    else:
        for lineno, line in lines:
            n, m = _dimacs_header(line, lineno)
            break
        else:
            raise ValueError("DIMACS input has no 'p edge n m' header")
    edges = _read_edge_lines(lines, m, base=1, prefix="e")
    return new_graph(n, edges)


def _dimacs_header(line: str, lineno: int) -> tuple[int, int]:
    fields = line.split()
    if len(fields) != 4 or fields[0] != "p":
        raise ValueError(f"line {lineno}: malformed DIMACS header {line!r}")
    return _int_fields(fields[2:], lineno)


def _int_fields(fields: list[str], lineno: int) -> tuple[int, int]:
    try:
        a, b = (int(f) for f in fields)
    except ValueError as exc:
        raise ValueError(f"line {lineno}: expected integers, got {fields}") from exc
    if a < 0 or b < 0:
        raise ValueError(f"line {lineno}: negative count in header")
    return a, b


def _read_edge_lines(
    rows: Iterator[tuple[int, str]], m: int, base: int, prefix: str | None = None
) -> np.ndarray:
    edges = np.empty((m, 2), dtype=np.int64)
    count = 0
    for lineno, line in rows:
        fields = line.split()
        if prefix is not None:
            if fields[0] != prefix:
                raise ValueError(f"line {lineno}: expected '{prefix} u v', got {line!r}")
            fields = fields[1:]
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        if count >= m:
            raise ValueError(f"line {lineno}: more than the declared {m} edges")
        try:
            edges[count, 0] = int(fields[0]) - base
            edges[count, 1] = int(fields[1]) - base
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected integers, got {line!r}") from exc
        count += 1
    if count != m:
        raise ValueError(f"declared {m} edges but found {count}")
    return edges


def load_graph(path: str | os.PathLike[str]) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle)


def write_graph(handle: IO[str], g: Graph, comment: str | None = None) -> None:
    """Write g in the native 0-based format, edges in canonical order."""
    if comment:
        for line in comment.splitlines():
            handle.write(f"# {line}\n")
    handle.write(f"{g.n} {g.m}\n")
    for u, v in zip(g.edges_u.tolist(), g.edges_v.tolist()):
        handle.write(f"{u} {v}\n")


def save_graph(path: str | os.PathLike[str], g: Graph, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        write_graph(handle, g, comment)
