"""DIMACS ``edge`` format.

Files carry one ``p edge <n> <m>`` header and ``e <u> <v>`` lines with
1-based endpoints; ``c`` lines are comments. Writing always emits the
edges sorted, so ``write(read(write(g)))`` reproduces ``write(g)``.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import TextIO

from .errors import ContractViolation
from .graph import Graph


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ContractViolation(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ContractViolation(f"line {lineno}: expected 'p edge <n> <m>'")
            n, m = int(tokens[2]), int(tokens[3])
        elif tokens[0] == "e":
            if n is None:
                raise ContractViolation(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise ContractViolation(f"line {lineno}: expected 'e <u> <v>'")
            u, v = int(tokens[1]), int(tokens[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ContractViolation(f"line {lineno}: vertex out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise ContractViolation(f"line {lineno}: unknown line type {tokens[0]!r}")
    if n is None:
        raise ContractViolation("missing 'p edge' line")
    if len(edges) != m:
        raise ContractViolation(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_dimacs(g: Graph, comments: tuple[str, ...] = ()) -> str:
    out = io.StringIO()
    write_dimacs(g, out, comments)
    return out.getvalue()


def write_dimacs(g: Graph, stream: TextIO, comments: tuple[str, ...] = ()) -> None:
    for c in comments:
        stream.write(f"c {c}\n")
    stream.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edges:
        stream.write(f"e {u + 1} {v + 1}\n")


def read_dimacs(path: str | Path) -> Graph:
    return parse_dimacs(Path(path).read_text())


def save_dimacs(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_dimacs(g))
