"""Text formats for matrices, permutations, and two-rooted graphs.

Matrix: one row per line of '0'/'1' characters with no separators; a blank
line or end of input terminates. Permutation: integers separated by
whitespace or commas, with optional surrounding brackets. Graph: either a
header line "n root1 root2" followed by one "u v" edge per line, all
1-based, or an adjacency matrix in the matrix format with the roots
implicitly first and last.
"""
from __future__ import annotations

from .errors import ContractError
from .f2 import F2Matrix
from .graphs import RootedGraph
from .perms import Permutation

__all__ = [
    "parse_matrix",
    "format_matrix",
    "parse_permutation",
    "format_permutation",
    "parse_graph",
    "format_graph",
]


def _body_lines(text: str) -> list[str]:
    """Lines up to the first blank one, leading blanks skipped."""
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    body = []
    for line in lines:
        if not line:
            break
        body.append(line)
    return body


def parse_matrix(text: str) -> F2Matrix:
    """Parse the row-per-line '0'/'1' matrix format."""
    body = _body_lines(text)
    if not body:
        raise ContractError("empty matrix input")
    rows = []
    width = len(body[0])
    for line in body:
        if len(line) != width:
            raise ContractError(
                f"ragged matrix row {line!r}: expected width {width}"
            )
        if set(line) - {"0", "1"}:
            raise ContractError(f"matrix row {line!r} has characters other than 0/1")
        rows.append(int(line[::-1], 2) if line else 0)
    return F2Matrix.from_row_bits(rows, width)


def format_matrix(m: F2Matrix) -> str:
    lines = [
        "".join("1" if (r >> j) & 1 else "0" for j in range(m.ncols))
        for r in m.rows
    ]
    return "\n".join(lines) + "\n"


def parse_permutation(text: str) -> Permutation:
    """Parse integers separated by whitespace or commas, brackets optional."""
    s = text.strip()
    if s and s[0] in "[(" and s[-1] in ")]":
        s = s[1:-1]
    tokens = s.replace(",", " ").split()
    if not tokens:
        raise ContractError("empty permutation input")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise ContractError(f"permutation entries must be integers: {exc}") from None
    return Permutation(values)


def format_permutation(pi: Permutation) -> str:
    return "[" + ",".join(str(v) for v in pi) + "]"


def parse_graph(text: str) -> RootedGraph:
    """Parse the edge-list format (1-based) or an adjacency matrix."""
    body = _body_lines(text)
    if not body:
        raise ContractError("empty graph input")
    head = body[0].split()
    if len(head) == 1 and not set(head[0]) - {"0", "1"}:
        return RootedGraph(parse_matrix(text))
    if len(head) != 3:
        raise ContractError(
            "graph input must start with a 'n root1 root2' header or a 0/1 matrix row"
        )
    try:
        n, root1, root2 = (int(tok) for tok in head)
    except ValueError as exc:
        raise ContractError(f"graph header must be integers: {exc}") from None
    if not (1 <= root1 <= n and 1 <= root2 <= n):
        raise ContractError(f"roots ({root1}, {root2}) out of range for n={n}")
    edges = []
    for line in body[1:]:
        pair = line.split()
        if len(pair) != 2:
            raise ContractError(f"edge line {line!r} must be 'u v'")
        try:
            u, v = int(pair[0]), int(pair[1])
        except ValueError as exc:
            raise ContractError(f"edge endpoints must be integers: {exc}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u - 1, v - 1))
    return RootedGraph.from_edges(n, edges, root1 - 1, root2 - 1)


def format_graph(g: RootedGraph) -> str:
    """Edge-list text form; roots are vertex 1 and vertex n after pinning."""
    lines = [f"{g.n} 1 {g.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
