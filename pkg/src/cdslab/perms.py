"""Permutations, context-directed swaps (cds), and derived representations.

A permutation of n is stored 1-based as a tuple of the values 1..n. The
framed form prepends 0 and appends n+1. Pointer i (0 <= i <= n) sits between
the values i and i+1; pointers 0 and n are the roots and cannot be used in a
swap. Pointer i occurs twice in the framed permutation: right of the value i
and left of the value i+1. In the gap after framed position k, the right
pointer of framed[k] comes before the left pointer of framed[k+1]; with two
slots per gap, pointer occurrences get slots 2k and 2k+1. Two pointers
overlap iff their occurrence slots strictly alternate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import f2, graphs
from .errors import ContractError, InvalidMoveError

__all__ = [
    "Permutation",
    "CycleNotation",
    "CycleGraph",
    "StrategicPile",
    "block_interchange",
    "pointer_slots",
    "cds_contexts",
    "apply_cds",
    "cycle_notation",
    "cycle_graph",
    "strategic_pile",
    "is_cds_sortable",
    "overlap_graph",
    "move_graph",
    "alternating_cycles",
    "alternating_cycle_vectors",
    "precedence_matrix",
    "sort_moves",
]


class Permutation:
    """Immutable permutation of {1..n} in one-line notation."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int]):
        elems = tuple(int(x) for x in elements)
        n = len(elems)
        if sorted(elems) != list(range(1, n + 1)):
            raise ContractError(
                f"not a permutation of 1..{n}: {list(elems)!r}"
            )
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def is_identity(self) -> bool:
        return self.elements == tuple(range(1, self.n + 1))

    def framed(self) -> tuple[int, ...]:
        return (0,) + self.elements + (self.n + 1,)

    def positions(self) -> list[int]:
        """positions()[v] = index of value v in the framed permutation."""
        pos = [0] * (self.n + 2)
        for i, v in enumerate(self.framed()):
            pos[v] = i
        return pos

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> int:
        return self.elements[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Permutation({list(self.elements)})"


def block_interchange(
    pi: Permutation, first: tuple[int, int], second: tuple[int, int]
) -> Permutation:
    """Swap two non-overlapping blocks given as 1-based inclusive position
    ranges, the first block strictly left of the second."""
    i, j = first
    k, l = second
    n = pi.n
    if not (1 <= i <= j <= n and 1 <= k <= l <= n):
        raise ContractError(f"block bounds out of range: {first}, {second}")
    if not j < k:
        raise ContractError(
            f"blocks must be disjoint and ordered, got {first} before {second}"
        )
    a = pi.elements
    out = a[: i - 1] + a[k - 1 : l] + a[j : k - 1] + a[i - 1 : j] + a[l:]
    return Permutation(out)


def pointer_slots(pi: Permutation) -> tuple[tuple[int, int], ...]:
    """Occurrence slots (lo, hi) of each pointer 0..n, per the gap scheme."""
    pos = pi.positions()
    out = []
    for i in range(pi.n + 1):
        right = 2 * pos[i]
        left = 2 * pos[i + 1] - 1
        out.append((right, left) if right < left else (left, right))
    return tuple(out)


def _alternate(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def cds_contexts(pi: Permutation) -> list[tuple[int, int]]:
    """Usable contexts: non-root pointer pairs (p, q), p < q, that alternate."""
    slots = pointer_slots(pi)
    n = pi.n
    return [
        (p, q)
        for p in range(1, n - 1)
        for q in range(p + 1, n)
        if _alternate(slots[p], slots[q])
    ]


def apply_cds(pi: Permutation, p: int, q: int) -> Permutation:
    """Context-directed swap on pointers p and q (0-based pointer indices;
    pointer i is the value pair (i, i+1)).

    With the four occurrence slots in order p1 < q1 < p2 < q2, the blocks
    between p1..q1 and p2..q2 trade places.
    """
    n = pi.n
    if not (1 <= p <= n - 1 and 1 <= q <= n - 1):
        raise InvalidMoveError(
            f"pointers ({p}, {q}) must be non-root: 1..{n - 1}"
        )
    if p == q:
        raise InvalidMoveError("a context needs two distinct pointers")
    slots = pointer_slots(pi)
    if not _alternate(slots[p], slots[q]):
        raise InvalidMoveError(
            f"pointers {p} and {q} do not alternate in {list(pi.elements)!r}; "
            "the occurrence pattern must be p..q..p..q"
        )
    cuts = sorted((*slots[p], *slots[q]))
    g1, g2, g3, g4 = (s // 2 for s in cuts)
    framed = pi.framed()
    head = framed[: g1 + 1]
    block1 = framed[g1 + 1 : g2 + 1]
    middle = framed[g2 + 1 : g3 + 1]
    block2 = framed[g3 + 1 : g4 + 1]
    tail = framed[g4 + 1 :]
    out = head + block2 + middle + block1 + tail
    return Permutation(out[1:-1])


@dataclass(frozen=True)
class CycleNotation:
    """The composed cycle map on {0..n}: first the +1 rotation, then the
    inverse walk of the framed permutation."""

    mapping: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]


def cycle_notation(pi: Permutation) -> CycleNotation:
    n = pi.n
    # rot(i) = i + 1 mod n+1; walk sends a_n -> a_(n-1) -> ... -> a_1 -> 0
    # and 0 -> a_n. The composite applies rot first.
    walk = [0] * (n + 1)
    seq = (0,) + pi.elements  # 0, a_1, ..., a_n
    for idx in range(n + 1):
        walk[seq[(idx + 1) % (n + 1)]] = seq[idx]
    mapping = tuple(walk[(i + 1) % (n + 1)] for i in range(n + 1))
    seen = [False] * (n + 1)
    cycles = []
    for start in range(n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        cur = mapping[start]
        while cur != start:
            seen[cur] = True
            cyc.append(cur)
            cur = mapping[cur]
        cycles.append(tuple(cyc))
    return CycleNotation(mapping=mapping, cycles=tuple(cycles))


@dataclass(frozen=True)
class CycleGraph:
    """Vertices 0..n+1 with undirected consecutive-value edges and the
    directed chain n+1 -> a_n -> ... -> a_1 -> 0."""

    n: int
    value_edges: tuple[tuple[int, int], ...]
    chain_edges: tuple[tuple[int, int], ...]


def cycle_graph(pi: Permutation) -> CycleGraph:
    n = pi.n
    value_edges = tuple((i, i + 1) for i in range(n + 1))
    seq = (n + 1,) + tuple(reversed(pi.elements)) + (0,)
    chain_edges = tuple((seq[i], seq[i + 1]) for i in range(n + 1))
    return CycleGraph(n=n, value_edges=value_edges, chain_edges=chain_edges)


@dataclass(frozen=True)
class StrategicPile:
    """Elements trapped between n and 0 in the cycle of the composed map."""

    ordered: tuple[int, ...]

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.ordered)

    @property
    def is_empty(self) -> bool:
        return not self.ordered

    def __len__(self) -> int:
        return len(self.ordered)


def strategic_pile(pi: Permutation) -> StrategicPile:
    """Walk the cycle containing n from n until 0; empty when 0 is not in
    that cycle (equivalently, when nothing separates n from 0)."""
    n = pi.n
    note = cycle_notation(pi)
    mapping = note.mapping
    cyc = None
    for c in note.cycles:
        if n in c:
            cyc = c
            break
    assert cyc is not None
    if 0 not in cyc:
        return StrategicPile(ordered=())
    pile = []
    cur = mapping[n]
    while cur != 0:
        pile.append(cur)
        cur = mapping[cur]
    return StrategicPile(ordered=tuple(pile))


def is_cds_sortable(pi: Permutation) -> bool:
    """A permutation sorts to the identity iff its strategic pile is empty."""
    return strategic_pile(pi).is_empty


def overlap_graph(pi: Permutation) -> graphs.RootedGraph:
    """Pointer-overlap graph: vertices are the n+1 pointers, the roots are
    pointers 0 and n, and two pointers are adjacent iff their occurrence
    slots strictly alternate."""
    slots = pointer_slots(pi)
    m = pi.n + 1
    rows = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if _alternate(slots[a], slots[b]):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return graphs.RootedGraph(f2.F2Matrix.from_row_bits(rows, m))


def move_graph(pi: Permutation) -> f2.F2Matrix:
    """Adjacency of the non-root pointers only: the central part of the
    overlap adjacency, an (n-1) x (n-1) matrix (vertex i is pointer i+1)."""
    if pi.n < 2:
        raise ContractError("move graph needs n >= 2")
    return f2.central_submatrix(overlap_graph(pi).adjacency, "both")


def alternating_cycles(pi: Permutation) -> tuple[tuple[int, ...], ...]:
    """Pointer sets of the composed-map cycles, each sorted ascending, listed
    by smallest member."""
    note = cycle_notation(pi)
    return tuple(sorted((tuple(sorted(c)) for c in note.cycles), key=min))


def alternating_cycle_vectors(pi: Permutation) -> list[f2.F2Vector]:
    """Characteristic vectors of the alternating cycles over the n+1
    pointers; they form an orthogonal basis of the overlap kernel."""
    m = pi.n + 1
    out = []
    for cyc in alternating_cycles(pi):
        bits = 0
        for v in cyc:
            bits |= 1 << v
        out.append(f2.F2Vector.from_bits(bits, m))
    return out


def precedence_matrix(pi: Permutation) -> f2.F2Matrix:
    """(n+2) x (n+2) matrix over the framed values: entry (r, c) is 1 iff
    value r appears before value c in the framed permutation."""
    pos = pi.positions()
    m = pi.n + 2
    rows = []
    for r in range(m):
        bits = 0
        pr = pos[r]
        for c in range(m):
            if pr < pos[c]:
                bits |= 1 << c
        rows.append(bits)
    return f2.F2Matrix.from_row_bits(rows, m)


def sort_moves(pi: Permutation) -> list[tuple[int, int]] | None:
    """Greedy sorting: repeatedly apply the lexicographically smallest
    context. Returns the move list when the walk ends at the identity, else
    None (swaps apply until no context is left either way)."""
    moves = []
    cur = pi
    while True:
        ctx = cds_contexts(cur)
        if not ctx:
            break
        p, q = ctx[0]
        moves.append((p, q))
        cur = apply_cds(cur, p, q)
    return moves if cur.is_identity else None
