"""Brute-force reference implementations, built from definitions only.

Nothing here calls into the analytic modules: moves are applied by cutting
and swapping blocks, sortability is decided by exhaustive search, ranks and
feasibility come from a local elimination routine, and move graphs are
rebuilt by scanning pointer occurrences. The point is that the two sides
can adjudicate each other at small sizes.

Searches memoize by exact state. Move relations here strictly shrink an
invariant, so the state graph is acyclic; a cycle guard raises instead of
looping if that ever failed to hold.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContractError, InternalInvariantError, SizeLimitError
from .f2 import F2Matrix
from .graphs import RootedGraph
from .perms import Permutation

__all__ = [
    "SearchStats",
    "cds_sortable_bruteforce",
    "cds_sortable_search",
    "gcds_sortable_bruteforce",
    "gcds_sortable_search",
    "gcds_fixed_point_profile",
    "census_bruteforce",
    "parity_cuts_bruteforce",
    "n0_bruteforce",
    "move_graph_bruteforce",
    "realizable_bruteforce",
]

SEARCH_LIMIT = 8
CENSUS_LIMIT = 7
CUTS_LIMIT = 16
N0_LIMIT = 5
REALIZE_LIMIT = 6

_FLAVORS = ("two_sided_root_even", "two_sided_general", "generalized")


@dataclass(frozen=True)
class SearchStats:
    """Exhaustive-search outcome with its size telemetry."""

    states_visited: int
    max_depth: int
    result: bool | int


# ---------------------------------------------------------------------------
# permutations: occurrences, contexts, block swap


def _occurrences(framed: tuple[int, ...]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Occurrence positions of each pointer (i, i+1) along the framed word.

    An occurrence sits in the gap after a word position; within one gap the
    occurrence belonging to the left element precedes the one belonging to
    the right element. Keys (gap, side) compare lexicographically.
    """
    pos = {v: i for i, v in enumerate(framed)}
    n = len(framed) - 2
    return [
        ((pos[p], 0), (pos[p + 1] - 1, 1)) for p in range(n + 1)
    ]


def _interleaved(a: tuple, b: tuple) -> bool:
    a0, a1 = sorted(a)
    b0, b1 = sorted(b)
    return a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1


def _swap_blocks(framed: tuple[int, ...], occ_p, occ_q) -> tuple[int, ...]:
    cuts = sorted(key[0] + 1 for key in (*occ_p, *occ_q))
    c1, c2, c3, c4 = cuts
    return (
        framed[:c1] + framed[c3:c4] + framed[c2:c3] + framed[c1:c2] + framed[c4:]
    )


def _perm_children(state: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(state)
    framed = (0, *state, n + 1)
    occ = _occurrences(framed)
    children = []
    for p in range(1, n):
        for q in range(p + 1, n):
            if _interleaved(occ[p], occ[q]):
                new = _swap_blocks(framed, occ[p], occ[q])
                children.append(new[1:-1])
    return children


_CDS_MEMO: dict[tuple[int, ...], bool] = {}


def _cds_sortable(state: tuple[int, ...], path: set[tuple[int, ...]]) -> bool:
    cached = _CDS_MEMO.get(state)
    if cached is not None:
        return cached
    if state in path:
        raise InternalInvariantError("swap moves formed a cycle")
    if state == tuple(range(1, len(state) + 1)):
        result = True
    else:
        path.add(state)
        result = any(_cds_sortable(child, path) for child in _perm_children(state))
        path.remove(state)
    _CDS_MEMO[state] = result
    return result


def cds_sortable_bruteforce(pi: Permutation) -> bool:
    """Whether the identity is reachable by swap moves; memoized search."""
    if len(pi) > SEARCH_LIMIT:
        raise SizeLimitError(f"search limited to n <= {SEARCH_LIMIT}, got {len(pi)}")
    return _cds_sortable(tuple(pi), set())


def cds_sortable_search(pi: Permutation) -> SearchStats:
    """Breadth-first exploration of every permutation reachable by swaps."""
    n = len(pi)
    if n > SEARCH_LIMIT:
        raise SizeLimitError(f"search limited to n <= {SEARCH_LIMIT}, got {n}")
    target = tuple(range(1, n + 1))
    start = tuple(pi)
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier:
        nxt = []
        for state in frontier:
            for child in _perm_children(state):
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        if nxt:
            depth += 1
        frontier = nxt
    return SearchStats(len(seen), depth, target in seen)


# ---------------------------------------------------------------------------
# graphs: definitional move application and search


def _graph_contexts(rows: tuple[int, ...]) -> list[tuple[int, int]]:
    n = len(rows)
    return [
        (p, q)
        for p in range(1, n - 1)
        for q in range(p + 1, n - 1)
        if (rows[p] >> q) & 1
    ]


def _apply_gcds(rows: tuple[int, ...], p: int, q: int) -> tuple[int, ...]:
    n = len(rows)
    fp, fq = rows[p], rows[q]
    out = []
    for u in range(n):
        if u in (p, q):
            out.append(0)
            continue
        new = 0
        for v in range(n):
            if v == u or v in (p, q):
                continue
            s = (
                ((fp >> u) & 1) * ((fq >> v) & 1)
                + ((fq >> u) & 1) * ((fp >> v) & 1)
                + ((rows[u] >> v) & 1)
            )
            new |= (s & 1) << v
        out.append(new)
    return tuple(out)


_GCDS_MEMO: dict[tuple[int, ...], bool] = {}


def _gcds_sortable(rows: tuple[int, ...], path: set[tuple[int, ...]]) -> bool:
    cached = _GCDS_MEMO.get(rows)
    if cached is not None:
        return cached
    if rows in path:
        raise InternalInvariantError("graph moves formed a cycle")
    if not any(rows):
        result = True
    else:
        path.add(rows)
        result = any(
            _gcds_sortable(_apply_gcds(rows, p, q), path)
            for p, q in _graph_contexts(rows)
        )
        path.remove(rows)
    _GCDS_MEMO[rows] = result
    return result


def gcds_sortable_bruteforce(g: RootedGraph) -> bool:
    """Whether the edgeless graph is reachable by moves; memoized search."""
    if g.n > SEARCH_LIMIT:
        raise SizeLimitError(f"search limited to n <= {SEARCH_LIMIT}, got {g.n}")
    return _gcds_sortable(g.adjacency.rows, set())


def gcds_sortable_search(g: RootedGraph) -> SearchStats:
    """Breadth-first exploration of every graph reachable by moves."""
    if g.n > SEARCH_LIMIT:
        raise SizeLimitError(f"search limited to n <= {SEARCH_LIMIT}, got {g.n}")
    start = g.adjacency.rows
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier:
        nxt = []
        for rows in frontier:
            for p, q in _graph_contexts(rows):
                child = _apply_gcds(rows, p, q)
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        if nxt:
            depth += 1
        frontier = nxt
    return SearchStats(len(seen), depth, tuple(0 for _ in start) in seen)


_PROFILE_MEMO: dict[tuple[int, ...], frozenset[tuple[int, bool]]] = {}


def _profile(rows: tuple[int, ...], path: set) -> frozenset[tuple[int, bool]]:
    cached = _PROFILE_MEMO.get(rows)
    if cached is not None:
        return cached
    if rows in path:
        raise InternalInvariantError("graph moves formed a cycle")
    contexts = _graph_contexts(rows)
    if not contexts:
        result = frozenset({(0, not any(rows))})
    else:
        path.add(rows)
        acc = set()
        for p, q in contexts:
            for length, edgeless in _profile(_apply_gcds(rows, p, q), path):
                acc.add((length + 1, edgeless))
        path.remove(rows)
        result = frozenset(acc)
    _PROFILE_MEMO[rows] = result
    return result


def gcds_fixed_point_profile(g: RootedGraph) -> frozenset[tuple[int, bool]]:
    """All (length, ends-edgeless) pairs over maximal move sequences from g.

    A maximal sequence applies moves until no context remains. The profile
    collects every achievable (number of moves, final graph is edgeless)
    pair; sequence lengths are expected to be an invariant of g.
    """
    if g.n > SEARCH_LIMIT:
        raise SizeLimitError(f"search limited to n <= {SEARCH_LIMIT}, got {g.n}")
    return _profile(g.adjacency.rows, set())


# ---------------------------------------------------------------------------
# local elimination: consistency and rank


def _consistent(equations: list[int], n: int) -> bool:
    """Solvability of a GF(2) system; bit n of each equation is its rhs."""
    rhs_bit = 1 << n
    basis: dict[int, int] = {}
    for eq in equations:
        cur = eq
        while cur & (rhs_bit - 1):
            lead = (cur & (rhs_bit - 1)).bit_length() - 1
            other = basis.get(lead)
            if other is None:
                basis[lead] = cur
                cur = 0
                break
            cur ^= other
        if cur == rhs_bit:
            return False
    return True


def _rows_rank(rows) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        cur = row
        while cur:
            lead = cur.bit_length() - 1
            other = basis.get(lead)
            if other is None:
                basis[lead] = cur
                break
            cur ^= other
    return len(basis)


def _kernel_reaches_ends(rows: tuple[int, ...], n: int) -> bool:
    """Sortability criterion, rechecked as two feasibility problems:
    some kernel vector is 1 at the first root and 0 at the last, and some
    other is 0 at the first and 1 at the last."""
    base = [r for r in rows]  # homogeneous: rhs bit stays 0
    first, last = 1 << 0, 1 << (n - 1)
    rhs = 1 << n
    pin_a = base + [first | rhs, last]
    pin_b = base + [first, last | rhs]
    return _consistent(pin_a, n) and _consistent(pin_b, n)


# ---------------------------------------------------------------------------
# censuses


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _census_chunk(n: int, eulerian: bool, start: int, stop: int) -> int:
    pairs = _edge_pairs(n)
    count = 0
    for mask in range(start, stop):
        rows = [0] * n
        m = mask
        for u, v in pairs:
            if m & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
        if eulerian and any(r.bit_count() & 1 for r in rows):
            continue
        if _kernel_reaches_ends(tuple(rows), n):
            count += 1
    return count


def census_bruteforce(n: int, eulerian: bool = False, threads: int = 1) -> int:
    """Count sortable two-rooted graphs on n vertices by full enumeration.

    Iterates all 2^(n(n-1)/2) labeled graphs with roots pinned first/last;
    each graph is tested by the kernel criterion (recomputed locally), which
    the exhaustive move search validates elsewhere at n <= 6.
    """
    if n < 2:
        raise ContractError(f"census needs n >= 2, got {n}")
    if n > CENSUS_LIMIT:
        raise SizeLimitError(f"census limited to n <= {CENSUS_LIMIT}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    if threads <= 1:
        return _census_chunk(n, eulerian, 0, total)
    bounds = [total * i // (threads * 4) for i in range(threads * 4 + 1)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_census_chunk, n, eulerian, lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
            if lo < hi
        ]
        return sum(f.result() for f in futures)


def parity_cuts_bruteforce(
    g: RootedGraph, flavor: str = "two_sided_root_even"
) -> list[frozenset[int]]:
    """All vertex subsets passing the flavor's definition, by full scan.

    Flavors: "generalized" asks that every vertex has an even number of
    neighbors inside the subset; the two-sided flavors ask that vertices
    have even degree across the bipartition, at every vertex
    ("two_sided_root_even") or at non-roots only ("two_sided_general").
    """
    if flavor not in _FLAVORS:
        raise ContractError(f"unknown parity-cut flavor {flavor!r}")
    n = g.n
    if n > CUTS_LIMIT:
        raise SizeLimitError(f"cut scan limited to n <= {CUTS_LIMIT}, got {n}")
    rows = g.adjacency.rows
    full = (1 << n) - 1
    skip = {0, n - 1} if flavor == "two_sided_general" else set()
    out = []
    for mask in range(1 << n):
        ok = True
        for v in range(n):
            if flavor == "generalized":
                cross = rows[v] & mask
            elif v in skip:
                continue
            else:
                side = mask if not (mask >> v) & 1 else full & ~mask
                cross = rows[v] & side
            if cross.bit_count() & 1:
                ok = False
                break
        if ok:
            out.append(frozenset(v for v in range(n) if (mask >> v) & 1))
    return out


def n0_bruteforce(t: int, r: int) -> int:
    """Count symmetric zero-diagonal t x t matrices of rank r by enumeration."""
    if t < 0 or r < 0:
        raise ContractError(f"sizes must be nonnegative, got t={t}, r={r}")
    if t > N0_LIMIT:
        raise SizeLimitError(f"enumeration limited to t <= {N0_LIMIT}, got {t}")
    pairs = _edge_pairs(t)
    count = 0
    for mask in range(1 << len(pairs)):
        rows = [0] * t
        m = mask
        for u, v in pairs:
            if m & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
        if _rows_rank(rows) == r:
            count += 1
    return count


# ---------------------------------------------------------------------------
# move-graph realization


def _move_graph_rows(values: tuple[int, ...]) -> tuple[int, ...]:
    n = len(values)
    framed = (0, *values, n + 1)
    occ = _occurrences(framed)
    rows = [0] * (n - 1)
    for p in range(1, n):
        for q in range(p + 1, n):
            if _interleaved(occ[p], occ[q]):
                rows[p - 1] |= 1 << (q - 1)
                rows[q - 1] |= 1 << (p - 1)
    return tuple(rows)


def move_graph_bruteforce(pi: Permutation) -> F2Matrix:
    """Pairwise-interleaving graph of the non-root pointers, from scratch."""
    if len(pi) < 2:
        raise ContractError("move graphs need permutations of length >= 2")
    return F2Matrix.from_row_bits(_move_graph_rows(tuple(pi)), len(pi) - 1)


@lru_cache(maxsize=None)
def _move_graph_table(length: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for values in itertools.permutations(range(1, length + 1)):
        table.setdefault(_move_graph_rows(values), values)
    return table


def realizable_bruteforce(m: F2Matrix) -> Permutation | None:
    """First permutation (in one-line lexicographic order) whose move graph
    equals m, or None; decided by scanning all (k+1)! permutations."""
    if not m.is_square:
        raise ContractError(f"move-graph instance must be square, got {m.shape}")
    if not m.is_symmetric() or not m.is_zero_diagonal():
        raise ContractError("move-graph instance must be symmetric with zero diagonal")
    length = m.nrows + 1
    if length > REALIZE_LIMIT:
        raise SizeLimitError(
            f"realization scan limited to permutations of length <= {REALIZE_LIMIT}"
        )
    witness = _move_graph_table(length).get(m.rows)
    return None if witness is None else Permutation(witness)
