"""Cross-check suites connecting the analytic code to the brute-force oracles.

Each suite re-derives one family of results in two independent ways and
reports one :class:`CheckLine` per check. The ``verify`` command line
subcommand and the acceptance tests both run these suites, so the two stay
in lockstep.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import convert, counting, f2, formats, graphs, oracle, perms
from .errors import ContractError, InvalidMoveError

__all__ = [
    "CheckLine",
    "SuiteReport",
    "SUITE_NAMES",
    "available_suites",
    "eulerian_adjudication",
    "run_suite",
]


@dataclass(frozen=True)
class CheckLine:
    """One verification outcome: a named pass/fail with optional detail."""

    name: str
    passed: bool
    detail: str = ""

    def render(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class SuiteReport:
    """All check lines of one suite run, with the wall-clock time spent."""

    suite: str
    max_n: int | None
    checks: tuple[CheckLine, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [c.render() for c in self.checks]
        good = sum(c.passed for c in self.checks)
        lines.append(
            f"suite {self.suite}: {good}/{len(self.checks)} checks passed "
            f"in {self.elapsed:.2f}s"
        )
        return "\n".join(lines)

    def to_json(self) -> dict[str, object]:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# frozen reference data


@dataclass(frozen=True)
class _TableRow:
    total: int
    sortable: int
    ratio_digits: str
    eulerian: int


# Expected table values for n = 3..10. The n <= 6 sortable and Eulerian
# entries are confirmed exhaustively by the census and eulerian suites; the
# rest pin the counting formulas against regressions.
_TABLE = {
    3: _TableRow(8, 1, "0.125", 1),
    4: _TableRow(64, 17, "0.266", 5),
    5: _TableRow(1024, 113, "0.110", 29),
    6: _TableRow(32768, 7729, "0.236", 365),
    7: _TableRow(2097152, 224689, "0.107", 7565),
    8: _TableRow(268435456, 61562033, "0.229", 259533),
    9: _TableRow(68719476736, 7309130417, "0.106", 16766541),
    10: _TableRow(35184372088832, 8013328398001, "0.228", 1695913805),
}

# Census results for Eulerian graphs at the sizes where both counting
# methods are known to agree.
_EULERIAN_SMALL = {3: 1, 4: 5, 5: 29}

# Overlap adjacency (9x9) and precedence matrix (10x10) of [4,5,2,6,1,7,3,8],
# both hand-checked against the definitions.
_EXAMPLE_PERM = (4, 5, 2, 6, 1, 7, 3, 8)

_OVERLAP_9 = """
011100100
101001100
110001010
100000010
000000000
011000000
110000000
001100000
000000000
"""

_PRECEDENCE_10 = """
0111111111
0001000111
0101001111
0000000011
0111011111
0111001111
0101000111
0001000011
0000000001
0000000000
"""


# ---------------------------------------------------------------------------
# helpers


def _ratio_digits(r: Fraction) -> str:
    """The ratio rounded to three decimal places, as printed in the table."""
    return f"0.{round(r * 1000):03d}"


def _all_perms(n: int) -> Iterator[perms.Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield perms.Permutation(values)


def _all_graph_rows(n: int) -> Iterator[tuple[int, ...]]:
    """Adjacency rows of every simple graph on n vertices (2^C(n,2) many)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (mask >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield tuple(rows)


def _graph(rows: tuple[int, ...]) -> graphs.RootedGraph:
    return graphs.RootedGraph(f2.F2Matrix.from_row_bits(rows, len(rows)))


def _eulerian_rows(rows: tuple[int, ...]) -> bool:
    return all(r.bit_count() % 2 == 0 for r in rows)


def _span_masks(basis: Iterable[int]) -> set[int]:
    out = {0}
    for b in basis:
        out |= {m ^ b for m in out}
    return out


def _kernel_mask_set(m: f2.F2Matrix) -> frozenset[int]:
    return frozenset(_span_masks(v.bits for v in f2.kernel_basis(m)))


def _cut_masks(cuts: Iterable[frozenset[int]]) -> set[int]:
    return {sum(1 << v for v in cut) for cut in cuts}


def _random_symmetric_rows(
    rng: random.Random, n: int
) -> tuple[list[int], list[tuple[int, int]]]:
    """Random symmetric zero-diagonal rows plus the list of present edges."""
    rows = [0] * n
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.getrandbits(1):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                edges.append((u, v))
    return rows, edges


# ---------------------------------------------------------------------------
# suites


def _suite_table(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    for n in range(3, min(max_n, 10) + 1):
        row = _TABLE[n]
        rep = counting.count_sortable(n)
        ranks = counting.count_sortable_rank_sum(n)
        eul = counting.count_sortable(n, eulerian=True)
        digits = _ratio_digits(rep.ratio)
        ok = (
            rep.total == row.total
            and rep.count == row.sortable == ranks.count
            and digits == row.ratio_digits
            and eul.count == row.eulerian
        )
        out.append(
            CheckLine(
                f"table n={n}",
                ok,
                f"total={rep.total} sortable={rep.count} ratio={digits} "
                f"eulerian={eul.count}",
            )
        )
    wide = max(max_n, 30)
    agree = all(
        counting.count_sortable(n).count
        == counting.count_sortable_rank_sum(n).count
        for n in range(3, wide + 1)
    )
    out.append(CheckLine(f"closed formula equals rank sum n<={wide}", agree, ""))
    return out


def _suite_census(max_n: int, threads: int) -> list[CheckLine]:
    out = []
    for n in range(3, min(max_n, oracle.CENSUS_LIMIT) + 1):
        t0 = time.perf_counter()
        brute = oracle.census_bruteforce(n, threads=threads)
        dt = time.perf_counter() - t0
        closed = counting.count_sortable(n).count
        ranks = counting.count_sortable_rank_sum(n).count
        out.append(
            CheckLine(
                f"census n={n}",
                brute == closed == ranks,
                f"brute={brute} closed={closed} rank_sum={ranks} ({dt:.2f}s)",
            )
        )
    return out


def eulerian_adjudication(
    max_n: int = 6, threads: int = 1
) -> list[dict[str, object]]:
    """Exhaustive Eulerian census against both counting methods, per size.

    Each row records the census count, the two computed counts, and which
    methods agree with the census. The caller draws the conclusion; nothing
    here assumes a winner.
    """
    rows: list[dict[str, object]] = []
    for n in range(3, min(max_n, oracle.CENSUS_LIMIT) + 1):
        t0 = time.perf_counter()
        census = oracle.census_bruteforce(n, eulerian=True, threads=threads)
        dt = time.perf_counter() - t0
        closed = counting.count_sortable(n, eulerian=True).count
        ranks = counting.count_sortable_rank_sum(n, eulerian=True).count
        matches = tuple(
            name
            for name, value in (("closed_formula", closed), ("rank_sum", ranks))
            if value == census
        )
        rows.append(
            {
                "n": n,
                "census": census,
                "closed_formula": closed,
                "rank_sum": ranks,
                "matches": matches,
                "seconds": dt,
            }
        )
    return rows


def _suite_eulerian(max_n: int, threads: int) -> list[CheckLine]:
    out = []
    rows = eulerian_adjudication(max_n, threads)
    for row in rows:
        n = row["n"]
        matches = row["matches"]
        ok = bool(matches)
        if n in _EULERIAN_SMALL:
            ok = row["census"] == _EULERIAN_SMALL[n] and matches == (
                "closed_formula",
                "rank_sum",
            )
        out.append(
            CheckLine(
                f"eulerian census n={n}",
                ok,
                f"census={row['census']} closed={row['closed_formula']} "
                f"rank_sum={row['rank_sum']} "
                f"matches={','.join(matches) or 'none'}",
            )
        )
    always = [
        name
        for name in ("closed_formula", "rank_sum")
        if all(name in row["matches"] for row in rows)
    ]
    out.append(
        CheckLine(
            "eulerian adjudication",
            bool(always),
            "methods matching the census at every size: "
            + (",".join(always) or "none"),
        )
    )
    return out


def _suite_sortability(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    for n in range(1, min(max_n, oracle.SEARCH_LIMIT) + 1):
        sortable = 0
        bad = 0
        total = 0
        for pi in _all_perms(n):
            og = perms.overlap_graph(pi)
            flags = {
                perms.is_cds_sortable(pi),
                oracle.cds_sortable_bruteforce(pi),
                graphs.is_gcds_sortable(og),
                f2.is_mcds_sortable(og.adjacency),
                oracle.gcds_sortable_bruteforce(og),
            }
            total += 1
            if len(flags) == 1:
                sortable += flags.pop()
            else:
                bad += 1
        out.append(
            CheckLine(
                f"sortability agreement n={n}",
                bad == 0,
                f"{sortable}/{total} sortable, five criteria",
            )
        )
    return out


def _suite_commuting(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    for n in range(2, min(max_n, 7) + 1):
        moves = 0
        bad = 0
        for pi in _all_perms(n):
            og = perms.overlap_graph(pi)
            ctx = set(perms.cds_contexts(pi))
            if ctx != set(graphs.context_pairs(og)):
                bad += 1
                continue
            for p, q in ctx:
                sigma = perms.apply_cds(pi, p, q)
                moved = graphs.gcds(og, p, q)
                if perms.overlap_graph(sigma).adjacency != moved.adjacency:
                    bad += 1
                if f2.mcds(og.adjacency, p, q) != moved.adjacency:
                    bad += 1
                moves += 1
            if n <= 5:
                # non-contexts must be rejected on both sides
                for p in range(1, n):
                    for q in range(p + 1, n):
                        if (p, q) in ctx:
                            continue
                        for attempt in (
                            lambda: perms.apply_cds(pi, p, q),
                            lambda: graphs.gcds(og, p, q),
                        ):
                            try:
                                attempt()
                            except InvalidMoveError:
                                pass
                            else:
                                bad += 1
        out.append(
            CheckLine(
                f"commuting squares n={n}", bad == 0, f"{moves} moves checked"
            )
        )
    for n in range(2, min(max_n, 6) + 1):
        moves = 0
        bad = 0
        for rows in _all_graph_rows(n):
            g = _graph(rows)
            for p, q in graphs.context_pairs(g):
                if graphs.gcds(g, p, q).adjacency != f2.mcds(g.adjacency, p, q):
                    bad += 1
                moves += 1
        out.append(
            CheckLine(
                f"graph swap equals matrix swap n={n}",
                bad == 0,
                f"{moves} moves checked",
            )
        )
    return out


def _suite_distance(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    gn = min(max_n, 6)
    for n in range(2, gn + 1):
        count = 0
        bad = 0
        sortable_count = 0
        for rows in _all_graph_rows(n):
            g = _graph(rows)
            dist = f2.mcds_distance(g.adjacency)
            sortable = graphs.is_gcds_sortable(g)
            profile = oracle.gcds_fixed_point_profile(g)
            lengths = {length for length, _ in profile}
            ends = {edgeless for _, edgeless in profile}
            if lengths != {dist} or ends != {sortable}:
                bad += 1
            sortable_count += sortable
            count += 1
        out.append(
            CheckLine(
                f"maximal sequences n={n}",
                bad == 0,
                f"{count} graphs, {sortable_count} sortable; every maximal "
                f"sequence has length rank/2, ends edgeless iff sortable",
            )
        )
    for n in range(2, min(gn, 5) + 1):
        bad = 0
        for rows in _all_graph_rows(n):
            g = _graph(rows)
            stats = oracle.gcds_sortable_search(g)
            dist = f2.mcds_distance(g.adjacency)
            if stats.max_depth > dist or stats.max_depth > n // 2:
                bad += 1
        out.append(CheckLine(f"search depth bound n={n}", bad == 0, ""))
    return out


def _suite_conversion(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    for n in range(1, min(max_n, 8) + 1):
        bad = 0
        count = 0
        for pi in _all_perms(n):
            adj = perms.overlap_graph(pi).adjacency
            prec = perms.precedence_matrix(pi)
            ok = (
                convert.adjacency_to_precedence(adj) == prec
                and convert.precedence_to_adjacency(prec) == adj
                and convert.is_precedence_matrix(prec)
                and convert.permutation_from_precedence(prec) == pi
            )
            bad += not ok
            count += 1
        out.append(
            CheckLine(
                f"conversion roundtrip n={n}", bad == 0, f"{count} permutations"
            )
        )
    pi = perms.Permutation(_EXAMPLE_PERM)
    adj = formats.parse_matrix(_OVERLAP_9)
    prec = formats.parse_matrix(_PRECEDENCE_10)
    ok = (
        perms.overlap_graph(pi).adjacency == adj
        and perms.precedence_matrix(pi) == prec
        and convert.adjacency_to_precedence(adj) == prec
        and convert.precedence_to_adjacency(prec) == adj
    )
    out.append(
        CheckLine(
            "frozen example matrices",
            ok,
            "overlap 9x9 and precedence 10x10 of [4,5,2,6,1,7,3,8]",
        )
    )
    return out


def _suite_realize(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    top = min(max_n, oracle.REALIZE_LIMIT - 1)
    for k in range(1, top + 1):
        realizable = 0
        total = 0
        bad = 0
        for rows in _all_graph_rows(k):
            m = f2.F2Matrix.from_row_bits(rows, k)
            got = convert.realize_move_graph(m)
            ref = oracle.realizable_bruteforce(m)
            if (got is None) != (ref is None):
                bad += 1
            elif got is not None:
                realizable += 1
                if got.n != k + 1 or perms.move_graph(got) != m:
                    bad += 1
            total += 1
        out.append(
            CheckLine(
                f"realization size {k}",
                bad == 0,
                f"{realizable}/{total} realizable, witnesses verified",
            )
        )
    length = min(max_n + 1, oracle.REALIZE_LIMIT)
    bad = 0
    count = 0
    for pi in _all_perms(length):
        m = perms.move_graph(pi)
        got = convert.realize_move_graph(m)
        if got is None or perms.move_graph(got) != m:
            bad += 1
        count += 1
    out.append(
        CheckLine(
            f"realization of derived graphs length {length}",
            bad == 0,
            f"{count} permutations",
        )
    )
    return out


def _suite_kernel(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    gn = min(max_n, 6)
    pn = min(max_n, 8)

    # kernel enumeration vs. exhaustive subset scan
    for n in range(2, min(gn, 5) + 1):
        bad = 0
        for rows in _all_graph_rows(n):
            g = _graph(rows)
            analytic = {c.vector.bits for c in graphs.generalized_parity_cuts(g)}
            scanned = _cut_masks(oracle.parity_cuts_bruteforce(g, "generalized"))
            bad += analytic != scanned
        out.append(CheckLine(f"generalized cuts vs scan n={n}", bad == 0, ""))

    # on even-degree graphs the root-even two-sided cuts are the kernel
    for n in range(2, gn + 1):
        bad = 0
        count = 0
        for rows in _all_graph_rows(n):
            if not _eulerian_rows(rows):
                continue
            g = _graph(rows)
            kernel = {c.vector.bits for c in graphs.generalized_parity_cuts(g)}
            scanned = _cut_masks(
                oracle.parity_cuts_bruteforce(g, "two_sided_root_even")
            )
            bad += kernel != scanned
            count += 1
        out.append(
            CheckLine(
                f"eulerian cut space equals kernel n={n}",
                bad == 0,
                f"{count} graphs",
            )
        )

    # a swap changes cuts only at the two swapped vertices
    cut_cache: dict[tuple[int, ...], frozenset[int]] = {}

    def cuts_of(g: graphs.RootedGraph) -> frozenset[int]:
        key = g.adjacency.rows
        got = cut_cache.get(key)
        if got is None:
            got = _kernel_mask_set(g.adjacency)
            cut_cache[key] = got
        return got

    for n in range(2, gn + 1):
        bad = 0
        eul_bad = 0
        moves = 0
        for rows in _all_graph_rows(n):
            g = _graph(rows)
            eulerian = _eulerian_rows(rows)
            pre = None
            for p, q in graphs.context_pairs(g):
                moved = graphs.gcds(g, p, q)
                strip = ((1 << n) - 1) ^ (1 << p) ^ (1 << q)
                if pre is None:
                    pre = cuts_of(g)
                if {m & strip for m in pre} != {
                    m & strip for m in cuts_of(moved)
                }:
                    bad += 1
                if eulerian and (
                    not graphs.is_eulerian(moved)
                    or graphs.has_property(moved, "a")
                    != graphs.has_property(g, "a")
                ):
                    eul_bad += 1
                moves += 1
        out.append(
            CheckLine(
                f"cut correspondence under swaps n={n}",
                bad == 0 and eul_bad == 0,
                f"{moves} moves; even degrees and root separation preserved",
            )
        )

    # permutation-side kernel structure
    ortho_bad = span_bad = union_bad = pile_bad = end_rows_bad = odd_sep_bad = 0
    piles = 0
    sortable_perms = 0
    total_perms = 0
    for n in range(1, pn + 1):
        for pi in _all_perms(n):
            m = n + 1
            og = perms.overlap_graph(pi)
            adj = og.adjacency
            rows = adj.rows
            full = (1 << m) - 1
            vecs = perms.alternating_cycle_vectors(pi)
            masks = [v.bits for v in vecs]
            total_perms += 1
            if any(
                (masks[i] & masks[j]).bit_count() & 1
                for i in range(len(masks))
                for j in range(i + 1, len(masks))
            ):
                ortho_bad += 1
            if any(adj.mat_vec(v).bits for v in vecs) or len(vecs) != (
                m - f2.rank(adj)
            ):
                span_bad += 1
            for pick in range(1 << len(masks)):
                union = 0
                rest = pick
                idx = 0
                while rest:
                    if rest & 1:
                        union |= masks[idx]
                    rest >>= 1
                    idx += 1
                for v in range(m):
                    if (union >> v) & 1:
                        cross = rows[v] & (full ^ union)
                    else:
                        cross = rows[v] & union
                    if cross.bit_count() & 1:
                        union_bad += 1
                        break
                else:
                    continue
                break
            pile = perms.strategic_pile(pi)
            if pile.is_empty:
                sortable_perms += 1
                if f2.rank(f2.central_submatrix(adj, "rows")) != f2.rank(adj):
                    end_rows_bad += 1
            else:
                piles += 1
                x = 0
                for v in pile.members:
                    x |= 1 << v
                vec = f2.F2Vector.from_bits(x, m)
                if (
                    x & (1 | (1 << n))
                    or f2.central_submatrix(adj, "rows").mat_vec(vec).bits
                    or not adj.mat_vec(vec).bits
                ):
                    pile_bad += 1
            if graphs.has_property(og, "b"):
                odd_sep_bad += 1
    out.append(
        CheckLine(f"cycle vectors orthogonal n<={pn}", ortho_bad == 0, "")
    )
    out.append(
        CheckLine(
            f"cycle vectors span overlap kernel n<={pn}",
            span_bad == 0,
            f"{total_perms} permutations",
        )
    )
    out.append(
        CheckLine(
            f"cycle unions are root-even cuts n<={pn}", union_bad == 0, ""
        )
    )
    out.append(
        CheckLine(
            f"pile vector central-kernel membership n<={pn}",
            pile_bad == 0,
            f"{piles} nonempty piles",
        )
    )
    out.append(
        CheckLine(
            f"sortable kernels need no end rows n<={pn}",
            end_rows_bad == 0,
            f"{sortable_perms} sortable permutations",
        )
    )
    out.append(
        CheckLine(
            f"no overlap graph separates roots oddly n<={pn}",
            odd_sep_bad == 0,
            "",
        )
    )

    # on even-degree graphs exactly one root placement is feasible
    for n in range(2, gn + 1):
        bad = 0
        count = 0
        for rows in _all_graph_rows(n):
            if not _eulerian_rows(rows):
                continue
            g = _graph(rows)
            a = graphs.has_property(g, "a")
            c = graphs.has_property(g, "c")
            if a == c or a != graphs.is_gcds_sortable(g):
                bad += 1
            count += 1
        out.append(
            CheckLine(
                f"eulerian root placement n={n}",
                bad == 0,
                f"{count} graphs: separation xor containment, "
                f"separation iff sortable",
            )
        )
    return out


def _suite_macwilliams(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    for t in range(0, min(max_n, oracle.N0_LIMIT) + 1):
        bad = 0
        total = 0
        for r in range(0, t + 1):
            counted = counting.macwilliams_count(t, r)
            if counted != oracle.n0_bruteforce(t, r):
                bad += 1
            if r % 2 and counted:
                bad += 1
            total += counted
        if total != 1 << (t * (t - 1) // 2):
            bad += 1
        out.append(
            CheckLine(
                f"rank census t={t}",
                bad == 0,
                f"sum over ranks = 2^{t * (t - 1) // 2}",
            )
        )
    return out


def _central_bits(column: f2.F2Vector) -> f2.F2Vector:
    n = column.n
    return f2.F2Vector.from_bits(
        (column.bits >> 1) & ((1 << (n - 2)) - 1), n - 2
    )


def _decomposes(adj: f2.F2Matrix) -> bool:
    """Rebuild a sortable matrix from its center and two solved borders."""
    n = adj.nrows
    center = f2.central_submatrix(adj, "both")
    u1 = f2.solve_linear(center, _central_bits(adj.column(0)))
    u2 = f2.solve_linear(center, _central_bits(adj.column(n - 1)))
    if u1 is None or u2 is None:
        return False
    if counting.block_construct(center, u1, u2) != adj:
        return False
    if adj.is_eulerian_rows():
        return counting.block_construct(center, u1, f2.ones_complement(u1)) == adj
    return True


def _suite_blocks(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    out = []
    gn = min(max_n, 6)

    bad = 0
    for t in range(0, 4):
        for rows in _all_graph_rows(t):
            a = f2.F2Matrix.from_row_bits(rows, t)
            for ub in range(1 << t):
                u = f2.F2Vector.from_bits(ub, t)
                au = a.mat_vec(u)
                if au.dot(u):
                    bad += 1
                for vb in range(1 << t):
                    v = f2.F2Vector.from_bits(vb, t)
                    if au.dot(v) != a.mat_vec(v).dot(u):
                        bad += 1
    out.append(CheckLine("border form symmetric t<=3", bad == 0, ""))

    bad = 0
    for t in range(0, 4):
        for rows in _all_graph_rows(t):
            a = f2.F2Matrix.from_row_bits(rows, t)
            kernel = _kernel_mask_set(a)
            images = [
                (
                    ub,
                    vb,
                    counting.block_construct(
                        a,
                        f2.F2Vector.from_bits(ub, t),
                        f2.F2Vector.from_bits(vb, t),
                    ),
                )
                for ub in range(1 << t)
                for vb in range(1 << t)
            ]
            for u1, u2, m1 in images:
                for v1, v2, m2 in images:
                    same = (u1 ^ v1) in kernel and (u2 ^ v2) in kernel
                    if (m1 == m2) != same:
                        bad += 1
    out.append(
        CheckLine(
            "bordering equality matches kernel offsets t<=3", bad == 0, ""
        )
    )

    bad = 0
    solvable = 0
    for n in range(2, gn + 1):
        for rows in _all_graph_rows(n):
            if not _eulerian_rows(rows):
                continue
            adj = f2.F2Matrix.from_row_bits(rows, n)
            if not f2.is_mcds_sortable(adj):
                continue
            cc = f2.central_submatrix(adj, "cols")
            first = adj.column(0)
            last = adj.column(n - 1)
            u0 = f2.solve_linear(cc, first)
            if u0 is None:
                continue
            solvable += 1
            for k in _span_masks(v.bits for v in f2.kernel_basis(cc)):
                u = f2.F2Vector.from_bits(u0.bits ^ k, n - 2)
                if cc.mat_vec(f2.ones_complement(u)) != last:
                    bad += 1
    out.append(
        CheckLine(
            f"complement bordering rule n<={gn}",
            bad == 0 and solvable > 0,
            f"{solvable} solvable instances",
        )
    )

    for n in range(2, gn + 1):
        bad = 0
        count = 0
        for rows in _all_graph_rows(n):
            adj = f2.F2Matrix.from_row_bits(rows, n)
            if not f2.is_mcds_sortable(adj):
                continue
            count += 1
            if not _decomposes(adj):
                bad += 1
        out.append(
            CheckLine(
                f"sortable decomposition n={n}",
                bad == 0,
                f"{count} sortable graphs",
            )
        )

    rng = random.Random(8)
    sample_bad = 0
    samples = 0
    for n in range(gn + 1, min(max_n, 8) + 1):
        t = n - 2
        for _ in range(200):
            rows, _edges = _random_symmetric_rows(rng, t)
            center = f2.F2Matrix.from_row_bits(rows, t)
            u1 = f2.F2Vector.from_bits(rng.getrandbits(t), t)
            u2 = f2.F2Vector.from_bits(rng.getrandbits(t), t)
            built = counting.block_construct(center, u1, u2)
            samples += 1
            if (
                not f2.is_mcds_sortable(built)
                or f2.central_submatrix(built, "both") != center
                or not _decomposes(built)
            ):
                sample_bad += 1
    out.append(
        CheckLine(
            f"sampled decomposition n<={min(max_n, 8)}",
            sample_bad == 0,
            f"{samples} random bordered graphs",
        )
    )

    for t in range(0, min(gn - 2, 4) + 1):
        bad = 0
        for rows in _all_graph_rows(t):
            center = f2.F2Matrix.from_row_bits(rows, t)
            want = counting.sortable_extensions_count(center)
            want_eul = counting.sortable_extensions_count(center, eulerian=True)
            got = 0
            got_eul = 0
            for border in range(1 << (2 * t + 1)):
                x = border & ((1 << t) - 1)
                y = (border >> t) & ((1 << t) - 1)
                z = (border >> (2 * t)) & 1
                full_rows = [0] * (t + 2)
                full_rows[0] = (x << 1) | (z << (t + 1))
                for i in range(t):
                    full_rows[i + 1] = (
                        ((x >> i) & 1)
                        | (rows[i] << 1)
                        | (((y >> i) & 1) << (t + 1))
                    )
                full_rows[t + 1] = z | (y << 1)
                built = f2.F2Matrix.from_row_bits(full_rows, t + 2)
                if f2.is_mcds_sortable(built):
                    got += 1
                    if built.is_eulerian_rows():
                        got_eul += 1
            if got != want or got_eul != want_eul:
                bad += 1
        out.append(
            CheckLine(
                f"extension counts t={t}",
                bad == 0,
                "4^rank sortable, 2^rank even-degree sortable",
            )
        )
    return out


def _suite_convergence(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    rep = counting.convergence_report(max(10, max_n))
    details = {
        "x100_above_one_fifth": f"x_100 = {float(rep.x100):.12f}",
        "limit_positive_margin": f"limit >= {float(rep.limit_lower):.12f}",
        "delta_geometric": f"tail bound {float(rep.tail_high):.3e}",
    }
    return [
        CheckLine(f"convergence {name}", passed, details.get(name, ""))
        for name, passed in rep.checks.items()
    ]


def _suite_random(max_n: int, threads: int) -> list[CheckLine]:
    del threads
    top = max(3, min(max_n, 16))
    rng = random.Random(20260819)
    per_family = 2500
    limit = per_family * 40
    out = []

    def random_perm_with_context() -> (
        tuple[perms.Permutation, list[tuple[int, int]]] | None
    ):
        n = rng.randint(2, top)
        values = list(range(1, n + 1))
        rng.shuffle(values)
        pi = perms.Permutation(values)
        ctx = perms.cds_contexts(pi)
        return (pi, ctx) if ctx else None

    bad = 0
    done = 0
    attempts = 0
    while done < per_family and attempts < limit:
        attempts += 1
        drawn = random_perm_with_context()
        if drawn is None:
            continue
        pi, ctx = drawn
        p, q = rng.choice(ctx)
        try:
            sigma = perms.apply_cds(pi, p, q)
            ok = sorted(sigma.elements) == list(range(1, pi.n + 1))
        except Exception:
            ok = False
        bad += not ok
        done += 1
    out.append(
        CheckLine(
            "random swaps keep permutations",
            bad == 0 and done == per_family,
            f"{done} moves at sizes <= {top}",
        )
    )

    bad = 0
    done = 0
    attempts = 0
    while done < per_family and attempts < limit:
        attempts += 1
        drawn = random_perm_with_context()
        if drawn is None:
            continue
        pi, ctx = drawn
        p, q = rng.choice(ctx)
        framed = pi.framed()
        occ = oracle._occurrences(framed)
        if not oracle._interleaved(occ[p], occ[q]):
            bad += 1
        else:
            swapped = oracle._swap_blocks(framed, occ[p], occ[q])
            if swapped[1:-1] != perms.apply_cds(pi, p, q).elements:
                bad += 1
        done += 1
    out.append(
        CheckLine(
            "random swaps match the oracle",
            bad == 0 and done == per_family,
            f"{done} moves at sizes <= {top}",
        )
    )

    bad = 0
    done = 0
    attempts = 0
    while done < per_family and attempts < limit:
        attempts += 1
        n = rng.randint(3, top)
        rows, _edges = _random_symmetric_rows(rng, n)
        g = _graph(tuple(rows))
        ctx = graphs.context_pairs(g)
        if not ctx:
            continue
        p, q = rng.choice(ctx)
        try:
            moved = graphs.gcds(g, p, q)
            adj = moved.adjacency
            ok = (
                adj.is_symmetric()
                and adj.is_zero_diagonal()
                and moved.degree(p) == 0
                and moved.degree(q) == 0
                and moved.roots == (0, n - 1)
            )
        except Exception:
            ok = False
        bad += not ok
        done += 1
    out.append(
        CheckLine(
            "random graph swaps keep two-rooted graphs",
            bad == 0 and done == per_family,
            f"{done} moves at sizes <= {top}",
        )
    )

    bad = 0
    done = 0
    attempts = 0
    while done < per_family and attempts < limit:
        attempts += 1
        n = rng.randint(2, top)
        rows, edges = _random_symmetric_rows(rng, n)
        if not edges:
            continue
        m = f2.F2Matrix.from_row_bits(rows, n)
        p, q = rng.choice(edges)
        try:
            moved = f2.mcds(m, p, q)
            ok = (
                moved.is_symmetric()
                and moved.is_zero_diagonal()
                and moved.rows[p] == 0
                and moved.rows[q] == 0
                and f2.rank(moved) == f2.rank(m) - 2
                and all(
                    moved.mat_vec(v).bits == 0 for v in f2.kernel_basis(m)
                )
            )
        except Exception:
            ok = False
        bad += not ok
        done += 1
    out.append(
        CheckLine(
            "random matrix swaps grow the kernel",
            bad == 0 and done == per_family,
            f"{done} moves at sizes <= {top}",
        )
    )
    return out


# ---------------------------------------------------------------------------
# registry


_SuiteFn = Callable[[int, int], "list[CheckLine]"]

_SUITES: dict[str, tuple[_SuiteFn, int, str]] = {
    "table": (
        _suite_table,
        10,
        "count table, ratio digits, and both counting methods",
    ),
    "census": (
        _suite_census,
        6,
        "exhaustive sortable census against both counting methods",
    ),
    "eulerian": (
        _suite_eulerian,
        6,
        "census adjudication of the two Eulerian counting methods",
    ),
    "sortability": (
        _suite_sortability,
        7,
        "five sortability criteria agree on every permutation",
    ),
    "commuting": (
        _suite_commuting,
        6,
        "swaps commute across the permutation, graph, and matrix views",
    ),
    "distance": (
        _suite_distance,
        6,
        "every maximal swap sequence has length rank/2",
    ),
    "conversion": (
        _suite_conversion,
        7,
        "adjacency/precedence conversions round-trip exactly",
    ),
    "realize": (
        _suite_realize,
        5,
        "realization agrees with exhaustive search, witnesses verified",
    ),
    "kernel": (
        _suite_kernel,
        7,
        "parity cuts, kernels, pile vectors, and root placements",
    ),
    "macwilliams": (
        _suite_macwilliams,
        5,
        "rank census of symmetric zero-diagonal matrices",
    ),
    "blocks": (
        _suite_blocks,
        8,
        "bordered block construction, decomposition, extension counts",
    ),
    "convergence": (
        _suite_convergence,
        50,
        "exact rational certificates for the density limit",
    ),
    "random": (
        _suite_random,
        16,
        "randomized structural properties of all three swap kinds",
    ),
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def available_suites() -> list[tuple[str, str]]:
    """Suite names with one-line descriptions, ``all`` last."""
    rows = [(name, entry[2]) for name, entry in _SUITES.items()]
    rows.append(("all", "every suite at its default size"))
    return rows


def run_suite(
    name: str, max_n: int | None = None, threads: int = 1
) -> SuiteReport:
    """Run one named suite and collect its check lines.

    ``all`` runs every suite at its default size (max_n is ignored there,
    since the sizes mean different things per suite). Unknown names raise
    ContractError.
    """
    start = time.perf_counter()
    threads = max(1, threads)
    if name == "all":
        checks: list[CheckLine] = []
        for sub, (fn, default, _desc) in _SUITES.items():
            for line in fn(default, threads):
                checks.append(
                    CheckLine(f"{sub}: {line.name}", line.passed, line.detail)
                )
        return SuiteReport(
            suite="all",
            max_n=None,
            checks=tuple(checks),
            elapsed=time.perf_counter() - start,
        )
    if name not in _SUITES:
        known = ", ".join(SUITE_NAMES)
        raise ContractError(f"unknown suite {name!r}; available: {known}")
    fn, default, _desc = _SUITES[name]
    effective = default if max_n is None else max_n
    if effective < 1:
        raise ContractError(f"max_n must be positive, got {effective}")
    checks = list(fn(effective, threads))
    return SuiteReport(
        suite=name,
        max_n=effective,
        checks=tuple(checks),
        elapsed=time.perf_counter() - start,
    )
