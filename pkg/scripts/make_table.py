"""Tabulate sortable two-rooted graph counts per vertex count.

For each n the row gives the number of two-rooted graphs, how many are
sortable (closed formula), the sortable density, and both even-degree
counts (closed formula and rank sum, which disagree from n = 6 on; see
scripts/adjudicate_eulerian.py).  --brute-force appends census columns
for the sizes the exhaustive search can reach.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from cdslab import counting, oracle


def table_rows(max_n: int, brute: bool, threads: int) -> list[dict[str, object]]:
    rows: list[dict[str, object]] = []
    for n in range(3, max_n + 1):
        plain = counting.count_sortable(n)
        row: dict[str, object] = {
            "n": n,
            "total": plain.total,
            "sortable": plain.count,
            "ratio": f"{float(plain.ratio):.3f}",
            "eulerian_formula": counting.count_sortable(n, eulerian=True).count,
            "eulerian_rank_sum": counting.count_sortable_rank_sum(
                n, eulerian=True
            ).count,
        }
        if brute and n <= oracle.CENSUS_LIMIT:
            row["census"] = oracle.census_bruteforce(n, threads=threads)
            row["eulerian_census"] = oracle.census_bruteforce(
                n, eulerian=True, threads=threads
            )
        rows.append(row)
    return rows


def render(rows: list[dict[str, object]]) -> str:
    columns = list(rows[0])
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = [columns] + [[str(r.get(c, "-")) for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths))
        for line in cells
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        description="Print the sortable-count table."
    )
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--brute-force", action="store_true")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--csv", action="store_true", help="emit CSV")
    args = parser.parse_args(argv)
    if args.max_n < 3:
        parser.error("--max-n must be at least 3")

    t0 = time.perf_counter()
    rows = table_rows(args.max_n, args.brute_force, args.threads)
    elapsed = time.perf_counter() - t0
    if args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[-1]))
        writer.writeheader()
        writer.writerows(rows)
    else:
        print(render(rows))
    print(f"{len(rows)} rows in {elapsed:.2f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
