"""Dense GF(2) linear algebra on bit-packed rows.

Vectors and matrix rows are Python ints used as bitsets: bit j is column j.
All indices are 0-based.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import ContractError, InternalInvariantError, InvalidMoveError

__all__ = [
    "F2Vector",
    "F2Matrix",
    "rank",
    "kernel_basis",
    "solve_linear",
    "central_submatrix",
    "mcds",
    "is_mcds_sortable",
    "mcds_distance",
    "ones_complement",
]

BitsLike = Union["F2Vector", Sequence[int]]


def _mask_from_bits(bits: Iterable[int]) -> tuple[int, int]:
    mask = 0
    n = 0
    for b in bits:
        if b not in (0, 1):
            raise ContractError(f"GF(2) entries must be 0 or 1, got {b!r}")
        mask |= b << n
        n += 1
    return mask, n


class F2Vector:
    """Immutable vector over GF(2), stored as an int bitset."""

    __slots__ = ("n", "bits")

    def __init__(self, entries: Iterable[int]):
        mask, n = _mask_from_bits(entries)
        object.__setattr__(self, "bits", mask)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("F2Vector is immutable")

    @classmethod
    def from_bits(cls, bits: int, n: int) -> "F2Vector":
        if n < 0 or bits < 0 or bits >> n:
            raise ContractError(f"bit mask {bits:#x} does not fit in {n} bits")
        v = cls.__new__(cls)
        object.__setattr__(v, "bits", bits)
        object.__setattr__(v, "n", n)
        return v

    @classmethod
    def zeros(cls, n: int) -> "F2Vector":
        return cls.from_bits(0, n)

    @classmethod
    def unit(cls, n: int, j: int) -> "F2Vector":
        if not 0 <= j < n:
            raise ContractError(f"unit index {j} out of range for length {n}")
        return cls.from_bits(1 << j, n)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> j) & 1 for j in range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Vector):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __xor__(self, other: "F2Vector") -> "F2Vector":
        if self.n != other.n:
            raise ContractError(f"length mismatch: {self.n} vs {other.n}")
        return F2Vector.from_bits(self.bits ^ other.bits, self.n)

    __add__ = __xor__

    def dot(self, other: "F2Vector") -> int:
        if self.n != other.n:
            raise ContractError(f"length mismatch: {self.n} vs {other.n}")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def complement(self) -> "F2Vector":
        return F2Vector.from_bits(~self.bits & ((1 << self.n) - 1), self.n)

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if (self.bits >> j) & 1)

    def tolist(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.n)]

    def __repr__(self) -> str:
        return f"F2Vector([{', '.join(str(b) for b in self)}])"


def _vector_bits(v: BitsLike, n: int) -> int:
    if isinstance(v, F2Vector):
        if v.n != n:
            raise ContractError(f"vector length {v.n} != expected {n}")
        return v.bits
    mask, ln = _mask_from_bits(v)
    if ln != n:
        raise ContractError(f"vector length {ln} != expected {n}")
    return mask


class F2Matrix:
    """Immutable matrix over GF(2); each row is an int bitset."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        packed: list[int] = []
        width = ncols
        for row in rows:
            if isinstance(row, F2Vector):
                mask, n = row.bits, row.n
            else:
                mask, n = _mask_from_bits(row)
            if width is None:
                width = n
            elif n != width:
                raise ContractError(f"ragged rows: {n} vs {width}")
            packed.append(mask)
        if width is None:
            raise ContractError("cannot infer column count of an empty matrix")
        object.__setattr__(self, "rows", tuple(packed))
        object.__setattr__(self, "nrows", len(packed))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("F2Matrix is immutable")

    @classmethod
    def from_row_bits(cls, rows: Iterable[int], ncols: int) -> "F2Matrix":
        m = cls.__new__(cls)
        packed = tuple(rows)
        if ncols < 0 or any(r < 0 or r >> ncols for r in packed):
            raise ContractError("row mask does not fit the column count")
        object.__setattr__(m, "rows", packed)
        object.__setattr__(m, "nrows", len(packed))
        object.__setattr__(m, "ncols", ncols)
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls.from_row_bits([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls.from_row_bits([1 << j for j in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(key)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> F2Vector:
        return F2Vector.from_bits(self.rows[i], self.ncols)

    def column(self, j: int) -> F2Vector:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r >> j) & 1) << i
        return F2Vector.from_bits(bits, self.nrows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        if self.shape != other.shape:
            raise ContractError(f"shape mismatch: {self.shape} vs {other.shape}")
        return F2Matrix.from_row_bits(
            [a ^ b for a, b in zip(self.rows, other.rows)], self.ncols
        )

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return F2Matrix.from_row_bits(cols, self.nrows)

    def mat_vec(self, v: BitsLike) -> F2Vector:
        x = _vector_bits(v, self.ncols)
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & x).bit_count() & 1) << i
        return F2Vector.from_bits(out, self.nrows)

    def __matmul__(self, other: "F2Matrix | BitsLike") -> "F2Matrix | F2Vector":
        if isinstance(other, F2Matrix):
            if self.ncols != other.nrows:
                raise ContractError(
                    f"inner dimensions differ: {self.ncols} vs {other.nrows}"
                )
            ot = other.transpose()
            out = []
            for r in self.rows:
                bits = 0
                for j, c in enumerate(ot.rows):
                    bits |= ((r & c).bit_count() & 1) << j
                out.append(bits)
            return F2Matrix.from_row_bits(out, other.ncols)
        return self.mat_vec(other)

    def is_symmetric(self) -> bool:
        return self.is_square and self.rows == self.transpose().rows

    def is_zero_diagonal(self) -> bool:
        return self.is_square and all(
            not (r >> i) & 1 for i, r in enumerate(self.rows)
        )

    def is_eulerian_rows(self) -> bool:
        """True when every row has even weight."""
        return all(r.bit_count() % 2 == 0 for r in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __repr__(self) -> str:
        body = ", ".join(repr(row) for row in self.to_lists())
        return f"F2Matrix([{body}])"


def _eliminate(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form in place; returns (pivot columns, nonzero rows).

    Pivots are chosen as the first nonzero column scanning left to right, rows
    scanned top down, so the result is deterministic.
    """
    pivots: list[int] = []
    work = list(rows)
    r = 0
    for col in range(ncols):
        sel = -1
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                sel = i
                break
        if sel < 0:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return pivots, work[:r]


def rank(m: F2Matrix) -> int:
    """Rank of a matrix over GF(2)."""
    pivots, _ = _eliminate(list(m.rows), m.ncols)
    return len(pivots)


def _kernel_masks(rows: Sequence[int], ncols: int) -> list[int]:
    pivots, red = _eliminate(list(rows), ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        mask = 1 << f
        for i, p in enumerate(pivots):
            if (red[i] >> f) & 1:
                mask |= 1 << p
        basis.append(mask)
    return basis


def kernel_basis(m: F2Matrix) -> list[F2Vector]:
    """Basis of the null space, one vector per free column, ascending."""
    return [
        F2Vector.from_bits(mask, m.ncols)
        for mask in _kernel_masks(m.rows, m.ncols)
    ]


def _solve_mask(rows: Sequence[int], ncols: int, rhs: int) -> int | None:
    # Eliminate on [A | b] with b stored at bit position ncols; a pivot in
    # that extra column means the system is inconsistent.
    aug = [r | (((rhs >> i) & 1) << ncols) for i, r in enumerate(rows)]
    pivots, red = _eliminate(aug, ncols + 1)
    sol = 0
    for i, p in enumerate(pivots):
        if p == ncols:
            return None
        if (red[i] >> ncols) & 1:
            sol |= 1 << p
    return sol


def solve_linear(m: F2Matrix, b: BitsLike) -> F2Vector | None:
    """One solution of m @ x = b, or None when the system is inconsistent.

    Free variables are set to 0, so the returned solution is deterministic.
    """
    rhs = _vector_bits(b, m.nrows)
    sol = _solve_mask(m.rows, m.ncols, rhs)
    if sol is None:
        return None
    return F2Vector.from_bits(sol, m.ncols)


def central_submatrix(m: F2Matrix, mode: str = "both") -> F2Matrix:
    """Drop the first and last rows and/or columns.

    mode is one of "rows", "cols", "both".
    """
    if mode not in ("rows", "cols", "both"):
        raise ContractError(f"unknown mode {mode!r}")
    rows = list(m.rows)
    ncols = m.ncols
    if mode in ("rows", "both"):
        if m.nrows < 2:
            raise ContractError("need at least 2 rows to take the central part")
        rows = rows[1:-1]
    if mode in ("cols", "both"):
        if ncols < 2:
            raise ContractError("need at least 2 columns to take the central part")
        inner = (1 << (ncols - 1)) - 2  # bits 1..ncols-2
        rows = [(r & inner) >> 1 for r in rows]
        ncols -= 2
    return F2Matrix.from_row_bits(rows, ncols)


def mcds(m: F2Matrix, p: int, q: int) -> F2Matrix:
    """Matrix context-directed swap at row/column indices p, q (0-based).

    Returns m + m @ e @ m over GF(2), where e has ones exactly at (p, q) and
    (q, p). Requires a square matrix, p != q, and m[p, q] == 1.
    """
    if not m.is_square:
        raise ContractError(f"mcds needs a square matrix, got {m.shape}")
    n = m.nrows
    if not (0 <= p < n and 0 <= q < n):
        raise ContractError(f"indices ({p}, {q}) out of range for size {n}")
    if p == q:
        raise InvalidMoveError("mcds needs two distinct indices")
    if not (m.rows[p] >> q) & 1:
        raise InvalidMoveError(f"entry ({p}, {q}) is 0; no context to swap on")
    row_p, row_q = m.rows[p], m.rows[q]
    out = []
    for r in m.rows:
        new = r
        if (r >> p) & 1:
            new ^= row_q
        if (r >> q) & 1:
            new ^= row_p
        out.append(new)
    return F2Matrix.from_row_bits(out, n)


def is_mcds_sortable(m: F2Matrix) -> bool:
    """Kernel criterion: some kernel vector starts with 1 and ends with 0,
    and some other starts with 0 and ends with 1.

    The projection of the kernel onto the (first, last) coordinate pair is
    spanned by the projections of any basis, so a basis scan suffices.
    """
    if not m.is_square or m.nrows < 2:
        raise ContractError("sortability needs a square matrix of size >= 2")
    n = m.nrows
    span = {(0, 0)}
    for mask in _kernel_masks(m.rows, n):
        a, b = mask & 1, (mask >> (n - 1)) & 1
        span |= {(a ^ x, b ^ y) for (x, y) in span}
    return (1, 0) in span and (0, 1) in span


def mcds_distance(m: F2Matrix) -> int:
    """Number of swaps needed to sort: half the rank of the central part.

    Requires a symmetric, zero-diagonal square matrix of size >= 2. The
    central rank of such a matrix is always even; an odd value indicates a
    bug and raises InternalInvariantError.
    """
    if not m.is_square or m.nrows < 2:
        raise ContractError("distance needs a square matrix of size >= 2")
    if not m.is_symmetric():
        raise ContractError("distance needs a symmetric matrix")
    if not m.is_zero_diagonal():
        raise ContractError("distance needs a zero-diagonal matrix")
    r = rank(central_submatrix(m, "both"))
    if r % 2:
        raise InternalInvariantError(
            f"central rank {r} is odd for a symmetric zero-diagonal matrix"
        )
    return r // 2


def ones_complement(v: F2Vector) -> F2Vector:
    """Flip every coordinate."""
    return v.complement()
