"""Exact linear algebra over the field with two elements.

Vectors are bit-packed into Python ints (bit i = coordinate i over a fixed
ordered basis).  An F2Matrix is a list of row vectors of a common length.

Two conventions are in play and kept explicit:

* ``rref``/``solve`` treat the matrix as acting on column vectors of length
  ``ncols``: (m @ x)_i = <rows[i], x>.
* The page-turning engine treats a matrix as a map sending the i-th domain
  basis vector to ``rows[i]``; use ``apply``/``preimage``/``homology`` for
  that convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class CompositionNonzero(Exception):
    """Raised when a supposed chain complex has d∘d != 0."""


@dataclass(frozen=True)
class F2Vector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or (self.bits >> self.length):
            raise ValueError("vector bits exceed stated length")

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return F2Vector(self.bits ^ other.bits, self.length)

    def __bool__(self) -> bool:
        return self.bits != 0

    def dot(self, other: "F2Vector") -> int:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def coords(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    @staticmethod
    def zero(length: int) -> "F2Vector":
        return F2Vector(0, length)

    @staticmethod
    def unit(i: int, length: int) -> "F2Vector":
        return F2Vector(1 << i, length)

    @staticmethod
    def from_coords(coords: Sequence[int]) -> "F2Vector":
        bits = 0
        for i, c in enumerate(coords):
            if c & 1:
                bits |= 1 << i
        return F2Vector(bits, len(coords))


@dataclass(frozen=True)
class F2Matrix:
    rows: tuple[F2Vector, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if r.length != self.ncols:
                raise ValueError("row length mismatch")

    @staticmethod
    def from_rows(rows: Iterable[int], ncols: int) -> "F2Matrix":
        return F2Matrix(tuple(F2Vector(r, ncols) for r in rows), ncols)

    @staticmethod
    def zero(nrows: int, ncols: int) -> "F2Matrix":
        return F2Matrix(tuple(F2Vector(0, ncols) for _ in range(nrows)), ncols)

    @staticmethod
    def identity(n: int) -> "F2Matrix":
        return F2Matrix(tuple(F2Vector(1 << i, n) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "F2Matrix":
        cols = []
        for j in range(self.ncols):
            bits = 0
            for i, r in enumerate(self.rows):
                if (r.bits >> j) & 1:
                    bits |= 1 << i
            cols.append(bits)
        return F2Matrix.from_rows(cols, self.nrows)

    def matvec(self, x: F2Vector) -> F2Vector:
        """Column action: (m @ x)_i = <rows[i], x>, x of length ncols."""
        if x.length != self.ncols:
            raise ValueError("vector length must equal ncols")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r.bits & x.bits).bit_count() & 1:
                bits |= 1 << i
        return F2Vector(bits, self.nrows)

    def apply(self, v: F2Vector) -> F2Vector:
        """Map convention: XOR of rows selected by the bits of v."""
        if v.length != self.nrows:
            raise ValueError("vector length must equal row count")
        acc = 0
        bits = v.bits
        i = 0
        while bits:
            if bits & 1:
                acc ^= self.rows[i].bits
            bits >>= 1
            i += 1
        return F2Vector(acc, self.ncols)


def rref(m: F2Matrix) -> tuple[int, list[int], list[F2Vector]]:
    """Reduced row echelon form of m.

    Returns (rank, pivot columns, kernel basis).  Kernel vectors x have
    length ncols and satisfy m.matvec(x) == 0; rank + len(kernel) == ncols.
    Pivots are chosen deterministically: leftmost nonzero column, first
    qualifying row.
    """
    rows = [r.bits for r in m.rows]
    n = len(rows)
    pivots: list[int] = []
    rank = 0
    for col in range(m.ncols):
        pivot_row = None
        for r in range(rank, n):
            if (rows[r] >> col) & 1:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        for r in range(n):
            if r != rank and ((rows[r] >> col) & 1):
                rows[r] ^= rows[rank]
        pivots.append(col)
        rank += 1
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    kernel: list[F2Vector] = []
    for fc in free_cols:
        bits = 1 << fc
        for i, pc in enumerate(pivots):
            if (rows[i] >> fc) & 1:
                bits |= 1 << pc
        kernel.append(F2Vector(bits, m.ncols))
    return rank, pivots, kernel


def solve(m: F2Matrix, v: F2Vector) -> Optional[F2Vector]:
    """Solve m.matvec(x) == v for x (length ncols); None if unsolvable."""
    if v.length != m.nrows:
        raise ValueError("target length mismatch")
    aug = F2Matrix.from_rows(
        [m.rows[i].bits | (((v.bits >> i) & 1) << m.ncols) for i in range(m.nrows)],
        m.ncols + 1,
    )
    rank, pivots, _ = rref(aug)
    if m.ncols in pivots:
        return None
    # re-run elimination to read off a particular solution
    rows = [aug.rows[i].bits for i in range(aug.nrows)]
    n = len(rows)
    rank = 0
    piv_cols: list[int] = []
    for col in range(m.ncols):
        pr = None
        for r in range(rank, n):
            if (rows[r] >> col) & 1:
                pr = r
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        for r in range(n):
            if r != rank and ((rows[r] >> col) & 1):
                rows[r] ^= rows[rank]
        piv_cols.append(col)
        rank += 1
    bits = 0
    for i, pc in enumerate(piv_cols):
        if (rows[i] >> m.ncols) & 1:
            bits |= 1 << pc
    return F2Vector(bits, m.ncols)


def preimage(m: F2Matrix, v: F2Vector) -> Optional[F2Vector]:
    """Map convention: find x with m.apply(x) == v, or None."""
    return solve(m.transpose(), v)


def kernel_of_map(m: F2Matrix) -> list[F2Vector]:
    """Map convention: basis of {x : m.apply(x) == 0} (length nrows)."""
    _, _, ker = rref(m.transpose())
    return ker


class Reducer:
    """Incremental reduced echelon container for span membership tests."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[int] = []  # reduced, sorted by leading bit desc

    def reduce(self, bits: int) -> int:
        for b in self.rows:
            top = b.bit_length() - 1
            if (bits >> top) & 1:
                bits ^= b
        return bits

    def contains(self, bits: int) -> bool:
        return self.reduce(bits) == 0

    def add(self, bits: int) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        red = self.reduce(bits)
        if red == 0:
            return False
        top = red.bit_length() - 1
        for i in range(len(self.rows)):
            if (self.rows[i] >> top) & 1:
                self.rows[i] ^= red
        self.rows.append(red)
        self.rows.sort(key=lambda x: -x.bit_length())
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


@dataclass
class Subquotient:
    """A subquotient of an ambient F2 space: cycles modulo boundaries."""

    ambient_dim: int
    cycle_basis: list[F2Vector]
    boundary_basis: list[F2Vector]
    quotient_reps: list[F2Vector] = field(default_factory=list)

    def __post_init__(self):
        cyc = Reducer(self.ambient_dim)
        for v in self.cycle_basis:
            cyc.add(v.bits)
        for v in self.boundary_basis:
            if not cyc.contains(v.bits):
                raise ValueError("boundaries must lie in the cycle space")
        seen = Reducer(self.ambient_dim)
        for v in self.boundary_basis:
            seen.add(v.bits)
        for v in self.quotient_reps:
            if not seen.add(v.bits):
                raise ValueError("quotient reps dependent modulo boundaries")

    @property
    def dim(self) -> int:
        return len(self.quotient_reps)


def homology(
    d_in: F2Matrix,
    d_out: F2Matrix,
    preference: Optional[Sequence[int]] = None,
) -> Subquotient:
    """Homology ker(d_out)/im(d_in) at the middle term (map convention).

    d_in maps a previous space into the ambient one (rows live in the
    ambient space); d_out has one row per ambient basis vector.  Quotient
    representatives are chosen greedily, preferring standard basis vectors
    scanned in ``preference`` order (natural order by default), so that
    surviving classes keep recognizable single-class names when possible.
    """
    ambient = d_out.nrows
    if d_in.ncols != ambient:
        raise ValueError("d_in must land in the ambient space")
    for row in d_in.rows:
        if d_out.apply(row).bits != 0:
            raise CompositionNonzero("d_out ∘ d_in != 0")

    cyc = Reducer(ambient)
    for v in kernel_of_map(d_out):
        cyc.add(v.bits)
    cycle_basis = [F2Vector(b, ambient) for b in cyc.rows]

    bnd = Reducer(ambient)
    for row in d_in.rows:
        bnd.add(row.bits)
    boundary_basis = [F2Vector(b, ambient) for b in bnd.rows]

    chosen = Reducer(ambient)
    for b in bnd.rows:
        chosen.add(b)
    reps: list[F2Vector] = []
    order = list(preference) if preference is not None else list(range(ambient))
    for i in order:
        bits = 1 << i
        if cyc.contains(bits) and not chosen.contains(bits):
            chosen.add(bits)
            reps.append(F2Vector(bits, ambient))
    for b in list(cyc.rows):
        if not chosen.contains(b):
            chosen.add(b)
            reps.append(F2Vector(b, ambient))
    return Subquotient(ambient, cycle_basis, boundary_basis, reps)
