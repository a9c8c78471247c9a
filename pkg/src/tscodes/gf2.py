"""GF(2) linear algebra on int bitsets.

Vectors are Python ints read as little-endian bit vectors (bit i = coordinate
i).  Matrices are lists of row ints.  Everything here is dense and meant for
desk-scale problems (a few hundred coordinates).
"""

from __future__ import annotations

from typing import Iterable, List, Optional


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(a: int, b: int) -> int:
    """Inner product of two bit vectors over GF(2)."""
    return (a & b).bit_count() & 1


class Basis:
    """Maintains a reduced (echelon) basis of a GF(2) subspace.

    Vectors are reduced against the basis on insert; pivots are recorded so
    membership tests and reductions are O(dim).
    """

    def __init__(self, vectors: Iterable[int] = ()) -> None:
        self.rows: List[int] = []
        self.pivots: List[int] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        """Reduce v against the basis; zero iff v is in the span."""
        for row, piv in zip(self.rows, self.pivots):
            if (v >> piv) & 1:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Insert v; returns True if it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        piv = v.bit_length() - 1
        # Back-substitute to keep the basis fully reduced.
        for i, row in enumerate(self.rows):
            if (row >> piv) & 1:
                self.rows[i] = row ^ v
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def copy(self) -> "Basis":
        b = Basis()
        b.rows = list(self.rows)
        b.pivots = list(self.pivots)
        return b


def rank(rows: Iterable[int]) -> int:
    return Basis(rows).dim


def kernel(rows: List[int], ncols: int) -> List[int]:
    """Basis of {x : M x = 0} where M has the given rows as bit vectors.

    M maps GF(2)^ncols -> GF(2)^len(rows); row_i . x is a parity of an AND.
    """
    work = [r for r in rows]
    pivot_of_col: dict[int, int] = {}
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        pivot_of_col[col] = row_idx
        row_idx += 1
        if row_idx == len(work):
            # Remaining columns are all free.
            break
    basis: List[int] = []
    for col in range(ncols):
        if col in pivot_of_col:
            continue
        v = 1 << col
        for pcol, prow in pivot_of_col.items():
            if (work[prow] >> col) & 1:
                v |= 1 << pcol
        basis.append(v)
    return basis


def solve(rows: List[int], ncols: int, target_bits: int) -> Optional[int]:
    """One solution x of M x = b, or None.

    ``rows`` are the rows of M as bit vectors over ncols columns and
    ``target_bits`` holds b with bit i = b_i.
    """
    aug = [r | (((target_bits >> i) & 1) << ncols) for i, r in enumerate(rows)]
    work = aug[:]
    pivot_of_col: dict[int, int] = {}
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        pivot_of_col[col] = row_idx
        row_idx += 1
    mask = (1 << ncols) - 1
    for r in work:
        if (r & mask) == 0 and (r >> ncols) & 1:
            return None
    x = 0
    for col, prow in pivot_of_col.items():
        if (work[prow] >> ncols) & 1:
            x |= 1 << col
    return x


def span_vectors(basis_rows: List[int]) -> List[int]:
    """All 2^dim vectors of the span.  Caller is responsible for the cap."""
    out = [0]
    for row in basis_rows:
        out.extend(v ^ row for v in list(out))
    return out
