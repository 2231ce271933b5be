"""Arithmetic over prime fields Z_d: residues, matrices, symplectic vectors.

Everything is exact integer arithmetic reduced mod d.  Matrices are small
(at most 23 x 46 in this package) and stored as immutable tuples; use
`.array()` when NumPy speed is wanted.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

_SMALL_PRIMES = {2, 3, 5, 7, 11, 13, 17, 19, 23}


def check_prime(d: int) -> None:
    if d in _SMALL_PRIMES:
        return
    if d < 2 or any(d % p == 0 for p in range(2, int(d**0.5) + 1)):
        raise ValueError(f"modulus {d} is not prime")


def field_inv(x: int, d: int) -> int:
    """Multiplicative inverse of x mod prime d; rejects x == 0."""
    check_prime(d)
    x %= d
    if x == 0:
        raise ZeroDivisionError(f"no inverse of 0 mod {d}")
    return pow(x, d - 2, d)


@dataclass(frozen=True)
class FieldMatrix:
    """Immutable matrix over Z_d, entries stored as canonical residues.

    `width` only needs to be passed for matrices with zero rows, where the
    column count cannot be inferred.
    """

    d: int
    rows: tuple[tuple[int, ...], ...]
    width: int = -1

    def __post_init__(self):
        check_prime(self.d)
        reduced = tuple(tuple(int(x) % self.d for x in row) for row in self.rows)
        widths = {len(r) for r in reduced}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", reduced)
        if reduced:
            object.__setattr__(self, "width", len(reduced[0]))
        elif self.width < 0:
            raise ValueError("empty matrix needs an explicit width")

    @classmethod
    def from_array(cls, arr, d: int) -> "FieldMatrix":
        a = np.asarray(arr, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls(d, tuple(tuple(int(x) for x in row) for row in a), a.shape[1])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.width

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    def transpose(self) -> "FieldMatrix":
        if not self.rows:
            return FieldMatrix(self.d, tuple(() for _ in range(self.width)), 0)
        return FieldMatrix(self.d, tuple(zip(*self.rows)), self.nrows)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.d != other.d:
            raise ValueError("modulus mismatch")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        prod = (self.array() @ other.array()) % self.d
        return FieldMatrix.from_array(prod, self.d)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def row_reduce(self) -> "FieldMatrix":
        """Reduced row-echelon form over Z_d (same row span, zero rows kept)."""
        m = [list(r) for r in self.rows]
        d = self.d
        nrows, ncols = len(m), self.ncols
        r = 0
        for c in range(ncols):
            pivot = next((i for i in range(r, nrows) if m[i][c] % d), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = field_inv(m[r][c], d)
            m[r] = [(x * inv) % d for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [(a - f * b) % d for a, b in zip(m[i], m[r])]
            r += 1
            if r == nrows:
                break
        return FieldMatrix(self.d, tuple(tuple(row) for row in m), self.width)

    def rank(self) -> int:
        rr = self.row_reduce()
        return sum(1 for row in rr.rows if any(row))

    def in_row_span(self, vector: Sequence[int]) -> bool:
        """True iff the vector reduces to zero against this matrix's RREF."""
        rr = self.row_reduce()
        v = [int(x) % self.d for x in vector]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        for row in rr.rows:
            piv = next((j for j, x in enumerate(row) if x), None)
            if piv is not None and v[piv]:
                f = v[piv]
                v = [(a - f * b) % self.d for a, b in zip(v, row)]
        return not any(v)

    def same_row_span(self, other: "FieldMatrix") -> bool:
        if self.d != other.d or self.ncols != other.ncols:
            return False
        return (self.rank() == other.rank()
                and all(self.in_row_span(r) for r in other.rows))

    def solve(self, rhs: Sequence[int]) -> tuple[int, ...] | None:
        """One solution x of (self @ x = rhs) over Z_d, or None if inconsistent."""
        d = self.d
        aug = [list(row) + [int(b) % d] for row, b in zip(self.rows, rhs)]
        nrows, ncols = len(aug), self.ncols
        r = 0
        pivots = []
        for c in range(ncols):
            pivot = next((i for i in range(r, nrows) if aug[i][c] % d), None)
            if pivot is None:
                continue
            aug[r], aug[pivot] = aug[pivot], aug[r]
            inv = field_inv(aug[r][c], d)
            aug[r] = [(x * inv) % d for x in aug[r]]
            for i in range(nrows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [(a - f * b) % d for a, b in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
        for i in range(r, nrows):
            if aug[i][ncols]:
                return None
        x = [0] * ncols
        for i, c in enumerate(pivots):
            x[c] = aug[i][ncols]
        return tuple(x)

    def stack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.d != other.d or self.ncols != other.ncols:
            raise ValueError("incompatible stack")
        return FieldMatrix(self.d, self.rows + other.rows, self.width)

    # -- plain text format: "d rows cols" then one line per row -------------

    def to_text(self) -> str:
        lines = [f"{self.d} {self.nrows} {self.ncols}"]
        lines += [" ".join(str(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FieldMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix file")
        header = lines[0].split()
        if len(header) != 3:
            raise ValueError("header must be 'd rows cols'")
        d, nrows, ncols = (int(x) for x in header)
        if len(lines) - 1 != nrows:
            raise ValueError(f"expected {nrows} rows, found {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            entries = [int(x) for x in ln.split()]
            if len(entries) != ncols:
                raise ValueError(f"row has {len(entries)} entries, expected {ncols}")
            rows.append(tuple(entries))
        return cls(d, tuple(rows))


@dataclass(frozen=True)
class SympVec:
    """Symplectic vector (u|v) over Z_d for an n-qudit displacement."""

    d: int
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.d)
        if len(self.u) != len(self.v):
            raise ValueError("u and v parts must have equal length")
        object.__setattr__(self, "u", tuple(int(x) % self.d for x in self.u))
        object.__setattr__(self, "v", tuple(int(x) % self.d for x in self.v))

    @property
    def n(self) -> int:
        return len(self.u)

    @classmethod
    def from_row(cls, row: Sequence[int], d: int) -> "SympVec":
        row = list(row)
        if len(row) % 2:
            raise ValueError("row length must be even")
        n = len(row) // 2
        return cls(d, tuple(row[:n]), tuple(row[n:]))

    def as_row(self) -> tuple[int, ...]:
        return self.u + self.v

    def weight(self) -> int:
        return sum(1 for a, b in zip(self.u, self.v) if a or b)


def symplectic_product(a: SympVec, b: SympVec) -> int:
    """<a,b> = a.u . b.v - a.v . b.u (mod d); antisymmetric and bilinear."""
    if a.d != b.d or a.n != b.n:
        raise ValueError("symplectic vectors of different shape")
    s = sum(x * y for x, y in zip(a.u, b.v)) - sum(x * y for x, y in zip(a.v, b.u))
    return s % a.d
