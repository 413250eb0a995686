"""Exact linear algebra over the rationals.

Matrices are stored as lists of sparse rows (``{col: value}``) with
``gmpy2.mpq`` entries.  Elimination always uses the first nonzero column
as pivot, so every result here is deterministic.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from heapq import heapify, heappop, heappush
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

Rational = type(mpq())

__all__ = [
    "Rational",
    "Q",
    "Matrix",
    "Subspace",
    "DimensionError",
    "rref",
    "rank",
    "kernel_basis",
    "in_span",
    "quotient_coords",
    "span",
]


class DimensionError(ValueError):
    """Raised when a vector or matrix has the wrong size."""


def Q(x) -> Rational:
    """Coerce ``x`` (int, Fraction, str, mpq) to an exact rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return mpq(x)


def _clean(row: Mapping) -> dict:
    out = {}
    for c, v in row.items():
        v = Q(v)
        if v:
            out[c] = v
    return out


class Matrix:
    """Sparse exact matrix with fixed shape."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, entries: Mapping | None = None):
        if nrows < 0 or ncols < 0:
            raise DimensionError("negative matrix dimension")
        self.nrows = nrows
        self.ncols = ncols
        rows: list[dict] = [{} for _ in range(nrows)]
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            v = Q(v)
            if v:
                rows[i][j] = v
        self._rows = rows

    @classmethod
    def from_sparse_rows(cls, nrows: int, ncols: int, rows: Sequence[Mapping]) -> "Matrix":
        if len(rows) != nrows:
            raise DimensionError("row count mismatch")
        m = cls(nrows, ncols)
        cleaned = []
        for r in rows:
            r = _clean(r)
            if r and (min(r) < 0 or max(r) >= ncols):
                raise DimensionError("column index out of range")
            cleaned.append(r)
        m._rows = cleaned
        return m

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping]) -> "Matrix":
        """Build a matrix whose j-th column is the sparse vector ``columns[j]``."""
        rows: list[dict] = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                v = Q(v)
                if v:
                    rows[i][j] = v
        m = cls(nrows, len(columns))
        m._rows = rows
        return m

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls.from_sparse_rows(nrows, ncols, [dict(enumerate(r)) for r in rows])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def entries(self) -> dict:
        return {(i, j): v for i, r in enumerate(self._rows) for j, v in r.items()}

    def row(self, i: int) -> dict:
        return dict(self._rows[i])

    def sparse_rows(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def columns(self) -> list[dict]:
        cols: list[dict] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def __getitem__(self, ij) -> Rational:
        i, j = ij
        return self._rows[i].get(j, mpq(0))

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def to_dense(self) -> list[list[Rational]]:
        return [[r.get(j, mpq(0)) for j in range(self.ncols)] for r in self._rows]

    def transpose(self) -> "Matrix":
        return Matrix.from_sparse_rows(self.ncols, self.nrows, self.columns())

    def apply(self, v: Mapping | Sequence) -> dict:
        """Return ``self @ v`` as a sparse dict; ``v`` may be dense or sparse."""
        if not isinstance(v, Mapping):
            if len(v) != self.ncols:
                raise DimensionError("vector length does not match column count")
            v = {j: Q(x) for j, x in enumerate(v) if x}
        out = {}
        for i, r in enumerate(self._rows):
            s = mpq(0)
            if len(r) < len(v):
                for j, a in r.items():
                    b = v.get(j)
                    if b is not None:
                        s += a * b
            else:
                for j, b in v.items():
                    a = r.get(j)
                    if a is not None:
                        s += a * b
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions differ")
        out = []
        for r in self._rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in other._rows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append({j: v for j, v in acc.items() if v})
        return Matrix.from_sparse_rows(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self._rows) == (other.nrows, other.ncols, other._rows)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# elimination kernels


def _axpy(row: dict, a: Rational, prow: Mapping, heap: list | None = None) -> None:
    """row -= a * prow, in place, dropping cancelled entries."""
    for c, v in prow.items():
        old = row.get(c)
        if old is None:
            row[c] = -a * v
            if heap is not None:
                heappush(heap, c)
        else:
            new = old - a * v
            if new:
                row[c] = new
            else:
                del row[c]


def _insert(row: dict, pivots: dict) -> int | None:
    """Reduce ``row`` until its leading column is not a pivot.

    On success the row is normalised, stored in ``pivots`` and its pivot
    column returned; ``None`` means the row reduced to zero.
    """
    heap = list(row)
    heapify(heap)
    while heap:
        c = heappop(heap)
        a = row.get(c)
        if a is None:
            continue
        prow = pivots.get(c)
        if prow is None:
            if a != 1:
                inv = 1 / a
                for k in row:
                    row[k] *= inv
            pivots[c] = row
            return c
        del row[c]
        for k, v in prow.items():
            if k == c:
                continue
            old = row.get(k)
            if old is None:
                row[k] = -a * v
                heappush(heap, k)
            else:
                new = old - a * v
                if new:
                    row[k] = new
                else:
                    del row[k]
    return None


def _echelon(rows: Iterable[Mapping]) -> dict:
    """Row echelon form as ``{pivot column: row}`` with unit pivots."""
    pivots: dict = {}
    for r in rows:
        if r:
            _insert(dict(r), pivots)
    return pivots


def _back_substitute(pivots: dict) -> list[tuple[int, dict]]:
    """Turn an echelon dict into RREF rows, returned in pivot order."""
    order = sorted(pivots)
    done: dict = {}
    for c in reversed(order):
        row = pivots[c]
        hits = [k for k in row if k != c and k in done]
        for k in sorted(hits):
            a = row.get(k)
            if a:
                del row[k]
                for kk, v in done[k].items():
                    if kk == k:
                        continue
                    old = row.get(kk)
                    if old is None:
                        row[kk] = -a * v
                    else:
                        new = old - a * v
                        if new:
                            row[kk] = new
                        else:
                            del row[kk]
        done[c] = row
    return [(c, pivots[c]) for c in order]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns.

    Zero rows are appended at the bottom so the shape is preserved.
    """
    pivots = _echelon(m._rows)
    reduced = _back_substitute(pivots)
    rows = [r for _, r in reduced] + [{} for _ in range(m.nrows - len(reduced))]
    return Matrix.from_sparse_rows(m.nrows, m.ncols, rows), [c for c, _ in reduced]


def rank(m: Matrix) -> int:
    # rank is invariant under transposition; eliminate along the shorter side
    rows = m._rows if m.nrows <= m.ncols else m.columns()
    return len(_echelon(sorted((r for r in rows if r), key=len)))


def rank_of_rows(rows: Iterable[Mapping]) -> int:
    """Rank of the span of sparse row vectors."""
    return len(_echelon(sorted((r for r in rows if r), key=len)))


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of Q^n stored by its RREF basis.

    Two subspaces are equal exactly when their RREF bases are equal.
    """

    __slots__ = ("ambient_dim", "basis", "pivots", "_where", "_nonpivot", "_qcache")

    def __init__(self, ambient_dim: int, rows: Sequence[Mapping] = (), *, _reduced: bool = False):
        self.ambient_dim = ambient_dim
        if _reduced:
            pairs = [(min(r), r) for r in rows]
        else:
            for r in rows:
                if r and (min(r) < 0 or max(r) >= ambient_dim):
                    raise DimensionError("vector index outside ambient space")
            pairs = _back_substitute(_echelon(_clean(r) for r in rows))
        self.basis: tuple[dict, ...] = tuple(r for _, r in pairs)
        self.pivots: tuple[int, ...] = tuple(c for c, _ in pairs)
        self._where = {c: k for k, c in enumerate(self.pivots)}
        self._nonpivot = None
        self._qcache: dict = {}

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [{i: mpq(1)} for i in range(n)], _reduced=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    def vectors(self) -> list[list[Rational]]:
        return [[r.get(j, mpq(0)) for j in range(self.ambient_dim)] for r in self.basis]

    def complement_columns(self) -> list[int]:
        """Non-pivot coordinates, in increasing order; they index the quotient."""
        if self._nonpivot is None:
            piv = set(self.pivots)
            self._nonpivot = [j for j in range(self.ambient_dim) if j not in piv]
        return self._nonpivot

    def _sparse(self, v) -> dict:
        if isinstance(v, Mapping):
            if v and (min(v) < 0 or max(v) >= self.ambient_dim):
                raise DimensionError("vector index outside ambient space")
            return _clean(v)
        if len(v) != self.ambient_dim:
            raise DimensionError(f"expected length {self.ambient_dim}, got {len(v)}")
        return {j: Q(x) for j, x in enumerate(v) if x}

    def reduce(self, v) -> dict:
        """Normal form of ``v`` modulo the subspace (supported off the pivots)."""
        w = self._sparse(v)
        for c in [c for c in w if c in self._where]:
            a = w.get(c)
            if a:
                _axpy(w, a, self.basis[self._where[c]])
        return w

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def quotient_coords(self, v) -> dict:
        """Coordinates of ``v`` mod the subspace in the complement basis (sparse)."""
        pos = {j: k for k, j in enumerate(self.complement_columns())}
        return {pos[j]: a for j, a in self.reduce(v).items()}

    def unit_quotient(self, j: int) -> dict:
        """Cached ``quotient_coords`` of the j-th standard basis vector."""
        hit = self._qcache.get(j)
        if hit is None:
            cols = self.complement_columns()
            if j in self._where:
                row = self.basis[self._where[j]]
                pos = {c: k for k, c in enumerate(cols)} if len(row) > 1 else {}
                hit = {pos[c]: -a for c, a in row.items() if c != j}
            else:
                hit = {bisect_left(cols, j): mpq(1)}
            self._qcache[j] = hit
        return hit

    def issubspace(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("ambient dimensions differ")
        return all(other.contains(r) for r in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim, self.pivots, self.basis) == (
            other.ambient_dim,
            other.pivots,
            other.basis,
        )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def span(ambient_dim: int, vectors: Iterable) -> Subspace:
    rows = []
    for v in vectors:
        if isinstance(v, Mapping):
            rows.append(v)
        else:
            if len(v) != ambient_dim:
                raise DimensionError("vector length mismatch")
            rows.append(dict(enumerate(v)))
    return Subspace(ambient_dim, rows)


def kernel_basis(m: Matrix) -> Subspace:
    """RREF basis of the right kernel of ``m``.

    Eliminating on the column-reversed matrix makes the standard kernel
    vectors come out already in RREF, which avoids a second elimination.
    """
    n = m.ncols
    last = n - 1
    rev = [{last - j: v for j, v in r.items()} for r in m._rows]
    pairs = _back_substitute(_echelon(r for r in rev if r))
    pivot_rev = {c for c, _ in pairs}
    # free column f (reversed) gets 1; pivot p gets -R[p][f]
    kern: dict[int, dict] = {f: {} for f in range(n) if f not in pivot_rev}
    for c, row in pairs:
        for f, a in row.items():
            if f != c:
                kern[f][last - c] = -a
    rows = []
    for f in sorted(kern, reverse=True):
        vec = kern[f]
        vec[last - f] = mpq(1)
        rows.append(vec)
    return Subspace(n, rows, _reduced=True)


def in_span(s: Subspace, v) -> bool:
    return s.contains(v)


def quotient_coords(s: Subspace, v) -> list[Rational]:
    """Dense coordinates of ``v`` modulo ``s`` in the non-pivot basis."""
    sparse = s.quotient_coords(v)
    return [sparse.get(k, mpq(0)) for k in range(s.codim)]
