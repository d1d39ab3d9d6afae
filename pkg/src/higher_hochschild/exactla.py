"""Exact sparse linear algebra over the rationals.

Vectors are plain ``dict[int, Fraction | int]`` mappings with no stored zeros.
Every routine here is exact; integer entries stay integers until a division
forces a :class:`fractions.Fraction`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Vector = dict


class ContainmentError(ValueError):
    """A subspace was expected to lie inside another one and does not."""


def _div(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def as_rational(x) -> Fraction:
    """Parse ints, Fractions and ``"num/den"`` strings into a Fraction."""
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class SparseMatrix:
    """Immutable sparse matrix over Q, stored column-wise.

    Parameters
    ----------
    rows, cols : int
        Shape of the matrix.
    entries : mapping
        ``{(row, col): value}``; zero values are dropped.
    """

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None):
        self.rows = rows
        self.cols = cols
        columns: dict[int, dict] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry {(r, c)} outside a {rows}x{cols} matrix")
            v = _clean(v)
            if v != 0:
                columns.setdefault(c, {})[r] = v
        self._columns = columns

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping]) -> "SparseMatrix":
        m = cls(rows, len(columns))
        store = {}
        for c, col in enumerate(columns):
            kept = {}
            for r, v in col.items():
                if v != 0:
                    if not 0 <= r < rows:
                        raise IndexError(f"row {r} outside a matrix with {rows} rows")
                    kept[r] = _clean(v)
            if kept:
                store[c] = kept
        m._columns = store
        return m

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(nr, nc, {(i, j): as_rational(v) for i, row in enumerate(rows)
                            for j, v in enumerate(row) if v != 0})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, c: int) -> dict:
        return dict(self._columns.get(c, {}))

    def columns(self) -> list[dict]:
        return [dict(self._columns.get(c, {})) for c in range(self.cols)]

    def row_vectors(self) -> list[dict]:
        out: list[dict] = [{} for _ in range(self.rows)]
        for c, col in self._columns.items():
            for r, v in col.items():
                out[r][c] = v
        return out

    def entries(self) -> dict:
        return {(r, c): v for c, col in self._columns.items() for r, v in col.items()}

    def nnz(self) -> int:
        return sum(len(col) for col in self._columns.values())

    def __getitem__(self, rc):
        r, c = rc
        return self._columns.get(c, {}).get(r, 0)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def is_zero(self) -> bool:
        return not self._columns

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_columns(self.cols, self.row_vectors())

    def apply(self, v: Mapping) -> dict:
        out: dict = {}
        for c, x in v.items():
            col = self._columns.get(c)
            if col:
                for r, a in col.items():
                    out[r] = out.get(r, 0) + a * x
        return {r: _clean(x) for r, x in out.items() if x != 0}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrix.from_columns(self.rows, [self.apply(other._columns.get(c, {}))
                                                     for c in range(other.cols)])

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = self.columns()
        for c, col in other._columns.items():
            target = cols[c]
            for r, v in col.items():
                target[r] = target.get(r, 0) + v
        return SparseMatrix.from_columns(self.rows, cols)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, s) -> "SparseMatrix":
        return SparseMatrix.from_columns(self.rows, [{r: v * s for r, v in col.items()}
                                                     for col in self.columns()])

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries().items():
            out[r][c] = v
        return out


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim given by an independent list of sparse vectors."""

    ambient_dim: int
    basis: tuple = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Mapping]) -> "Subspace":
        """Independent subfamily of ``vectors`` (first-come pivot completion)."""
        ech = Echelon()
        kept = []
        for v in vectors:
            if ech.add(v):
                kept.append({k: x for k, x in v.items() if x != 0})
        return cls(ambient_dim, tuple(kept))

    def contains(self, v: Mapping) -> bool:
        ech = Echelon()
        for b in self.basis:
            ech.add(b)
        return ech.reduce(v) == {}


class Echelon:
    """Incrementally maintained echelon form of a growing vector family.

    Pivots are chosen as the smallest index of each reduced vector, so the
    outcome is deterministic for a fixed insertion order.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Mapping) -> dict:
        w = {k: x for k, x in v.items() if x != 0}
        if not self.pivots:
            return w
        pending = sorted(k for k in w if k in self.pivots)
        heapq.heapify(pending)
        seen = set(pending)
        while pending:
            k = heapq.heappop(pending)
            x = w.get(k)
            if not x:
                continue
            for j, y in self.pivots[k].items():
                nv = w.get(j, 0) - x * y
                if nv:
                    w[j] = nv
                    if j in self.pivots and j not in seen:
                        seen.add(j)
                        heapq.heappush(pending, j)
                else:
                    w.pop(j, None)
        return w

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; returns True when it was independent of the family."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        a = w[p]
        self.pivots[p] = {k: _clean(_div(x, a)) for k, x in w.items()}
        return True


def _eliminate(vectors: Sequence[Mapping], want_pivots: bool = False):
    """Sparse Gaussian elimination with a Markowitz-style pivot choice.

    Vectors are treated as the rows of a matrix. The pivot column is the
    active column with fewest entries, the pivot row the shortest row in it.
    Returns the rank and, when ``want_pivots`` is set, the pivot rows keyed by
    pivot column (pivot entry 1, fully reduced against each other).
    """
    rows: dict[int, dict] = {}
    col_rows: dict[int, set] = {}
    for i, v in enumerate(vectors):
        r = {k: _clean(x) for k, x in v.items() if x != 0}
        if r:
            rows[i] = r
            for k in r:
                col_rows.setdefault(k, set()).add(i)
    heap = [(len(s), k) for k, s in col_rows.items()]
    heapq.heapify(heap)
    pivot_rows: dict[int, dict] = {}
    rank = 0
    while heap:
        cnt, c = heapq.heappop(heap)
        active = col_rows.get(c)
        if not active:
            continue
        if cnt != len(active):
            heapq.heappush(heap, (len(active), c))
            continue
        p = min(active, key=lambda i: (len(rows[i]), i))
        prow = rows.pop(p)
        a = prow[c]
        if a != 1:
            prow = {k: _div(x, a) for k, x in prow.items()}
        rank += 1
        for k in prow:
            col_rows[k].discard(p)
        touched = set()
        for i in list(active):
            r = rows[i]
            f = r[c]
            for k, y in prow.items():
                nv = r.get(k, 0) - f * y
                if nv:
                    if k not in r:
                        col_rows[k].add(i)
                    r[k] = nv
                else:
                    del r[k]
                    col_rows[k].discard(i)
            touched.update(prow)
            if not r:
                del rows[i]
        del col_rows[c]
        for k in touched:
            s = col_rows.get(k)
            if s:
                heapq.heappush(heap, (len(s), k))
        if want_pivots:
            for q, r in pivot_rows.items():
                f = r.get(c)
                if f:
                    for k, y in prow.items():
                        nv = r.get(k, 0) - f * y
                        if nv:
                            r[k] = nv
                        else:
                            del r[k]
            pivot_rows[c] = prow
    if want_pivots:
        return rank, pivot_rows
    return rank


def rank(m: SparseMatrix) -> int:
    """Exact rank over Q."""
    if m.is_zero():
        return 0
    cols = [c for c in m._columns.values()]
    if len(cols) <= m.rows:
        return _eliminate(cols)
    return _eliminate(m.row_vectors())


def rank_of_vectors(vectors: Sequence[Mapping]) -> int:
    return _eliminate(vectors)


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Basis of ``{v : m v = 0}`` read off the reduced row echelon form."""
    _, pivots = _eliminate(m.row_vectors(), want_pivots=True)
    pivot_cols = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_cols]
    # column -> pivot rows mentioning it
    mention: dict[int, list] = {}
    for pc, row in pivots.items():
        for k, x in row.items():
            if k != pc:
                mention.setdefault(k, []).append((pc, x))
    basis = []
    for f in free_cols:
        v = {f: 1}
        for pc, x in mention.get(f, ()):
            v[pc] = _clean(-x)
        basis.append(v)
    return Subspace(m.cols, tuple(basis))


def image_basis(m: SparseMatrix) -> Subspace:
    return Subspace.span(m.rows, (m._columns.get(c, {}) for c in range(m.cols)))


def _check_contained(sub: Subspace, inside: Subspace) -> Echelon:
    if sub.ambient_dim != inside.ambient_dim:
        raise ContainmentError("subspaces live in different ambient spaces")
    ech = Echelon()
    for b in inside.basis:
        ech.add(b)
    for v in sub.basis:
        if ech.reduce(v):
            raise ContainmentError("subspace is not contained in the given space")
    return ech


def quotient_dim(sub: Subspace, inside: Subspace) -> int:
    """``dim(inside) - dim(sub)`` after checking ``sub`` lies inside ``inside``."""
    _check_contained(sub, inside)
    return inside.dim - sub.dim


def representatives(cycles: Subspace, boundaries: Subspace) -> list[dict]:
    """Cycle basis vectors completing ``boundaries`` to a basis of ``cycles``."""
    _check_contained(boundaries, cycles)
    ech = Echelon()
    for b in boundaries.basis:
        ech.add(b)
    reps = []
    for z in cycles.basis:
        if ech.add(z):
            reps.append(dict(z))
    return reps


def solve_modulo(target: Mapping, basis: Sequence[Mapping], modulo: Sequence[Mapping]):
    """Coefficients ``c`` with ``target - sum(c_i basis_i)`` in span(modulo).

    Returns None when ``target`` is not in span(basis) + span(modulo).
    """
    offset = 1 + max([0] + [max(v, default=0) for v in [*basis, *modulo, target]])
    ech = Echelon()
    for v in modulo:
        ech.add(v)
    for i, b in enumerate(basis):
        w = dict(b)
        w[offset + i] = 1
        ech.add(w)
    r = ech.reduce(target)
    if any(k < offset for k in r):
        return None
    coeffs = [0] * len(basis)
    for k, x in r.items():
        coeffs[k - offset] = _clean(-x)
    return coeffs
