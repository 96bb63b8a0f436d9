"""Exact sparse linear algebra over an abstract field.

Vectors are plain dicts ``{ordinal: coefficient}`` with no stored zeros.  Field
elements only need ``+ - *``, ``inv()`` and truthiness (``bool(x)`` is False
exactly for zero), which both ``CycloElem`` and ``PrimeFieldElem`` provide.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field as dc_field


def _axpy(y: dict, a, x: dict) -> None:
    """y += a * x in place, dropping cancelled entries."""
    for k, v in x.items():
        s = y.get(k)
        s = a * v if s is None else s + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class SparseOperator:
    """Square sparse matrix stored column-major: ``cols[c] = {row: coeff}``."""

    __slots__ = ("dim", "field", "cols")

    def __init__(self, dim: int, field, cols: dict | None = None):
        self.dim = dim
        self.field = field
        self.cols = {}
        for c, col in (cols or {}).items():
            col = {r: v for r, v in col.items() if v}
            if col:
                self.cols[c] = col

    @classmethod
    def identity(cls, dim: int, field) -> SparseOperator:
        return cls(dim, field, {k: {k: field.one} for k in range(dim)})

    @classmethod
    def diagonal(cls, values, field) -> SparseOperator:
        values = list(values)
        return cls(len(values), field, {k: {k: v} for k, v in enumerate(values)})

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for c, a in vec.items():
            col = self.cols.get(c)
            if col:
                _axpy(out, a, col)
        return out

    def __matmul__(self, other: SparseOperator) -> SparseOperator:
        return SparseOperator(self.dim, self.field, {c: self.apply(col) for c, col in other.cols.items()})

    def __add__(self, other: SparseOperator) -> SparseOperator:
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            _axpy(cols.setdefault(c, {}), self.field.one, col)
        return SparseOperator(self.dim, self.field, cols)

    def __neg__(self) -> SparseOperator:
        return self.scale(-self.field.one)

    def __sub__(self, other: SparseOperator) -> SparseOperator:
        return self + (-other)

    def scale(self, a) -> SparseOperator:
        return SparseOperator(self.dim, self.field, {c: {r: a * v for r, v in col.items()} for c, col in self.cols.items()})

    def __pow__(self, k: int) -> SparseOperator:
        acc = SparseOperator.identity(self.dim, self.field)
        for _ in range(k):
            acc = self @ acc
        return acc

    def transpose(self) -> SparseOperator:
        cols: dict = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v
        return SparseOperator(self.dim, self.field, cols)

    def map(self, f, field) -> SparseOperator:
        """Apply ``f`` to every coefficient, landing in ``field``."""
        return SparseOperator(self.dim, field, {c: {r: f(v) for r, v in col.items()} for c, col in self.cols.items()})

    def rows(self) -> dict:
        return self.transpose().cols

    def entries(self) -> list:
        """(col, row, coeff) triples sorted by (col, row)."""
        return [(c, r, self.cols[c][r]) for c in sorted(self.cols) for r in sorted(self.cols[c])]

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def is_diagonal(self) -> bool:
        return all(set(col) == {c} for c, col in self.cols.items())

    def first_difference(self, other: SparseOperator):
        """(row, col) of the first differing entry in (col, row) order, or None."""
        for c in sorted(set(self.cols) | set(other.cols)):
            a, b = self.cols.get(c, {}), other.cols.get(c, {})
            for r in sorted(set(a) | set(b)):
                x, y = a.get(r), b.get(r)
                if x is None or y is None or x != y:
                    return (r, c)
        return None

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.dim == other.dim and self.first_difference(other) is None

    def to_dense(self) -> list[list]:
        out = [[self.field.zero] * self.dim for _ in range(self.dim)]
        for c, col in self.cols.items():
            for r, v in col.items():
                out[r][c] = v
        return out

    def __repr__(self):
        return f"SparseOperator(dim={self.dim}, nnz={self.nnz})"


@dataclass
class SubspaceBasis:
    """Reduced row-echelon basis: ``vectors[k]`` has coefficient 1 at ``pivots[k]``
    and zero at every other pivot."""

    dim: int
    pivots: list = dc_field(default_factory=list)
    vectors: list = dc_field(default_factory=list)

    def __len__(self):
        return len(self.vectors)

    def support(self) -> list[int]:
        return sorted(set().union(*(v.keys() for v in self.vectors)))

    def contains(self, vec: dict) -> bool:
        ech = Echelon(self.dim)
        for p, v in zip(self.pivots, self.vectors):
            ech.rows[p] = v
        return not ech.reduce(vec)


class Echelon:
    """Incrementally built semi-echelon basis.

    Each stored row has coefficient one at its pivot (its smallest ordinal) and
    no entries at smaller ordinals.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        rows = self.rows
        heap = [k for k in vec if k in rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            a = vec.get(k)
            if not a:
                continue
            row = rows[k]
            for j, v in row.items():
                s = vec.get(j)
                if s is None:
                    vec[j] = -a * v
                    if j in rows:
                        heapq.heappush(heap, j)
                else:
                    s = s - a * v
                    if s:
                        vec[j] = s
                    else:
                        del vec[j]
        return vec

    def insert(self, vec: dict):
        """Add ``vec`` to the span; return the new normalized row or None if dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        p = min(r)
        inv = r[p].inv()
        r = {k: v * inv for k, v in r.items()}
        self.rows[p] = r
        return r

    def basis(self) -> SubspaceBasis:
        """Canonical reduced row-echelon form of the span."""
        done: dict = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for q in sorted(k for k in row if k != p and k in done):
                a = row.get(q)
                if a:
                    _axpy(row, -a, done[q])
            done[p] = row
        pivots = sorted(done)
        return SubspaceBasis(self.dim, pivots, [done[p] for p in pivots])


def rank(op: SparseOperator) -> int:
    ech = Echelon(op.dim)
    for c in sorted(op.cols):
        ech.insert(op.cols[c])
    return len(ech)


def common_nullspace(ops, dim: int | None = None, field=None) -> SubspaceBasis:
    """Basis of {v : A v = 0 for every A in ops}."""
    ops = list(ops)
    if ops:
        dim, field = ops[0].dim, ops[0].field
    if dim is None or field is None:
        raise ValueError("dim and field are required when ops is empty")
    row_space = Echelon(dim)
    for op in ops:
        if op.dim != dim:
            raise ValueError("operators of different dimensions")
        rows = op.rows()
        for r in sorted(rows):
            row_space.insert(rows[r])
    rref = row_space.basis()
    # entries of the rref at each free column
    by_col: dict = {}
    for p, vec in zip(rref.pivots, rref.vectors):
        for c, v in vec.items():
            if c != p:
                by_col.setdefault(c, []).append((p, v))
    pivots = set(rref.pivots)
    kernel = Echelon(dim)
    for f in range(dim):
        if f in pivots:
            continue
        vec = {f: field.one}
        for p, v in by_col.get(f, ()):
            vec[p] = -v
        kernel.insert(vec)
    return kernel.basis()


def submodule_closure(seeds, ops) -> SubspaceBasis:
    """Smallest subspace containing ``seeds`` and stable under every operator in ``ops``."""
    ops = list(ops)
    seeds = list(seeds)
    if not ops:
        raise ValueError("at least one operator is required")
    ech = Echelon(ops[0].dim)
    queue = deque()
    for s in seeds:
        row = ech.insert(s)
        if row is not None:
            queue.append(row)
    while queue:
        vec = queue.popleft()
        for op in ops:
            row = ech.insert(op.apply(vec))
            if row is not None:
                queue.append(row)
    return ech.basis()


def inconsistency_certificate(equations, nvars: int, field):
    """Look for a combination of linear equations that reads ``0 = c`` with c != 0.

    Each equation is ``({var: coeff}, const)`` meaning sum(coeff * x_var) + const = 0.
    Returns ``{equation index: multiplier}`` or None if the system is consistent.
    """
    const_col = nvars
    ech = Echelon(nvars + 1 + len(equations))
    for idx, (eq, const) in enumerate(equations):
        row = {k: v for k, v in eq.items() if v}
        if const:
            row[const_col] = const
        if not row:
            continue
        row[const_col + 1 + idx] = field.one
        new = ech.insert(row)
        if new is not None and min(new) == const_col:
            # pivot on the constant: the variables cancelled out
            return {k - const_col - 1: v for k, v in new.items() if k > const_col}
    return None
