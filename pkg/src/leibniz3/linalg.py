"""Exact dense linear algebra over a :class:`FieldSpec`.

Vectors are tuples of field elements.  Subspaces are always stored by the
nonzero rows of their reduced row echelon form, so two subspaces are equal
exactly when their stored bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FieldMismatchError, FormatError, UsageError
from .exactfield import FieldSpec

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise UsageError(f"matrix entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None):
        entries = tuple(tuple(field(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(field, len(entries), cols, entries)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int):
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int):
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> Matrix:
        entries = tuple(tuple(r[j] for r in self.entries) for j in range(self.cols))
        return Matrix(self.field, self.cols, self.rows, entries)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise UsageError(f"vector of length {len(v)} applied to {self.rows}x{self.cols} matrix")
        red = self.field.reduce
        nz = [(j, x) for j, x in enumerate(v) if x]
        return tuple(red(sum(row[j] * x for j, x in nz)) for row in self.entries)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise FieldMismatchError("matrix fields differ")
        if self.cols != other.rows:
            raise UsageError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        red = self.field.reduce
        return Matrix(self.field, self.rows, other.cols, tuple(
            tuple(red(sum(a * b for a, b in zip(row, col))) for col in cols) for row in self.entries))


def _rref_rows(rows: list[list], field: FieldSpec) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan elimination; returns (nonzero rows, pivot columns)."""
    red = field.reduce
    inv = field.inv
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        for i in range(r, len(rows)):
            if rows[i][c]:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        f = prow[c]
        if f != 1:
            s = inv(f)
            prow[:] = [red(x * s) for x in prow]
        for i, row in enumerate(rows):
            if i != r and row[c]:
                g = row[c]
                rows[i] = [red(x - g * y) if y else x for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> Matrix:
    rows, _ = _rref_rows([list(r) for r in m.entries], m.field)
    z = m.field.zero
    entries = tuple(tuple(r) for r in rows) + tuple((z,) * m.cols for _ in range(m.rows - len(rows)))
    return Matrix(m.field, m.rows, m.cols, entries)


def rank(m: Matrix) -> int:
    return len(_rref_rows([list(r) for r in m.entries], m.field)[1])


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    basis: tuple  # RREF rows, no zero rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient_dim, self.basis)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        _same_ambient(self, other)
        return all(contains(other, v) for v in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(map(str, r)) + ")" for r in self.basis)
        return f"Subspace({self.field}, {self.ambient_dim}, [{rows}])"


def _same_ambient(u: Subspace, w: Subspace):
    if u.field != w.field:
        raise FieldMismatchError(f"subspaces over different fields: {u.field} vs {w.field}")
    if u.ambient_dim != w.ambient_dim:
        raise UsageError(f"ambient dimensions differ: {u.ambient_dim} vs {w.ambient_dim}")


def span(vectors: Iterable[Sequence], field: FieldSpec, ambient_dim: int | None = None) -> Subspace:
    rows = [list(v) for v in vectors]
    if ambient_dim is None:
        if not rows:
            raise UsageError("ambient_dim is required to span an empty set")
        ambient_dim = len(rows[0])
    for v in rows:
        if len(v) != ambient_dim:
            raise UsageError(f"vector of length {len(v)} in ambient space of dimension {ambient_dim}")
    rows = [r for r in rows if any(r)]
    basis, _ = _rref_rows(rows, field)
    return Subspace(field, ambient_dim, tuple(tuple(r) for r in basis))


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, Matrix.identity(field, n).entries)


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} as a subspace of F^cols."""
    rows, pivots = _rref_rows([list(r) for r in m.entries if any(r)], m.field)
    red = m.field.reduce
    z, o = m.field.zero, m.field.one
    pivset = set(pivots)
    vecs = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [z] * m.cols
        v[f] = o
        for row, pc in zip(rows, pivots):
            v[pc] = red(-row[f])
        vecs.append(v)
    return span(vecs, m.field, m.cols)


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _same_ambient(u, w)
    return span(u.basis + w.basis, u.field, u.ambient_dim)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    # a.U = b.W  <=>  (a, b) in ker [U^T | -W^T]
    _same_ambient(u, w)
    f = u.field
    if not u.dim or not w.dim:
        return zero_subspace(f, u.ambient_dim)
    red = f.reduce
    system = [[r[c] for r in u.basis] + [red(-r[c]) for r in w.basis]
              for c in range(u.ambient_dim)]
    ker = kernel(Matrix(f, u.ambient_dim, u.dim + w.dim, tuple(tuple(r) for r in system)))
    vecs = []
    for coeffs in ker.basis:
        a = coeffs[:u.dim]
        vecs.append([red(sum(ai * r[c] for ai, r in zip(a, u.basis))) for c in range(u.ambient_dim)])
    return span(vecs, f, u.ambient_dim)


def reduce_mod(s: Subspace, v: Sequence) -> Vector:
    """Subtract from ``v`` the combination of ``s``'s basis clearing its pivot entries."""
    red = s.field.reduce
    out = list(v)
    for row, pc in zip(s.basis, s.pivots):
        g = out[pc]
        if g:
            out = [red(x - g * y) if y else x for x, y in zip(out, row)]
    return tuple(out)


def contains(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient_dim:
        raise UsageError(f"vector of length {len(v)} tested against ambient dimension {s.ambient_dim}")
    return not any(reduce_mod(s, v))


def codim(s: Subspace) -> int:
    return s.codim


def complement_coords(s: Subspace) -> list[int]:
    """Non-pivot coordinates; their standard basis vectors span a complement of ``s``."""
    piv = set(s.pivots)
    return [j for j in range(s.ambient_dim) if j not in piv]


def standard_vector(field: FieldSpec, n: int, i: int) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(n))


# -- JSON form --------------------------------------------------------------

def subspace_to_json(s: Subspace) -> dict:
    fmt = s.field.format
    return {"ambient_dim": s.ambient_dim, "basis": [[fmt(x) for x in r] for r in s.basis]}


def subspace_from_json(obj, field: FieldSpec) -> Subspace:
    if not isinstance(obj, dict):
        raise FormatError("subspace: expected a JSON object")
    n = obj.get("ambient_dim")
    if type(n) is not int or n < 0:
        raise FormatError(f"ambient_dim: expected a non-negative integer, got {n!r}")
    basis = obj.get("basis")
    if not isinstance(basis, list):
        raise FormatError("basis: expected a list of vectors")
    vecs = []
    for idx, row in enumerate(basis):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"basis[{idx}]: expected {n} scalar strings")
        vecs.append([_scalar_from_json(field, x, f"basis[{idx}]") for x in row])
    return span(vecs, field, n)


def matrix_to_json(m: Matrix) -> dict:
    fmt = m.field.format
    return {"rows": m.rows, "cols": m.cols, "entries": [[fmt(x) for x in r] for r in m.entries]}


def _scalar_from_json(field: FieldSpec, x, where: str):
    if not isinstance(x, str):
        raise FormatError(f"{where}: scalars must be strings, got {x!r}")
    try:
        return field.parse(x)
    except FormatError as exc:
        raise FormatError(f"{where}: {exc}") from None
