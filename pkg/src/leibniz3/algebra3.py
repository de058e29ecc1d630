"""Leibniz 3-algebras given by structure constants.

The bracket is ``[e_i, e_j, e_k] = sum_m c[i,j,k][m] e_m`` extended
trilinearly.  Only nonzero coefficient vectors are stored, which makes the
tensor (and therefore the file form) unique per algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
import json
from typing import Mapping, Sequence

from .errors import FieldMismatchError, FormatError, UnsupportedFieldError, UsageError
from .exactfield import FieldSpec, field_from_json, field_to_json
from .linalg import Matrix, Vector, _scalar_from_json

UNKNOWN, VALID, INVALID = "unknown", "valid", "invalid"


class Algebra3:
    """A finite-dimensional 3-algebra over an exact field.

    ``brackets`` maps index triples ``(i, j, k)`` to coefficient vectors of
    length ``dim``; missing triples and zero vectors mean a zero bracket.
    Instances are immutable.  Whether the left Leibniz 3-identity holds is
    cached the first time :func:`validate` scans the tensor.
    """

    __slots__ = ("field", "dim", "_brackets", "_dense", "_validity")

    def __init__(self, field: FieldSpec, dim: int, brackets: Mapping | None = None):
        if type(dim) is not int or dim < 0:
            raise UsageError(f"dimension must be a non-negative integer, got {dim!r}")
        self.field = field
        self.dim = dim
        table = {}
        for key, value in (brackets or {}).items():
            i, j, k = key
            if not all(type(t) is int and 0 <= t < dim for t in key):
                raise UsageError(f"bracket index {key} out of range for dimension {dim}")
            if len(value) != dim:
                raise UsageError(f"bracket {key} has {len(value)} coefficients, expected {dim}")
            vec = tuple(field.check(x) for x in value)
            if any(vec):
                table[(i, j, k)] = vec
        self._brackets = dict(sorted(table.items()))
        self._dense = None
        self._validity = UNKNOWN

    @classmethod
    def from_flat(cls, field: FieldSpec, dim: int, coeffs: Sequence) -> Algebra3:
        """Build from ``dim**4`` coefficients in lexicographic (i, j, k, m) order."""
        n = dim
        if len(coeffs) != n ** 4:
            raise UsageError(f"expected {n ** 4} coefficients, got {len(coeffs)}")
        table = {}
        for t, (i, j, k) in enumerate(product(range(n), repeat=3)):
            vec = tuple(coeffs[t * n:(t + 1) * n])
            if any(vec):
                table[(i, j, k)] = vec
        return cls(field, n, table)

    @property
    def brackets(self) -> dict:
        return dict(self._brackets)

    @property
    def validated(self) -> str:
        return self._validity

    def constant(self, i: int, j: int, k: int) -> Vector:
        v = self._brackets.get((i, j, k))
        return v if v is not None else (self.field.zero,) * self.dim

    def dense(self) -> list:
        """Nested lists ``c[i][j][k]`` holding a vector or ``None``."""
        if self._dense is None:
            n = self.dim
            c = [[[None] * n for _ in range(n)] for _ in range(n)]
            for (i, j, k), v in self._brackets.items():
                c[i][j][k] = v
            self._dense = c
        return self._dense

    def is_abelian(self) -> bool:
        return not self._brackets

    def __eq__(self, other):
        if not isinstance(other, Algebra3):
            return NotImplemented
        return (self.field, self.dim, self._brackets) == (other.field, other.dim, other._brackets)

    def __hash__(self):
        return hash((self.field, self.dim, tuple(self._brackets.items())))

    def __repr__(self):
        return f"Algebra3({self.field}, dim={self.dim}, {len(self._brackets)} nonzero brackets)"


@dataclass(frozen=True)
class Violation:
    quintuple: tuple  # (x, y, a, b, c) in [x,y,[a,b,c]] = ...
    defect: Vector


def _check_vector(a: Algebra3, v, name="vector"):
    if len(v) != a.dim:
        raise UsageError(f"{name} has length {len(v)}, algebra has dimension {a.dim}")


def bracket(a: Algebra3, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    for name, v in (("x", x), ("y", y), ("z", z)):
        _check_vector(a, v, name)
    return _bracket(a, x, y, z)


def _bracket(a, x, y, z):
    n = a.dim
    table = a._brackets
    out = [0] * n
    nzx = [(i, s) for i, s in enumerate(x) if s]
    nzy = [(j, s) for j, s in enumerate(y) if s]
    nzz = [(k, s) for k, s in enumerate(z) if s]
    for i, xi in nzx:
        for j, yj in nzy:
            xy = xi * yj
            for k, zk in nzz:
                v = table.get((i, j, k))
                if v is not None:
                    coef = xy * zk
                    for m, vm in enumerate(v):
                        if vm:
                            out[m] += coef * vm
    red = a.field.reduce
    zero = a.field.zero
    return tuple(red(zero + t) for t in out)


def validate(a: Algebra3, max_reports: int = 100) -> list[Violation]:
    """Check the left Leibniz 3-identity on every basis quintuple.

    ``[x,y,[a,b,c]] = [[x,y,a],b,c] + [a,[x,y,b],c] + [a,b,[x,y,c]]``;
    by multilinearity basis elements suffice.  Violations come back in
    lexicographic quintuple order, at most ``max_reports`` of them; the scan
    stops early only once that many are found, so ``max_reports=1`` is the
    fast-fail mode.  The algebra's validity flag is updated either way.
    """
    if max_reports < 1:
        raise UsageError("max_reports must be at least 1")
    n = a.dim
    c = a.dense()
    red = a.field.reduce
    # nonzero entries of each stored coefficient vector
    nz = [[[None if v is None else [(m, t) for m, t in enumerate(v) if t] for v in row]
            for row in plane] for plane in c]
    out = []
    rng = range(n)
    for p in rng:
        for q in rng:
            D = nz[p][q]  # D[x] = nonzero part of [e_p, e_q, e_x]
            if all(col is None for col in D):
                continue
            Dfull = c[p][q]
            for i in rng:
                for j in rng:
                    for k in rng:
                        acc = [0] * n
                        lhs = nz[i][j][k]
                        if lhs:
                            for m, t in lhs:
                                col = Dfull[m]
                                if col is not None:
                                    for s in rng:
                                        acc[s] += t * col[s]
                        for slot, idx in ((0, i), (1, j), (2, k)):
                            img = D[idx]
                            if not img:
                                continue
                            for m, t in img:
                                if slot == 0:
                                    v = c[m][j][k]
                                elif slot == 1:
                                    v = c[i][m][k]
                                else:
                                    v = c[i][j][m]
                                if v is not None:
                                    for s in rng:
                                        acc[s] -= t * v[s]
                        if any(red(x) for x in acc):
                            zero = a.field.zero
                            out.append(Violation((p, q, i, j, k), tuple(red(zero + x) for x in acc)))
                            if len(out) >= max_reports:
                                a._validity = INVALID
                                return out
    a._validity = INVALID if out else VALID
    return out


def is_valid(a: Algebra3) -> bool:
    if a._validity == UNKNOWN:
        validate(a, max_reports=1)
    return a._validity == VALID


def left_mult_matrix(a: Algebra3, u: Sequence, v: Sequence) -> Matrix:
    """Matrix of ``x -> [u, v, x]``; column k is ``[u, v, e_k]``."""
    _check_vector(a, u, "u")
    _check_vector(a, v, "v")
    n = a.dim
    f = a.field
    cols = [_bracket(a, u, v, _unit(f, n, k)) for k in range(n)]
    return Matrix(f, n, n, tuple(tuple(cols[k][m] for k in range(n)) for m in range(n)))


def _unit(field, n, i):
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(n))


def basis_vector(a: Algebra3, i: int) -> Vector:
    return _unit(a.field, a.dim, i)


def is_derivation(a: Algebra3, f: Matrix) -> bool:
    """True iff ``f[x,y,z] = [fx,y,z] + [x,fy,z] + [x,y,fz]`` on all basis triples."""
    n = a.dim
    if f.field != a.field:
        raise FieldMismatchError(f"map over {f.field}, algebra over {a.field}")
    if (f.rows, f.cols) != (n, n):
        raise UsageError(f"expected a {n}x{n} map, got {f.rows}x{f.cols}")
    red = a.field.reduce
    c = a.dense()
    # nonzero entries of f(e_i)
    cols = [[(m, x) for m, x in enumerate(f.column(i)) if x] for i in range(n)]
    rng = range(n)
    for i, j, k in product(rng, repeat=3):
        acc = [0] * n
        v = c[i][j][k]
        if v is not None:
            for m, t in enumerate(v):
                if t:
                    for r, x in cols[m]:
                        acc[r] += t * x
        for m, x in cols[i]:
            w = c[m][j][k]
            if w is not None:
                for r in rng:
                    acc[r] -= x * w[r]
        for m, x in cols[j]:
            w = c[i][m][k]
            if w is not None:
                for r in rng:
                    acc[r] -= x * w[r]
        for m, x in cols[k]:
            w = c[i][j][m]
            if w is not None:
                for r in rng:
                    acc[r] -= x * w[r]
        if any(red(t) for t in acc):
            return False
    return True


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            t = p[i]
            p[i], p[t] = p[t], p[i]
            sign = -sign
    return sign


_PERMS = [(perm, _perm_sign(perm)) for perm in permutations(range(3))]


def is_lie3(a: Algebra3) -> bool:
    """Lie 3-algebra test: valid, with a totally antisymmetric bracket.

    Requires characteristic different from 2, where antisymmetry and
    vanishing on repeated arguments are equivalent.
    """
    if a.field.char == 2:
        raise UnsupportedFieldError("Lie 3-algebras are only defined in characteristic != 2")
    red = a.field.reduce
    for key, v in a._brackets.items():
        if len(set(key)) < 3:
            return False
        for perm, sign in _PERMS:
            other = a.constant(*(key[t] for t in perm))
            if any(red(o - sign * x) for o, x in zip(other, v)):
                return False
    return is_valid(a)


# -- file form ---------------------------------------------------------------

def algebra_to_json(a: Algebra3) -> str:
    """Canonical text: triples in lexicographic order, one bracket per line."""
    fmt = a.field.format
    head = f'{{\n  "field": {json.dumps(field_to_json(a.field))},\n  "dim": {a.dim},\n  "brackets": ['
    lines = []
    for (i, j, k), v in a._brackets.items():
        vals = ", ".join(json.dumps(fmt(x)) for x in v)
        lines.append(f'    {{"i": {i}, "j": {j}, "k": {k}, "value": [{vals}]}}')
    if not lines:
        return head + "]\n}\n"
    return head + "\n" + ",\n".join(lines) + "\n  ]\n}\n"


def algebra_from_json(obj) -> Algebra3:
    if not isinstance(obj, dict):
        raise FormatError("algebra: expected a JSON object")
    for key in ("field", "dim", "brackets"):
        if key not in obj:
            raise FormatError(f"{key}: missing")
    field = field_from_json(obj["field"])
    n = obj["dim"]
    if type(n) is not int or n < 0:
        raise FormatError(f"dim: expected a non-negative integer, got {n!r}")
    if not isinstance(obj["brackets"], list):
        raise FormatError("brackets: expected a list")
    table = {}
    for idx, entry in enumerate(obj["brackets"]):
        where = f"brackets[{idx}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        key = []
        for name in "ijk":
            t = entry.get(name)
            if type(t) is not int or not 0 <= t < n:
                raise FormatError(f"{where}.{name}: expected an index in [0, {n}), got {t!r}")
            key.append(t)
        key = tuple(key)
        if key in table:
            raise FormatError(f"{where}: duplicate triple {key}")
        value = entry.get("value")
        if not isinstance(value, list) or len(value) != n:
            raise FormatError(f"{where}.value: expected {n} scalar strings")
        table[key] = [_scalar_from_json(field, x, f"{where}.value[{m}]") for m, x in enumerate(value)]
    return Algebra3(field, n, table)


def loads_algebra(text: str) -> Algebra3:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return algebra_from_json(obj)


def read_algebra(path) -> Algebra3:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return loads_algebra(text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_algebra(a: Algebra3, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(algebra_to_json(a))


def format_vector(field: FieldSpec, v: Sequence) -> str:
    """Render as a combination of 0-based basis vectors, e.g. ``2*e0 - e1``."""
    terms = []
    for m, x in enumerate(v):
        if not x:
            continue
        if field.kind == "Q":
            neg = x < 0
            mag = -x if neg else x
        else:
            neg, mag = False, x
        coef = "" if mag == 1 else f"{mag}*"
        terms.append(("-" if neg else "+", f"{coef}e{m}"))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
