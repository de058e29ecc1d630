"""Centers, annihilators, ideals, the derived ideal and quotient algebras."""

from __future__ import annotations

from enum import Enum
from itertools import product

from .algebra3 import Algebra3, _bracket, _unit, format_vector, validate
from .errors import FieldMismatchError, InvalidAlgebraError, NotAnIdealError, UsageError
from .linalg import (Matrix, Subspace, complement_coords, contains, full_space, kernel,
                     reduce_mod, span, subspace_intersect)


class CenterKind(str, Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"
    LM = "lm"
    FULL = "full"


class Side(str, Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"
    ALL = "all"


# slot holding the annihilated element: Ann^l(M) = {a : [a, M, M] = 0}
_SLOTS = {Side.LEFT: 0, Side.MIDDLE: 1, Side.RIGHT: 2}
# slot holding the absorbed element: a left ideal A has [L, L, A] <= A
_IDEAL_SLOTS = {Side.LEFT: 2, Side.MIDDLE: 1, Side.RIGHT: 0}


def _check_subspace(a: Algebra3, s: Subspace, name="subspace"):
    if s.field != a.field:
        raise FieldMismatchError(f"{name} over {s.field}, algebra over {a.field}")
    if s.ambient_dim != a.dim:
        raise UsageError(f"{name} has ambient dimension {s.ambient_dim}, algebra has {a.dim}")


def _slot_center(a: Algebra3, slot: int) -> Subspace:
    # kernel of M[(u, v, m), t] = coefficient m of the bracket with e_t in `slot`
    n = a.dim
    c = a.dense()
    z = a.field.zero
    rows = []
    for u, v in product(range(n), repeat=2):
        cols = []
        for t in range(n):
            idx = [u, v]
            idx.insert(slot, t)
            cols.append(c[idx[0]][idx[1]][idx[2]])
        if all(col is None for col in cols):
            continue
        for m in range(n):
            rows.append(tuple(z if col is None else col[m] for col in cols))
    return kernel(Matrix(a.field, len(rows), n, tuple(rows)))


def center(a: Algebra3, kind: CenterKind | str) -> Subspace:
    kind = CenterKind(kind)
    if kind is CenterKind.LEFT:
        return _slot_center(a, 0)
    if kind is CenterKind.MIDDLE:
        return _slot_center(a, 1)
    if kind is CenterKind.RIGHT:
        return _slot_center(a, 2)
    lm = subspace_intersect(_slot_center(a, 0), _slot_center(a, 1))
    if kind is CenterKind.LM:
        return lm
    return subspace_intersect(lm, _slot_center(a, 2))


def centers(a: Algebra3) -> dict:
    left, middle, right = (_slot_center(a, s) for s in range(3))
    lm = subspace_intersect(left, middle)
    return {CenterKind.LEFT: left, CenterKind.MIDDLE: middle, CenterKind.RIGHT: right,
            CenterKind.LM: lm, CenterKind.FULL: subspace_intersect(lm, right)}


def _slot_bracket(a, slot, x, u, v):
    args = [u, v]
    args.insert(slot, x)
    return _bracket(a, *args)


def annihilator(a: Algebra3, h: Subspace, m: Subspace, side: Side | str) -> Subspace:
    """Elements of ``h`` whose brackets vanish against every pair from ``m``.

    ``side`` picks the slot the element occupies; ``all`` intersects the three.
    """
    _check_subspace(a, h, "h")
    _check_subspace(a, m, "m")
    side = Side(side)
    if side is Side.ALL:
        out = h
        for s in (Side.LEFT, Side.MIDDLE, Side.RIGHT):
            out = subspace_intersect(out, annihilator(a, h, m, s))
        return out
    slot = _SLOTS[side]
    n = a.dim
    f = a.field
    if not h.dim:
        return h
    # x = sum_r t_r h_r; conditions are linear in t
    images = [[_slot_bracket(a, slot, hr, u, v) for hr in h.basis]
              for u, v in product(m.basis, repeat=2)]
    rows = [tuple(img[r][coord] for r in range(h.dim))
            for img in images for coord in range(n) if any(img[r][coord] for r in range(h.dim))]
    ker = kernel(Matrix(f, len(rows), h.dim, tuple(rows)))
    red = f.reduce
    vecs = [[red(sum(t * hr[coord] for t, hr in zip(coeffs, h.basis))) for coord in range(n)]
            for coeffs in ker.basis]
    return span(vecs, f, n)


def derived_ideal(a: Algebra3) -> Subspace:
    """[L, L, L]: the span of all structure-constant vectors."""
    return span(list(a.brackets.values()), a.field, a.dim)


def _start_witness(a, s):
    """First basis triple of ``s`` whose bracket leaves ``s``, or ``None``."""
    if s.codim == 0:
        return None
    for u, v, w in product(s.basis, repeat=3):
        val = _bracket(a, u, v, w)
        if not contains(s, val):
            return (u, v, w), val
    return None


def _absorb_witness(a, s, slot):
    if s.codim == 0 or s.dim == 0:
        return None
    units = [_unit(a.field, a.dim, i) for i in range(a.dim)]
    for x, y in product(units, repeat=2):
        for u in s.basis:
            val = _slot_bracket(a, slot, u, x, y)
            if not contains(s, val):
                args = [x, y]
                args.insert(slot, u)
                return tuple(args), val
    return None


def ideal_witness(a: Algebra3, s: Subspace, side: Side | str = Side.ALL):
    """A bracket ``((x, y, z), value)`` showing ``s`` fails to be an ideal, or ``None``."""
    _check_subspace(a, s)
    side = Side(side)
    w = _start_witness(a, s)
    if w is not None:
        return w
    slots = range(3) if side is Side.ALL else [_IDEAL_SLOTS[side]]
    for slot in slots:
        w = _absorb_witness(a, s, slot)
        if w is not None:
            return w
    return None


def is_subalgebra(a: Algebra3, s: Subspace) -> bool:
    _check_subspace(a, s)
    return _start_witness(a, s) is None


def is_ideal(a: Algebra3, s: Subspace, side: Side | str = Side.ALL) -> bool:
    return ideal_witness(a, s, side) is None


def describe_bracket(a: Algebra3, witness) -> str:
    (x, y, z), val = witness
    f = a.field
    return (f"[{format_vector(f, x)}, {format_vector(f, y)}, {format_vector(f, z)}]"
            f" = {format_vector(f, val)}")


def quotient(a: Algebra3, ideal: Subspace) -> tuple[Algebra3, Matrix]:
    """Factor algebra ``a / ideal`` on the standard complement coordinates.

    Returns the quotient and the projection matrix sending ambient
    coordinates to quotient coordinates.
    """
    w = ideal_witness(a, ideal, Side.ALL)
    if w is not None:
        raise NotAnIdealError(f"not an ideal: {describe_bracket(a, w)} lies outside it", witness=w)
    comp = complement_coords(ideal)
    n = a.dim
    f = a.field

    def project(v):
        r = reduce_mod(ideal, v)
        return tuple(r[t] for t in comp)

    proj_cols = [project(_unit(f, n, k)) for k in range(n)]
    projection = Matrix(f, len(comp), n, tuple(tuple(col[r] for col in proj_cols)
                                               for r in range(len(comp))))
    table = {}
    for qi, qj, qk in product(range(len(comp)), repeat=3):
        v = a.constant(comp[qi], comp[qj], comp[qk])
        if any(v):
            table[(qi, qj, qk)] = project(v)
    q = Algebra3(f, len(comp), table)
    bad = validate(q, max_reports=1)
    if bad:
        raise InvalidAlgebraError(f"quotient violates the Leibniz 3-identity at {bad[0].quintuple}")
    return q, projection


def space(a: Algebra3) -> Subspace:
    return full_space(a.field, a.dim)
