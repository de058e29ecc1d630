"""Families of algebras that satisfy the left Leibniz 3-identity by construction.

Pseudo-random coefficients come from SplitMix64 so that corpora are
reproducible byte for byte: the state starts at ``seed mod 2**64`` and each
draw is::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

A draw becomes a coefficient as ``z mod p`` over F_p and ``(z mod 5) - 2``
over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .algebra3 import Algebra3, _perm_sign, is_lie3, validate
from .errors import FieldMismatchError, UnsupportedFieldError
from .exactfield import QQ, FieldSpec

MASK64 = (1 << 64) - 1

# central_family(1, 1, A2_SEED, Q) has the single constant [e0, e0, e0] = e1
A2_SEED = 3


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def draw_scalar(rng: SplitMix64, field: FieldSpec):
    z = rng.next()
    if field.is_prime_field:
        return z % field.p
    return field(z % 5 - 2)


@dataclass(frozen=True)
class CentralFamilySpec:
    p: int
    q: int
    seed: int = 0
    field: FieldSpec = QQ

    @property
    def dim(self) -> int:
        return self.p + self.q


def _checked(a: Algebra3, what: str) -> Algebra3:
    bad = validate(a, max_reports=1)
    if bad:
        raise AssertionError(f"internal error: {what} violates the identity at {bad[0].quintuple}")
    return a


def abelian(n: int, field: FieldSpec = QQ) -> Algebra3:
    return _checked(Algebra3(field, n), "abelian algebra")


def central_family(spec: CentralFamilySpec) -> Algebra3:
    """Brackets of the first ``p`` basis vectors land in the last ``q``.

    Every bracket with a central argument is zero, so both sides of the
    identity vanish.  Coefficients are drawn for generator triples in
    lexicographic order, central coordinates innermost.
    """
    p, q, field = spec.p, spec.q, spec.field
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    n = p + q
    rng = SplitMix64(spec.seed)
    zero = field.zero
    table = {}
    if q:
        for key in product(range(p), repeat=3):
            table[key] = (zero,) * p + tuple(draw_scalar(rng, field) for _ in range(q))
    return _checked(Algebra3(field, n, table), f"central family {spec}")


def a2(field: FieldSpec = QQ) -> Algebra3:
    return Algebra3(field, 2, {(0, 0, 0): (field.zero, field.one)})


def levi_civita(idx) -> int:
    if len(set(idx)) < len(idx):
        return 0
    return _perm_sign(sorted(range(len(idx)), key=lambda t: idx[t]))


def filippov4(field: FieldSpec = QQ) -> Algebra3:
    """The simple 4-dimensional Lie 3-algebra ``[e_i, e_j, e_k] = eps_ijkl e_l``."""
    if field.char == 2:
        raise UnsupportedFieldError("filippov4 needs characteristic != 2")
    table = {}
    for i, j, k in permutations(range(4), 3):
        (l,) = set(range(4)) - {i, j, k}
        vec = [field.zero] * 4
        vec[l] = field(levi_civita((i, j, k, l)))
        table[(i, j, k)] = tuple(vec)
    a = _checked(Algebra3(field, 4, table), "filippov4")
    if not is_lie3(a):
        raise AssertionError("internal error: filippov4 is not antisymmetric")
    return a


def direct_sum(a: Algebra3, b: Algebra3) -> Algebra3:
    if a.field != b.field:
        raise FieldMismatchError(f"cannot sum algebras over {a.field} and {b.field}")
    n, m = a.dim, b.dim
    z = a.field.zero
    table = {key: v + (z,) * m for key, v in a.brackets.items()}
    for (i, j, k), v in b.brackets.items():
        table[(i + n, j + n, k + n)] = (z,) * n + v
    out = Algebra3(a.field, n + m, table)
    if a.validated == "valid" and b.validated == "valid":
        return _checked(out, "direct sum")
    return out
