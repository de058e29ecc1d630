"""Schur-type bounds on dim [L, L, L] from codimensions of centers.

With ``d = codim lm-center`` and ``r = codim right center`` the derived
ideal has dimension at most ``d**2 * (d + r)``; with ``d0 = codim center``
it is at most ``d0**3``, and at most ``C(d0, 3)`` for Lie 3-algebras.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .algebra3 import Algebra3, is_lie3, is_valid
from .errors import InvalidAlgebraError
from .structure import CenterKind, centers, derived_ideal


@dataclass(frozen=True)
class BoundReport:
    d: int
    r: int
    d0: int
    dim_derived: int
    bound_thm: int
    bound_cor1: int
    lie3: bool
    bound_cor2: int | None
    holds_thm: bool
    holds_cor1: bool
    holds_cor2: bool | None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def all_hold(self) -> bool:
        return self.holds_thm and self.holds_cor1 and self.holds_cor2 is not False


def lie_bound(d0: int) -> int:
    return d0 * (d0 - 1) * (d0 - 2) // 6


def schur_report(a: Algebra3) -> BoundReport:
    if not is_valid(a):
        raise InvalidAlgebraError("bounds require an algebra satisfying the left Leibniz 3-identity")
    cs = centers(a)
    d = cs[CenterKind.LM].codim
    r = cs[CenterKind.RIGHT].codim
    d0 = cs[CenterKind.FULL].codim
    dim_derived = derived_ideal(a).dim
    bound_thm = d * d * (d + r)
    bound_cor1 = d0 ** 3
    lie3 = a.field.char != 2 and is_lie3(a)
    bound_cor2 = lie_bound(d0) if lie3 else None
    return BoundReport(
        d=d, r=r, d0=d0, dim_derived=dim_derived,
        bound_thm=bound_thm, bound_cor1=bound_cor1,
        lie3=lie3, bound_cor2=bound_cor2,
        holds_thm=dim_derived <= bound_thm,
        holds_cor1=dim_derived <= bound_cor1,
        holds_cor2=None if bound_cor2 is None else dim_derived <= bound_cor2,
    )


def tightness_gap(rep: BoundReport) -> tuple[int, int, int | None]:
    gap2 = None if rep.bound_cor2 is None else rep.bound_cor2 - rep.dim_derived
    return rep.bound_thm - rep.dim_derived, rep.bound_cor1 - rep.dim_derived, gap2
