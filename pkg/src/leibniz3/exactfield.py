"""Exact scalar fields: the rationals and prime fields F_p with p < 2**16.

Scalars are plain Python values.  Over Q they are ``fractions.Fraction``
(always in lowest terms with a positive denominator); over F_p they are
``int`` residues in ``[0, p)``.  A :class:`FieldSpec` carries the arithmetic,
so hot loops may compute with ``+``/``*`` directly and call
:meth:`FieldSpec.reduce` once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import FieldMismatchError, FormatError, UsageError

RATIONALS = "Q"
PRIME_FIELD = "Fp"

MAX_PRIME = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for f in range(3, math.isqrt(p) + 1, 2):
        if p % f == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise UsageError("the rational field takes no modulus")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not 2 <= self.p < MAX_PRIME:
                raise UsageError(f"prime modulus must satisfy 2 <= p < {MAX_PRIME}, got {self.p!r}")
            if not is_prime(self.p):
                raise UsageError(f"{self.p} is not prime")
        else:
            raise UsageError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def char(self) -> int:
        return 0 if self.kind == RATIONALS else self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def __str__(self):
        return "Q" if self.kind == RATIONALS else f"Fp:{self.p}"

    # -- element handling -------------------------------------------------

    def __call__(self, x):
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            raise FieldMismatchError(f"cannot coerce bool {x!r} into {self}")
        if self.kind == RATIONALS:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise FieldMismatchError(f"cannot coerce {type(x).__name__} into Q")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        raise FieldMismatchError(f"cannot coerce {type(x).__name__} into {self}")

    def check(self, x):
        """Return ``x`` unchanged if it is a canonical element of this field."""
        if self.kind == RATIONALS:
            if type(x) is Fraction:
                return x
        elif type(x) is int and 0 <= x < self.p:
            return x
        raise FieldMismatchError(f"{x!r} is not an element of {self}")

    def reduce(self, x):
        """Canonicalize the result of raw ``+``/``-``/``*`` on elements."""
        if self.kind == RATIONALS:
            return x
        return x % self.p

    def add(self, a, b):
        return self.reduce(self.check(a) + self.check(b))

    def sub(self, a, b):
        return self.reduce(self.check(a) - self.check(b))

    def mul(self, a, b):
        return self.reduce(self.check(a) * self.check(b))

    def neg(self, a):
        return self.reduce(-self.check(a))

    def inv(self, a):
        self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.kind == RATIONALS:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- text form --------------------------------------------------------

    def parse(self, text: str):
        s = text.strip()
        try:
            if self.kind == RATIONALS:
                if "/" in s:
                    num, den = s.split("/")
                    return Fraction(int(num), int(den))
                return Fraction(int(s))
            return int(s) % self.p
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad scalar {text!r} for field {self}") from None

    def format(self, x) -> str:
        return str(x)


QQ = FieldSpec(RATIONALS)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, p)


def char_of(field: FieldSpec) -> int:
    return field.char


def parse_field(text: str) -> FieldSpec:
    """Parse the ``Q`` / ``Fp:<p>`` grammar used on the command line."""
    s = text.strip()
    if s == "Q":
        return QQ
    if s.startswith("Fp:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise FormatError(f"bad field {text!r}: expected Q or Fp:<p>") from None
        try:
            return GF(p)
        except UsageError as exc:
            raise FormatError(f"bad field {text!r}: {exc}") from None
    raise FormatError(f"bad field {text!r}: expected Q or Fp:<p>")


def field_to_json(field: FieldSpec):
    return "Q" if field.kind == RATIONALS else {"Fp": field.p}


def field_from_json(obj) -> FieldSpec:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"} and type(obj["Fp"]) is int:
        try:
            return GF(obj["Fp"])
        except UsageError as exc:
            raise FormatError(f"field: {exc}") from None
    raise FormatError(f"field: expected \"Q\" or {{\"Fp\": p}}, got {obj!r}")
