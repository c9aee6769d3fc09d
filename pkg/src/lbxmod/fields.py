"""Exact scalar fields: the rationals and small prime fields.

Every linear-algebra and algebra routine in this package is generic over a
*field object* that knows how to build, combine and serialize its scalars.
Rationals are plain ``fractions.Fraction`` values; prime-field scalars are
``FpElement`` instances that refuse to mix with anything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union


class InputDataError(ValueError):
    """Malformed external data (bad JSON shapes, unknown tags, bad scalars)."""


@dataclass(frozen=True)
class FpElement:
    """A residue in Z/p for a prime p."""

    value: int
    p: int

    def _check(self, other: "FpElement") -> None:
        if not isinstance(other, FpElement) or other.p != self.p:
            raise TypeError(f"cannot mix F{self.p} scalars with {other!r}")

    def __add__(self, other: Any) -> "FpElement":
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        return FpElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: Any) -> "FpElement":
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        return FpElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: Any) -> "FpElement":
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        return FpElement((self.value * other.value) % self.p, self.p)

    def __truediv__(self, other: Any) -> "FpElement":
        if not isinstance(other, FpElement):
            return NotImplemented
        self._check(other)
        if other.value % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        inv = pow(other.value, -1, self.p)
        return FpElement((self.value * inv) % self.p, self.p)

    def __neg__(self) -> "FpElement":
        return FpElement((-self.value) % self.p, self.p)

    def __bool__(self) -> bool:
        return self.value % self.p != 0

    def __repr__(self) -> str:
        return f"{self.value}:F{self.p}"


Scalar = Union[Fraction, FpElement]


class Rationals:
    """The field Q.  Scalars are ``fractions.Fraction``."""

    tag = "q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, v: Any) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise TypeError(f"cannot coerce {v!r} into Q")

    def parse_scalar(self, v: Any) -> Fraction:
        # accept "a/b" / "a" strings and plain JSON ints
        if isinstance(v, bool):
            raise InputDataError(f"bad rational scalar {v!r}")
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            try:
                return Fraction(v)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputDataError(f"bad rational scalar {v!r}") from exc
        raise InputDataError(f"bad rational scalar {v!r}")

    def scalar_to_json(self, x: Fraction) -> str:
        return str(x)

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("rationals")


@dataclass(frozen=True)
class PrimeField:
    """The field Z/p for a small prime p.  Scalars are ``FpElement``."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise InputDataError(f"{self.p} is not prime")

    @property
    def tag(self) -> str:
        return f"f{self.p}"

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def coerce(self, v: Any) -> FpElement:
        if isinstance(v, FpElement):
            if v.p != self.p:
                raise TypeError(f"cannot coerce {v!r} into F{self.p}")
            return v
        if isinstance(v, int):
            return FpElement(v % self.p, self.p)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise InputDataError(f"{v} has no image in F{self.p}")
            num = FpElement(v.numerator % self.p, self.p)
            den = FpElement(v.denominator % self.p, self.p)
            return num / den
        raise TypeError(f"cannot coerce {v!r} into F{self.p}")

    def parse_scalar(self, v: Any) -> FpElement:
        if isinstance(v, bool):
            raise InputDataError(f"bad F{self.p} scalar {v!r}")
        if isinstance(v, int):
            return FpElement(v % self.p, self.p)
        if isinstance(v, str):
            try:
                return FpElement(int(v, 10) % self.p, self.p)
            except ValueError as exc:
                raise InputDataError(f"bad F{self.p} scalar {v!r}") from exc
        raise InputDataError(f"bad F{self.p} scalar {v!r}")

    def scalar_to_json(self, x: FpElement) -> int:
        return x.value % self.p

    def __repr__(self) -> str:
        return f"F{self.p}"


QQ = Rationals()
GF2 = PrimeField(2)
GF3 = PrimeField(3)

Field = Union[Rationals, PrimeField]

_BUILTIN = {"q": QQ, "f2": GF2, "f3": GF3}


def get_field(tag: str) -> Field:
    """Look up a field by tag: "q" or "f<p>" for a small prime p."""
    t = tag.strip().lower()
    if t in _BUILTIN:
        return _BUILTIN[t]
    if t.startswith("f") and t[1:].isdigit():
        return PrimeField(int(t[1:]))
    raise InputDataError(f"unknown field tag {tag!r}")
