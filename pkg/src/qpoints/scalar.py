"""Exact arithmetic in a multiplicative subgroup of the nonzero complex numbers.

A :class:`UnitMonomial` is a product

    e^(2 pi i * phase) * prod(g ** e_g)

where ``phase`` lies in [0, 1) and each generator ``g`` is either a named
formal parameter (:class:`Symbol`) or a rational prime (:class:`Prime`).
Symbols are treated as algebraically independent, so two values are equal
as complex numbers exactly when their canonical forms coincide.  Only
products, inverses and integer powers are supported; there is no addition.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from sympy import factorint, isprime

from .errors import ZeroScalar

RESERVED_NAMES = frozenset({"i", "zeta"})
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class Symbol:
    name: str

    def __post_init__(self):
        if not _IDENT.match(self.name) or self.name in RESERVED_NAMES:
            raise ValueError(f"invalid symbol name {self.name!r}")

    def sort_key(self) -> tuple:
        return (0, self.name, 0)


@dataclass(frozen=True, order=True)
class Prime:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")

    def sort_key(self) -> tuple:
        return (1, "", self.p)


Generator = Union[Symbol, Prime]


@dataclass(frozen=True)
class UnitMonomial:
    """Canonical element of the group; build through :meth:`make` or the helpers below."""

    phase: Fraction = Fraction(0)
    # sorted by generator (symbols by name, then primes ascending); no zero exponents
    exponents: tuple[tuple[Generator, Fraction], ...] = field(default=())

    @classmethod
    def make(
        cls,
        phase: Fraction | int = 0,
        exponents: Mapping[Generator, Fraction | int] | Iterable[tuple[Generator, Fraction | int]] = (),
    ) -> UnitMonomial:
        """Canonicalize: reduce the phase mod 1, merge repeated generators, drop zeros."""
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[Generator, Fraction] = {}
        for gen, e in items:
            if not isinstance(gen, (Symbol, Prime)):
                raise TypeError(f"not a generator: {gen!r}")
            acc[gen] = acc.get(gen, Fraction(0)) + Fraction(e)
        exps = tuple(sorted(((g, e) for g, e in acc.items() if e != 0), key=lambda ge: ge[0].sort_key()))
        return cls(Fraction(phase) % 1, exps)

    @property
    def exponent_map(self) -> dict[Generator, Fraction]:
        return dict(self.exponents)

    def is_one(self) -> bool:
        return self.phase == 0 and not self.exponents

    def __mul__(self, other: UnitMonomial) -> UnitMonomial:
        if not isinstance(other, UnitMonomial):
            return NotImplemented
        return UnitMonomial.make(self.phase + other.phase, self.exponents + other.exponents)

    def inv(self) -> UnitMonomial:
        return UnitMonomial((-self.phase) % 1, tuple((g, -e) for g, e in self.exponents))

    def __truediv__(self, other: UnitMonomial) -> UnitMonomial:
        if not isinstance(other, UnitMonomial):
            return NotImplemented
        return self * other.inv()

    def __pow__(self, k: int) -> UnitMonomial:
        if not isinstance(k, int):
            return NotImplemented
        return UnitMonomial.make(self.phase * k, tuple((g, e * k) for g, e in self.exponents))

    def real_power(self, e: Fraction) -> UnitMonomial:
        """Raise to a rational power, taking positive real roots of the generator part.

        Only defined for phase-free values; a root of a nontrivial root of unity
        has no canonical choice.
        """
        e = Fraction(e)
        if e.denominator == 1:
            return self ** int(e)
        if self.phase != 0:
            raise ValueError("fractional power of a value with nonzero phase is ambiguous")
        return UnitMonomial.make(0, tuple((g, x * e) for g, x in self.exponents))

    def __repr__(self) -> str:
        from .parser import format_scalar

        return f"UnitMonomial({format_scalar(self)!r})"


ONE = UnitMonomial()
MINUS_ONE = UnitMonomial(Fraction(1, 2))


def mul(x: UnitMonomial, y: UnitMonomial) -> UnitMonomial:
    return x * y


def inv(x: UnitMonomial) -> UnitMonomial:
    return x.inv()


def power(x: UnitMonomial, k: int) -> UnitMonomial:
    return x ** k


def is_one(x: UnitMonomial) -> bool:
    return x.is_one()


def symbol(name: str, exponent: Fraction | int = 1) -> UnitMonomial:
    return UnitMonomial.make(0, {Symbol(name): exponent})


def root_of_unity(d: int, k: int = 1) -> UnitMonomial:
    """``e^(2 pi i k / d)``."""
    if d <= 0:
        raise ValueError("root of unity order must be positive")
    return UnitMonomial.make(Fraction(k, d))


def from_rational(p: int, q: int = 1) -> UnitMonomial:
    if p == 0:
        raise ZeroScalar("zero is not a unit")
    if q == 0:
        raise ZeroScalar("zero denominator")
    value = Fraction(p, q)
    exps: dict[Generator, int] = {}
    for prime, e in factorint(abs(value.numerator)).items():
        exps[Prime(int(prime))] = e
    for prime, e in factorint(value.denominator).items():
        exps[Prime(int(prime))] = -e
    return UnitMonomial.make(Fraction(1, 2) if value < 0 else 0, exps)


def product(values: Iterable[UnitMonomial]) -> UnitMonomial:
    out = ONE
    for v in values:
        out = out * v
    return out
