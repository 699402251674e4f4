"""Exact arithmetic for formal characters of F^x, F a p-adic field.

A formal character is a product  u * |.|^s  where the unitary part u lives in
a finitely presented abelian group on declared symbols (each symbol optionally
of finite order) and the norm exponent s is an exact rational.  Canonical
form: symbol exponents are reduced modulo declared orders (0 <= e < order for
finite order), zero factors are dropped, and factors are sorted by symbol
name.  Two characters are equal iff their canonical forms coincide, so every
condition of the shape "chi is quadratic", "chi = |-|^(+-1)" is decidable.

Relations between distinct symbols are assumed absent (free product modulo the
declared orders); coincidences must be declared by the user as a single
symbol.  |chi| = |-|^s depends only on the norm exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ContextError(ValueError):
    """Values from different symbol contexts were mixed."""


class DeclarationError(ValueError):
    """Invalid or duplicate symbol declaration."""


@dataclass(frozen=True)
class CharacterSymbol:
    """A named generator of the unitary character group.

    order: declared order (None = infinite).  order = 1 is allowed only as an
    explicit alias of the trivial character.  unramified marks symbols usable
    in Satake data.
    """

    name: str
    order: int | None = None
    unramified: bool = False

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise DeclarationError(f"order of {self.name!r} must be >= 1")


class SymbolContext:
    """Declaration context holding the named unitary character symbols."""

    def __init__(self):
        self._symbols: dict[str, CharacterSymbol] = {}

    def declare(self, name: str, order: int | None = None,
                unramified: bool = False) -> CharacterSymbol:
        if not name or not (name[0].isalpha() or name[0] == "_"):
            raise DeclarationError(f"bad symbol name {name!r}")
        if name == "nu":
            raise DeclarationError("'nu' is reserved for the norm character |-|")
        if name in self._symbols:
            raise DeclarationError(f"symbol {name!r} already declared")
        sym = CharacterSymbol(name, order, unramified)
        self._symbols[name] = sym
        return sym

    def symbol(self, name: str) -> CharacterSymbol:
        try:
            return self._symbols[name]
        except KeyError:
            raise DeclarationError(f"unknown symbol {name!r}") from None

    def symbols(self) -> list[CharacterSymbol]:
        return list(self._symbols.values())

    def __contains__(self, name: str) -> bool:
        return name in self._symbols

    # character builders

    def trivial(self) -> Character:
        return Character(self, (), Fraction(0))

    def char(self, name: str) -> Character:
        return _make(self, {self.symbol(name): 1}, Fraction(0))

    def norm(self, exponent) -> Character:
        """|-|^exponent for an exact rational exponent."""
        return Character(self, (), Fraction(exponent))


def _make(context: SymbolContext, raw: dict[CharacterSymbol, int],
          norm_exponent: Fraction) -> Character:
    factors = []
    for sym, e in raw.items():
        if sym.order is not None:
            e %= sym.order
        if e != 0:
            factors.append((sym, e))
    factors.sort(key=lambda se: se[0].name)
    return Character(context, tuple(factors), Fraction(norm_exponent))


@dataclass(frozen=True)
class Character:
    """A formal character of F^x in canonical form.

    Immutable; arithmetic returns new values.  Do not build directly: use the
    SymbolContext builders and the group operations below.
    """

    context: SymbolContext
    factors: tuple[tuple[CharacterSymbol, int], ...]
    norm_exponent: Fraction

    def _check(self, other: Character):
        if not isinstance(other, Character):
            raise TypeError(f"expected Character, got {type(other).__name__}")
        if self.context is not other.context:
            raise ContextError("characters belong to different symbol contexts")

    def __mul__(self, other: Character) -> Character:
        self._check(other)
        raw = dict(self.factors)
        for sym, e in other.factors:
            raw[sym] = raw.get(sym, 0) + e
        return _make(self.context, raw, self.norm_exponent + other.norm_exponent)

    def __truediv__(self, other: Character) -> Character:
        return self * other.inv()

    def inv(self) -> Character:
        return _make(self.context, {s: -e for s, e in self.factors},
                     -self.norm_exponent)

    def __pow__(self, n: int) -> Character:
        if not isinstance(n, int):
            raise TypeError("character powers must be integers")
        return _make(self.context, {s: n * e for s, e in self.factors},
                     n * self.norm_exponent)

    def is_trivial(self) -> bool:
        return not self.factors and self.norm_exponent == 0

    def is_quadratic(self) -> bool:
        """True iff chi*chi is trivial (the trivial character counts)."""
        if self.norm_exponent != 0:
            return False
        for sym, e in self.factors:
            if sym.order is None or (2 * e) % sym.order != 0:
                return False
        return True

    def abs_exponent(self) -> Fraction:
        """The exact s with |chi| = |-|^s."""
        return self.norm_exponent

    def unitary_part(self) -> Character:
        return Character(self.context, self.factors, Fraction(0))

    def norm_part(self) -> Character:
        return Character(self.context, (), self.norm_exponent)

    def is_unramified(self) -> bool:
        return all(sym.unramified for sym, _ in self.factors)

    def sort_key(self):
        """The fixed total order used for all normalization tie-breaks."""
        return (tuple((s.name, e) for s, e in self.factors), self.norm_exponent)

    def render(self) -> str:
        parts = [f"{s.name}^{e}" if e != 1 else s.name for s, e in self.factors]
        s = self.norm_exponent
        if s != 0:
            if s.denominator == 1 and s > 0:
                parts.append("nu" if s == 1 else f"nu^{s}")
            else:
                parts.append(f"nu^({s})")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Character({self.render()})"


# thin functional aliases matching the operation names used in the docs

def mul(a: Character, b: Character) -> Character:
    return a * b


def inv(a: Character) -> Character:
    return a.inv()


def power(a: Character, n: int) -> Character:
    return a ** n


def is_trivial(a: Character) -> bool:
    return a.is_trivial()


def is_quadratic(a: Character) -> bool:
    return a.is_quadratic()


def abs_exponent(a: Character) -> Fraction:
    return a.abs_exponent()


def unitary_part(a: Character) -> Character:
    return a.unitary_part()
