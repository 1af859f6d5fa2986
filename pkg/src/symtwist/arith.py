"""Exact rational arithmetic layer: places of Q, square classes, Hilbert
symbols and 2-torsion Brauer classes.

Square classes are elements of Q*/Q*^2, kept as squarefree integer
representatives.  A 2-torsion Brauer class is stored by its ramification
set: the finite (even-cardinality) set of places where the corresponding
quaternion algebra does not split.  Addition of Brauer classes is
symmetric difference of ramification sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import sympy

Rat = Fraction

#: inputs beyond this are rejected rather than silently factored forever
MAX_FACTOR_INPUT = 2**64


class SizeError(ValueError):
    """Input too large for the desk-scale factorization bound."""


def parse_rat(s: str) -> Rat:
    """Parse "p/q" or "p" into an exact rational."""
    return Fraction(s.strip())


def rat_str(r: Rat) -> str:
    """Serialize an exact rational as "p/q" (or "p" for integers)."""
    return str(r)


def factor(n: int) -> dict[int, int]:
    """Factor a nonzero integer; returns {prime: multiplicity} of |n|."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    if n > MAX_FACTOR_INPUT:
        raise SizeError(f"|n| = {n} exceeds the factorization bound 2^64")
    return {int(p): int(e) for p, e in sympy.factorint(n).items()}


def squarefree_part(n: int) -> int:
    """Largest squarefree divisor of n, with the sign of n."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sf = -1 if n < 0 else 1
    for p, e in factor(n).items():
        if e % 2:
            sf *= p
    return sf


def sqrt_rat(r: Rat) -> Rat:
    """Exact square root of a rational that is a perfect square."""
    if r < 0:
        raise ValueError(f"{r} is not a rational square")
    pn = sympy.integer_nthroot(r.numerator, 2)
    pd = sympy.integer_nthroot(r.denominator, 2)
    if not (pn[1] and pd[1]):
        raise ValueError(f"{r} is not a rational square")
    return Fraction(int(pn[0]), int(pd[0]))


@total_ordering
@dataclass(frozen=True)
class Place:
    """A place of Q: a finite prime p, or the real place (p is None)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not sympy.isprime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)

    def __lt__(self, other: "Place") -> bool:
        # real place sorts first
        if self.p is None:
            return other.p is not None
        if other.p is None:
            return False
        return self.p < other.p

    @staticmethod
    def parse(tok) -> "Place":
        if tok in ("inf", "oo", None):
            return Place(None)
        return Place(int(tok))


REAL_PLACE = Place(None)


@dataclass(frozen=True)
class SquareClass:
    """An element of Q*/Q*^2, held as its squarefree representative."""

    rep: int

    def __post_init__(self):
        if self.rep == 0:
            raise ValueError("square class of 0 is undefined")
        if squarefree_part(self.rep) != self.rep:
            raise ValueError(f"{self.rep} is not squarefree")

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return SquareClass(squarefree_part(self.rep * other.rep))

    def inverse(self) -> "SquareClass":
        # every class is 2-torsion
        return self

    @property
    def is_trivial(self) -> bool:
        return self.rep == 1

    def __str__(self) -> str:
        return str(self.rep)


ONE_CLASS = SquareClass(1)


def square_class(r) -> SquareClass:
    """Project a nonzero rational onto Q*/Q*^2."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("square class of 0 is undefined")
    # p/q and p*q differ by the square q^2
    return SquareClass(squarefree_part(r.numerator * r.denominator))


@dataclass(frozen=True)
class BrClass:
    """A 2-torsion Brauer class of Q as its even set of ramified places."""

    ramified: frozenset[Place]

    def __post_init__(self):
        if len(self.ramified) % 2:
            raise ValueError("ramification set must have even cardinality")

    def __add__(self, other: "BrClass") -> "BrClass":
        return BrClass(self.ramified ^ other.ramified)

    @property
    def is_trivial(self) -> bool:
        return not self.ramified

    def places(self) -> list[Place]:
        return sorted(self.ramified)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.places()) + "}"


ZERO_BR = BrClass(frozenset())


def _legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p and a prime to p."""
    return int(sympy.legendre_symbol(a, p))


def _padic_split(r: Rat, p: int) -> tuple[int, Rat]:
    """Write r = p^val * u with u a p-adic unit; returns (val, u)."""
    val = 0
    n, d = r.numerator, r.denominator
    while n % p == 0:
        n //= p
        val += 1
    while d % p == 0:
        d //= p
        val -= 1
    return val, Fraction(n, d)


def _unit_mod(u: Rat, m: int) -> int:
    """Residue of a rational with numerator and denominator prime to m."""
    return u.numerator * pow(u.denominator, -1, m) % m


def hilbert(a, b, v: Place) -> int:
    """Hilbert symbol (a,b)_v in {+1,-1} for nonzero rationals a, b."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol requires nonzero arguments")
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    alpha, u = _padic_split(a, p)
    beta, w = _padic_split(b, p)
    if p != 2:
        # (a,b)_p = ((-1)^{alpha*beta} u^beta w^alpha | p)
        sym = 1
        if alpha * beta % 2:
            sym *= _legendre(-1, p)
        if beta % 2:
            sym *= _legendre(_unit_mod(u, p), p)
        if alpha % 2:
            sym *= _legendre(_unit_mod(w, p), p)
        return sym
    # p = 2: epsilon/omega formula on the odd parts mod 8
    u8 = _unit_mod(u, 8)
    w8 = _unit_mod(w, 8)
    eps_u = (u8 - 1) // 2 % 2
    eps_w = (w8 - 1) // 2 % 2
    om_u = (u8 * u8 - 1) // 8 % 2
    om_w = (w8 * w8 - 1) // 8 % 2
    exp = eps_u * eps_w + alpha * om_w + beta * om_u
    return -1 if exp % 2 else 1


def _relevant_places(a: Rat, b: Rat) -> set[Place]:
    places = {REAL_PLACE, Place(2)}
    for r in (a, b):
        for p in factor(r.numerator * r.denominator):
            places.add(Place(p))
    return places


def hilbert_ramified(a, b) -> BrClass:
    """The Brauer class of the quaternion algebra (a,b) over Q."""
    a, b = Fraction(a), Fraction(b)
    bad = frozenset(v for v in _relevant_places(a, b) if hilbert(a, b, v) == -1)
    return BrClass(bad)


def cup(x: SquareClass, y: SquareClass) -> BrClass:
    """Cup product H^1 x H^1 -> H^2 realized by the Hilbert symbol."""
    return hilbert_ramified(x.rep, y.rep)
