"""Small exact coefficient fields.

Two families are provided:

* `SqrtTower` -- Q with up to two square roots adjoined, Q(sqrt(r1), sqrt(r2)).
  Elements are vectors over the monomial basis indexed by subsets of the
  radicand list.  This is where Clifford-group lifts live once spinor norms
  are normalized away.

* `CyclotomicField` -- Q[x]/(Phi_e), used for character-component rank
  computations and root-of-unity identities.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .arith import squarefree_part


class SqrtTower:
    """Q(sqrt(r1), ..., sqrt(rm)) for m <= 2 squarefree radicands.

    Radicands must generate a subgroup of Q*/Q*^2 of order 2^m, so the
    tower really is a field of degree 2^m.
    """

    def __init__(self, radicands=()):
        radicands = tuple(int(r) for r in radicands)
        if len(radicands) > 2:
            raise ValueError("at most two square roots are supported")
        for r in radicands:
            if r in (0, 1) or squarefree_part(r) != r:
                raise ValueError(f"radicand {r} must be squarefree and != 0, 1")
        if len(radicands) == 2:
            prod_sf = squarefree_part(radicands[0] * radicands[1])
            if radicands[0] == radicands[1] or prod_sf == 1:
                raise ValueError("radicands must be independent square classes")
        self.radicands = radicands
        self.dim = 1 << len(radicands)

    # -- element constructors -------------------------------------------

    def element(self, coeffs) -> "TowerElem":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise ValueError("wrong coefficient length")
        return TowerElem(self, coeffs)

    def scalar(self, c) -> "TowerElem":
        coeffs = [Fraction(0)] * self.dim
        coeffs[0] = Fraction(c)
        return TowerElem(self, tuple(coeffs))

    @property
    def zero(self) -> "TowerElem":
        return self.scalar(0)

    @property
    def one(self) -> "TowerElem":
        return self.scalar(1)

    def sqrt_monomial(self, mask: int) -> "TowerElem":
        """The basis monomial prod_{i in mask} sqrt(r_i)."""
        coeffs = [Fraction(0)] * self.dim
        coeffs[mask] = Fraction(1)
        return TowerElem(self, tuple(coeffs))

    def monomial_square(self, mask: int) -> int:
        """The rational square of a basis monomial."""
        v = 1
        for i, r in enumerate(self.radicands):
            if mask >> i & 1:
                v *= r
        return v

    def __eq__(self, other):
        return isinstance(other, SqrtTower) and self.radicands == other.radicands

    def __hash__(self):
        return hash(self.radicands)

    def __repr__(self):
        if not self.radicands:
            return "Q"
        return "Q(" + ", ".join(f"sqrt({r})" for r in self.radicands) + ")"


class TowerElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: SqrtTower, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("mixed coefficient fields")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        self._check(other)
        return TowerElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.field.scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerElem(self.field, tuple(a * other for a in self.coeffs))
        self._check(other)
        dim = self.field.dim
        out = [Fraction(0)] * dim
        for s, a in enumerate(self.coeffs):
            if not a:
                continue
            for t, b in enumerate(other.coeffs):
                if not b:
                    continue
                # m_S m_T = (prod of r_i over S & T) m_{S ^ T}
                out[s ^ t] += a * b * self.field.monomial_square(s & t)
        return TowerElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "TowerElem":
        if not self:
            raise ZeroDivisionError("tower element is zero")
        dim = self.field.dim
        # multiplication matrix of self over the monomial basis
        cols = []
        for t in range(dim):
            cols.append((self * self.field.sqrt_monomial(t)).coeffs)
        M = [[cols[t][s] for t in range(dim)] for s in range(dim)]
        e0 = [Fraction(1)] + [Fraction(0)] * (dim - 1)
        sol = linalg.solve(M, e0)
        if sol is None:
            raise ZeroDivisionError("tower element is a zero divisor")
        return TowerElem(self.field, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) / self.field.scalar(other)
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.scalar(other) / self

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        return isinstance(other, TowerElem) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def galois(self, flips: int) -> "TowerElem":
        """Apply the automorphism sending sqrt(r_i) to -sqrt(r_i) for i in flips."""
        out = []
        for s, a in enumerate(self.coeffs):
            sign = -1 if bin(s & flips).count("1") % 2 else 1
            out.append(a * sign)
        return TowerElem(self.field, tuple(out))

    @property
    def rational_part(self) -> Fraction:
        return self.coeffs[0]

    def as_rational(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        if not self:
            return "0"
        names = [""]
        for i, r in enumerate(self.field.radicands):
            names = names + [n + f"*sqrt({r})" if n else f"sqrt({r})" for n in names[: 1 << i]]
        terms = []
        for s, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}{('*' + names[s].lstrip('*')) if names[s] else ''}")
        return " + ".join(terms)


# ---------------------------------------------------------------------------


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lb
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _trim(p):
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


_CYCLO_CACHE: dict[int, list[Fraction]] = {}


def cyclotomic_poly(e: int) -> list[Fraction]:
    """Coefficients (low to high) of the e-th cyclotomic polynomial."""
    if e in _CYCLO_CACHE:
        return list(_CYCLO_CACHE[e])
    # Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
    num = [Fraction(-1)] + [Fraction(0)] * (e - 1) + [Fraction(1)]
    for d in range(1, e):
        if e % d == 0:
            q, r = _poly_divmod(num, cyclotomic_poly(d))
            assert _trim(r) == [Fraction(0)]
            num = q
    out = _trim(num)
    _CYCLO_CACHE[e] = out
    return list(out)


class CyclotomicField:
    """Q(zeta_e) as Q[x]/(Phi_e), with exact arithmetic."""

    def __init__(self, e: int):
        if e < 1:
            raise ValueError("order must be positive")
        self.e = e
        self.phi = cyclotomic_poly(e)
        self.degree = len(self.phi) - 1
        # reduction table for x^k, k < 2*degree - 1
        self._pow = []
        cur = [Fraction(1)]
        for _ in range(2 * self.degree):
            self._pow.append(self._reduce_raw(cur))
            cur = [Fraction(0)] + cur

    def _reduce_raw(self, p):
        _, r = _poly_divmod(_trim(p), self.phi)
        r = list(r) + [Fraction(0)] * (self.degree - len(r))
        return tuple(r[: self.degree])

    def element(self, coeffs) -> "CycElem":
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            coeffs = list(self._reduce_raw(coeffs))
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return CycElem(self, tuple(coeffs))

    def scalar(self, c) -> "CycElem":
        return self.element([Fraction(c)])

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def zeta(self, k: int = 1) -> "CycElem":
        """zeta_e^k as a field element."""
        k %= self.e
        cur = [Fraction(0)] * k + [Fraction(1)]
        return self.element(cur)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and self.e == other.e

    def __hash__(self):
        return hash(("cyc", self.e))

    def __repr__(self):
        return f"Q(zeta_{self.e})"


class CycElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        if self.field != other.field:
            raise ValueError("mixed cyclotomic fields")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CycElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycElem(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        deg = self.field.degree
        out = [Fraction(0)] * deg
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                c = a * b
                for k, t in enumerate(self.field._pow[i + j]):
                    if t:
                        out[k] += c * t
        return CycElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError
        # extended Euclid in Q[x] against Phi_e
        r0, r1 = list(self.field.phi), _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _trim(r1) != [Fraction(0)]:
            q, r = _poly_divmod(r0, _trim(r1))
            r0, r1 = _trim(r1), _trim(r)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = r0[-1]
        inv = [c / lead for c in s0]
        return self.field.element(inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        return isinstance(other, CycElem) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        terms = [f"{a}*z^{k}" for k, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) if terms else "0"
