"""Clifford algebra of a diagonalized form, the Clifford group, spinor
norm, the conjugation map into the orthogonal group, constructive
reflection factorization, and the explicit 2-cocycle computing the
boundary class of the +-1 central extension of O(q) for homomorphisms
out of quadratic and biquadratic Galois groups.

Basis elements are indexed by bitmask subsets of {1..n}; e_i^2 = a_i and
e_i e_j = -e_j e_i for i != j.  Coefficients live in a `SqrtTower`
(plain Q unless square roots were adjoined to normalize spinor norms).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .arith import (
    BrClass,
    SquareClass,
    ZERO_BR,
    cup,
    sqrt_rat,
    square_class,
)
from .fields import SqrtTower, TowerElem
from .quadform import QuadForm, diagonalize


class CliffordAlgebra:
    """C(q) for a diagonal form q = <a_1, ..., a_n>, of dimension 2^n."""

    def __init__(self, diag, field: SqrtTower | None = None):
        self.a = tuple(Fraction(x) for x in diag)
        if any(not x for x in self.a):
            raise ValueError("diagonal coefficients must be nonzero")
        self.n = len(self.a)
        self.field = field if field is not None else SqrtTower()

    def __eq__(self, other):
        return (
            isinstance(other, CliffordAlgebra)
            and self.a == other.a
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.a, self.field))

    # -- constructors ---------------------------------------------------

    def zero(self) -> "CliffordElement":
        return CliffordElement(self, {})

    def scalar(self, c) -> "CliffordElement":
        if isinstance(c, (int, Fraction)):
            c = self.field.scalar(c)
        return CliffordElement(self, {0: c} if c else {})

    def one(self) -> "CliffordElement":
        return self.scalar(1)

    def e(self, i: int) -> "CliffordElement":
        """Generator e_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError("generator index out of range")
        return CliffordElement(self, {1 << (i - 1): self.field.one})

    def vector(self, coords) -> "CliffordElement":
        """Grade-1 element with the given coordinates."""
        out = {}
        for i, c in enumerate(coords):
            if isinstance(c, (int, Fraction)):
                c = self.field.scalar(c)
            if c:
                out[1 << i] = c
        return CliffordElement(self, out)

    def basis_product(self, s: int, t: int):
        """(sign, rational factor, result mask) of e_S * e_T."""
        sign = 1
        # count anticommutation swaps: for each bit of t, the bits of s above it
        for i in range(self.n):
            if t >> i & 1:
                higher = s >> (i + 1)
                sign *= -1 if bin(higher).count("1") % 2 else 1
        factor = Fraction(1)
        for i in range(self.n):
            if s >> i & 1 and t >> i & 1:
                factor *= self.a[i]
        return sign, factor, s ^ t


class CliffordElement:
    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: CliffordAlgebra, coeffs: dict):
        self.alg = alg
        self.coeffs = {m: c for m, c in coeffs.items() if c}

    def _check(self, other):
        if self.alg != other.alg:
            raise ValueError("elements of different Clifford algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, self.alg.field.zero) + c
        return CliffordElement(self.alg, out)

    def __neg__(self):
        return CliffordElement(self.alg, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TowerElem)):
            if isinstance(other, (int, Fraction)):
                other = self.alg.field.scalar(other)
            return CliffordElement(self.alg, {m: c * other for m, c in self.coeffs.items()})
        self._check(other)
        out: dict = {}
        for s, cs in self.coeffs.items():
            for t, ct in other.coeffs.items():
                sign, factor, m = self.alg.basis_product(s, t)
                term = cs * ct * (sign * factor)
                out[m] = out.get(m, self.alg.field.zero) + term
        return CliffordElement(self.alg, out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.alg.scalar(other)
        return (
            isinstance(other, CliffordElement)
            and self.alg == other.alg
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.alg, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    @property
    def parity(self) -> str:
        grades = {bin(m).count("1") % 2 for m in self.coeffs}
        if not grades:
            return "even"
        if grades == {0}:
            return "even"
        if grades == {1}:
            return "odd"
        return "mixed"

    def is_homogeneous(self) -> bool:
        return self.parity in ("even", "odd")

    def grade_part(self, k: int) -> "CliffordElement":
        return CliffordElement(
            self.alg, {m: c for m, c in self.coeffs.items() if bin(m).count("1") == k}
        )

    def scalar_value(self):
        if any(m for m in self.coeffs):
            raise ValueError("element is not a scalar")
        return self.coeffs.get(0, self.alg.field.zero)

    def vector_coords(self):
        coords = [self.alg.field.zero] * self.alg.n
        for m, c in self.coeffs.items():
            if bin(m).count("1") != 1:
                raise ValueError("element is not grade 1")
            coords[m.bit_length() - 1] = c
        return coords

    def galois(self, flips: int) -> "CliffordElement":
        """Coefficientwise Galois action on the adjoined square roots."""
        return CliffordElement(self.alg, {m: c.galois(flips) for m, c in self.coeffs.items()})

    def inverse(self) -> "CliffordElement":
        dim = 1 << self.alg.n
        cols = []
        for t in range(dim):
            prod = self * CliffordElement(self.alg, {t: self.alg.field.one})
            col = [prod.coeffs.get(m, self.alg.field.zero) for m in range(dim)]
            cols.append(col)
        M = [[cols[t][m] for t in range(dim)] for m in range(dim)]
        rhs = [self.alg.field.one] + [self.alg.field.zero] * (dim - 1)
        sol = linalg.solve(M, rhs)
        if sol is None:
            raise ZeroDivisionError("element is not invertible")
        return CliffordElement(self.alg, {t: c for t, c in enumerate(sol) if c})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for m in sorted(self.coeffs, key=lambda m: (bin(m).count("1"), m)):
            sub = "{" + ",".join(str(i + 1) for i in range(self.alg.n) if m >> i & 1) + "}"
            mono = "1" if m == 0 else f"e{sub}"
            terms.append(f"({self.coeffs[m]})*{mono}")
        return " + ".join(terms)


def sigma(x: CliffordElement) -> CliffordElement:
    """Reversal anti-automorphism: on grade k multiplies by (-1)^(k(k-1)/2)."""
    out = {}
    for m, c in x.coeffs.items():
        k = bin(m).count("1")
        s = -1 if (k * (k - 1) // 2) % 2 else 1
        out[m] = c * s
    return CliffordElement(x.alg, out)


class NotInCliffordGroup(ValueError):
    def __init__(self, witness):
        super().__init__(f"not a Clifford group element; witness: {witness}")
        self.witness = witness


def clifford_group_check(x: CliffordElement) -> CliffordElement:
    """Verify x is in the Clifford group; returns x^{-1} for reuse."""
    if not x.is_homogeneous():
        raise NotInCliffordGroup("mixed parity")
    xinv = x.inverse()
    for i in range(1, x.alg.n + 1):
        img = x * x.alg.e(i) * xinv
        if any(bin(m).count("1") != 1 for m in img.coeffs):
            raise NotInCliffordGroup(i)
    return xinv


def spinor_norm(x: CliffordElement):
    """N(x) = sigma(x) x, a scalar of the coefficient field; multiplicative
    on the Clifford group."""
    clifford_group_check(x)
    return (sigma(x) * x).scalar_value()


def r_map(x: CliffordElement, eps: int):
    """The orthogonal matrix v -> eps * x v x^{-1}; eps=+1 for even x,
    -1 for odd x."""
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    par = x.parity
    if (eps == 1) != (par == "even"):
        raise ValueError(f"parity {par} does not match eps {eps}")
    xinv = clifford_group_check(x)
    cols = []
    for i in range(1, x.alg.n + 1):
        img = x * x.alg.e(i) * xinv * eps
        cols.append(img.vector_coords())
    # columns are images of basis vectors
    return [[cols[j][i] for j in range(x.alg.n)] for i in range(x.alg.n)]


def reflection_matrix(q: QuadForm, v):
    """tau_v(x) = x - 2 B(x,v)/q(v) v, for anisotropic v."""
    v = [Fraction(c) for c in v]
    qv = q.value(v)
    if not qv:
        raise ValueError("reflection vector must be anisotropic")
    n = q.rank
    cols = []
    for j in range(n):
        ej = [Fraction(1) if k == j else Fraction(0) for k in range(n)]
        b = q.bilinear(ej, v)
        cols.append([ej[i] - 2 * b / qv * v[i] for i in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def reflection_factorize(q: QuadForm, u):
    """Constructive Cartan-Dieudonne: anisotropic vectors v_1..v_k with
    u = tau_{v_1} ... tau_{v_k}, k <= 2 * rank."""
    n = q.rank
    u = [[Fraction(x) for x in row] for row in u]
    if not q.is_orthogonal(u):
        raise ValueError("matrix does not preserve the form")
    if any(q.gram[i][j] for i in range(n) for j in range(n) if i != j):
        # work in diagonal coordinates; tau_{Pv} for q is P tau_v P^{-1}
        diag, P = diagonalize(q)
        Pinv = linalg.inverse([list(r) for r in P])
        ud = linalg.mat_mul(Pinv, linalg.mat_mul(u, [list(r) for r in P]))
        vecs = reflection_factorize(QuadForm.diagonal(diag), ud)
        return [linalg.mat_vec([list(r) for r in P], v) for v in vecs]
    refls: list[list[Fraction]] = []
    cur = [row[:] for row in u]
    for j in range(n):
        ej = [Fraction(1) if k == j else Fraction(0) for k in range(n)]
        img = [cur[i][j] for i in range(n)]
        diff = [a - b for a, b in zip(img, ej)]
        if not any(diff):
            continue
        if q.value(diff):
            # tau_diff maps img to ej
            refls.append(diff)
            T = reflection_matrix(q, diff)
            cur = linalg.mat_mul(T, cur)
        else:
            # q(img - ej) = 0 forces q(img + ej) = 4 q(ej) != 0:
            # detour via tau_{img+ej} then tau_{ej}
            s = [a + b for a, b in zip(img, ej)]
            refls.append(s)
            cur = linalg.mat_mul(reflection_matrix(q, s), cur)
            refls.append(ej)
            cur = linalg.mat_mul(reflection_matrix(q, ej), cur)
    assert linalg.mat_eq(cur, linalg.identity(n))
    assert len(refls) <= 2 * n
    # cur = tau_k ... tau_1 u = I, so u = tau_1 ... tau_k reading refls in order
    return refls


@dataclass
class Lift:
    element: CliffordElement
    norm: Fraction  # exact rational spinor norm of the product of vectors
    norm_class: SquareClass


def lift(q: QuadForm, u, alg: CliffordAlgebra | None = None) -> Lift:
    """A lift of the orthogonal matrix u through the Clifford group of the
    diagonal form: the product of its reflection vectors.

    `q` must already be diagonal (it is the form of `alg`).
    """
    diag = [q.gram[i][i] for i in range(q.rank)]
    if any(q.gram[i][j] for i in range(q.rank) for j in range(q.rank) if i != j):
        raise ValueError("lift requires a diagonalized form")
    if alg is None:
        alg = CliffordAlgebra(diag)
    if tuple(alg.a) != tuple(diag):
        raise ValueError("algebra does not match the form")
    vecs = reflection_factorize(q, u)
    t = alg.one()
    norm = Fraction(1)
    for v in vecs:
        t = t * alg.vector(v)
        norm *= q.value(v)
    return Lift(t, norm, square_class(norm))


def extend_isometry(theta, src: CliffordAlgebra, dst: CliffordAlgebra):
    """Extend an isometry of diagonal forms to the graded algebra map
    e_S -> prod theta(e_i); verified multiplicative on all products of
    basis elements of degree <= 2."""
    n = src.n
    qs = QuadForm.diagonal(src.a)
    qd = QuadForm.diagonal(dst.a)
    theta = [[Fraction(x) for x in row] for row in theta]
    G = [list(r) for r in qd.gram]
    if not linalg.mat_eq(
        linalg.mat_mul(linalg.transpose(theta), linalg.mat_mul(G, theta)),
        [list(r) for r in qs.gram],
    ):
        raise ValueError("matrix is not an isometry between the two forms")
    gen_images = [dst.vector([theta[i][j] for i in range(n)]) for j in range(n)]
    images = {}
    for m in range(1 << n):
        prod = dst.one()
        for i in range(n):
            if m >> i & 1:
                prod = prod * gen_images[i]
        images[m] = prod

    def apply(x: CliffordElement) -> CliffordElement:
        out = dst.zero()
        for m, c in x.coeffs.items():
            out = out + images[m] * Fraction(c.as_rational())
        return out

    # verification on degree <= 2 basis products
    small = [m for m in range(1 << n) if bin(m).count("1") <= 2]
    for s in small:
        for t in small:
            lhs = apply(
                CliffordElement(src, {s: src.field.one}) * CliffordElement(src, {t: src.field.one})
            )
            rhs = images[s] * images[t]
            assert not (lhs - rhs), "extension is not multiplicative"
    return images, apply


class UnsupportedSpinorNormRegime(ValueError):
    """Spinor norm of a lift falls outside the square classes generated by
    the discriminants; callers should use the twist-based boundary class."""


def _subset_products(ds: list[int]) -> dict[int, int]:
    out = {}
    for mask in range(1 << len(ds)):
        v = 1
        for i, d in enumerate(ds):
            if mask >> i & 1:
                v *= d
        out[mask] = v
    return out


def delta2_via_clifford(q: QuadForm, ds: list[int], gen_images) -> BrClass:
    """Boundary class in H^2(Q, Z/2) of a homomorphism from the Galois
    group of Q(sqrt(d1) [, sqrt(d2)]) to O(q), computed by normalizing
    Clifford-group lifts to spinor norm 1 and evaluating the finite
    2-cocycle t_g * g(t_h) * t_{gh}^{-1} in {+-1}.

    The cocycle class is converted to a Brauer class generator by
    generator: a -1 on the diagonal square of the generator cut out by d
    contributes (d) cup (-1); an antisymmetric -1 between two generators
    contributes (d_i) cup (d_j).
    """
    ds = [square_class(d).rep for d in ds]
    if any(d == 1 for d in ds):
        raise ValueError("discriminants must be nontrivial square classes")
    if len(ds) == 2 and (square_class(ds[0] * ds[1]).rep == 1):
        raise ValueError("discriminants must be independent square classes")
    if len(ds) not in (1, 2):
        raise ValueError("only quadratic and biquadratic quotients are supported")

    diag, P = diagonalize(q)
    Pinv = linalg.inverse([list(r) for r in P])
    qd = QuadForm.diagonal(diag)
    m = len(ds)
    gen_images = [
        linalg.mat_mul(Pinv, linalg.mat_mul([[Fraction(x) for x in r] for r in u], [list(r) for r in P]))
        for u in gen_images
    ]
    for u in gen_images:
        if not qd.is_orthogonal(u):
            raise ValueError("generator image does not preserve the form")

    prods = _subset_products(ds)
    tower = SqrtTower(tuple(ds))
    alg = CliffordAlgebra(diag, tower)

    # verify the homomorphism property on the (Z/2)^m group
    n = q.rank
    elems = {}
    for g in range(1 << m):
        M = linalg.identity(n)
        for i in range(m):
            if g >> i & 1:
                M = linalg.mat_mul(M, gen_images[i])
        elems[g] = M
    for i, u in enumerate(gen_images):
        if not linalg.mat_eq(linalg.mat_mul(u, u), linalg.identity(n)):
            raise ValueError("generator image must square to the identity")
    if m == 2 and not linalg.mat_eq(
        linalg.mat_mul(gen_images[0], gen_images[1]),
        linalg.mat_mul(gen_images[1], gen_images[0]),
    ):
        raise ValueError("generator images must commute")

    # normalized lifts
    lifts = {0: alg.one()}
    for g in range(1, 1 << m):
        lf = lift(qd, elems[g], CliffordAlgebra(diag))
        s = lf.norm_class.rep
        mask = next((mask for mask, v in prods.items() if square_class(v).rep == s), None)
        if mask is None:
            raise UnsupportedSpinorNormRegime(
                f"spinor norm class {s} outside the group generated by {ds}"
            )
        # norm = s * r^2 and monomial^2 = D with D / s a rational square
        D = tower.monomial_square(mask)
        r = sqrt_rat(lf.norm / Fraction(s))
        c = sqrt_rat(Fraction(D) / Fraction(s))
        # w = (r/c) * monomial satisfies w^2 = norm; t = t0 / w has N = 1
        w = tower.sqrt_monomial(mask) * Fraction(r, 1) / Fraction(c, 1)
        t0 = CliffordElement(alg, {mm: tower.scalar(cc.as_rational()) for mm, cc in lf.element.coeffs.items()})
        lifts[g] = t0 * w.inverse()

    def cocycle(g: int, h: int):
        b = lifts[g] * lifts[h].galois(g) * lifts[g ^ h].inverse()
        val = b.scalar_value().as_rational()
        assert val in (1, -1), "cocycle value is not +-1"
        return int(val)

    out = ZERO_BR
    for i in range(m):
        gi = 1 << i
        if cocycle(gi, gi) == -1:
            out = out + cup(SquareClass(ds[i]), SquareClass(-1))
    if m == 2:
        if cocycle(1, 2) * cocycle(2, 1) == -1:
            out = out + cup(SquareClass(ds[0]), SquareClass(ds[1]))
    return out
