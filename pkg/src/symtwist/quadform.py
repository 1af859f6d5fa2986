"""Nondegenerate symmetric bilinear forms over Q.

Conventions (fixed once, used everywhere):

* w1(q) is the square class of det(Gram), i.e. the total-class convention
  w_t(<a1..an>) = prod(1 + (a_i) t), so w1 = (a1...an).
* w2(q) = sum_{i<j} (a_i) cup (a_j).
* The classical Hasse symbol support set uses i <= j, so
  hasse(q) = w2(q) + (w1(q)) cup (-1); this dictionary is unit-tested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .arith import (
    BrClass,
    ONE_CLASS,
    Rat,
    SquareClass,
    ZERO_BR,
    cup,
    square_class,
)


def _to_gram(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


class QuadForm:
    """A nondegenerate symmetric Gram matrix over Q."""

    def __init__(self, gram):
        g = _to_gram(gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        if n and not linalg.det([list(r) for r in g]):
            raise ValueError("gram matrix is degenerate")
        self.gram = g
        self.rank = n

    @staticmethod
    def diagonal(entries) -> "QuadForm":
        entries = [Fraction(e) for e in entries]
        n = len(entries)
        return QuadForm([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def identity(n: int) -> "QuadForm":
        return QuadForm.diagonal([1] * n)

    @staticmethod
    def hyperbolic(planes: int) -> "QuadForm":
        return QuadForm.diagonal([1, -1] * planes)

    def value(self, v) -> Rat:
        """q(v) = v^T Gram v."""
        return self.bilinear(v, v)

    def bilinear(self, v, w) -> Rat:
        v = [Fraction(x) for x in v]
        w = [Fraction(x) for x in w]
        return sum(v[i] * self.gram[i][j] * w[j] for i in range(self.rank) for j in range(self.rank))

    def det(self) -> Rat:
        return linalg.det([list(r) for r in self.gram])

    def transform(self, P) -> "QuadForm":
        """Congruent form P^T Gram P (P invertible)."""
        P = [[Fraction(x) for x in row] for row in P]
        G = [list(r) for r in self.gram]
        return QuadForm(linalg.mat_mul(linalg.transpose(P), linalg.mat_mul(G, P)))

    def is_orthogonal(self, M) -> bool:
        """Whether M^T Gram M = Gram exactly."""
        M = [[Fraction(x) for x in row] for row in M]
        G = [list(r) for r in self.gram]
        return linalg.mat_eq(linalg.mat_mul(linalg.transpose(M), linalg.mat_mul(G, M)), G)

    def __eq__(self, other):
        return isinstance(other, QuadForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"QuadForm({[list(map(str, r)) for r in self.gram]})"


@dataclass(frozen=True)
class FormInvariants:
    rank: int
    w1: SquareClass
    w2: BrClass
    signature: tuple[int, int]
    hasse: BrClass

    def as_record(self) -> dict:
        return {
            "rank": self.rank,
            "w1": self.w1.rep,
            "w2": [str(v) for v in self.w2.places()],
            "signature": list(self.signature),
            "hasse": [str(v) for v in self.hasse.places()],
        }


@dataclass(frozen=True)
class Lagrangian:
    """Basis of a totally isotropic subspace of half rank."""

    basis: tuple[tuple[Rat, ...], ...]


def _height(r: Fraction) -> int:
    return max(abs(r.numerator), r.denominator)


def diagonalize(q: QuadForm):
    """Symmetric Gauss reduction: returns (entries, P) with P^T G P diagonal.

    Pivoting prefers the nonzero diagonal entry of smallest height; a zero
    diagonal is repaired by the e_i -> e_i + e_j preconditioning step.
    """
    n = q.rank
    G = [list(row) for row in q.gram]
    P = linalg.identity(n)
    entries = []
    active = list(range(n))
    while active:
        # choose pivot among active indices
        cand = [i for i in active if G[i][i]]
        if cand:
            piv = min(cand, key=lambda i: _height(G[i][i]))
        else:
            # all active diagonal entries vanish; some off-diagonal is nonzero
            piv = active[0]
            j = next(j for j in active if G[piv][j])
            _add_column(G, P, src=j, dst=piv)
        a = G[piv][piv]
        # clear row/column piv against the other active indices
        for j in active:
            if j != piv and G[piv][j]:
                f = -G[piv][j] / a
                _add_scaled_column(G, P, src=piv, dst=j, factor=f)
        entries.append((piv, a))
        active.remove(piv)
    entries.sort()
    order = [i for i, _ in entries]
    diag = [a for _, a in entries]
    # permute columns of P so that P^T G P has the entries in order
    Pn = [[P[r][c] for c in order] for r in range(n)]
    return diag, Pn


def _add_column(G, P, src, dst):
    """Basis change e_dst -> e_dst + e_src (congruence update)."""
    n = len(G)
    for r in range(n):
        P[r][dst] += P[r][src]
    for r in range(n):
        G[r][dst] += G[r][src]
    for c in range(n):
        G[dst][c] += G[src][c]


def _add_scaled_column(G, P, src, dst, factor):
    n = len(G)
    for r in range(n):
        P[r][dst] += factor * P[r][src]
    for r in range(n):
        G[r][dst] += factor * G[r][src]
    for c in range(n):
        G[dst][c] += factor * G[src][c]


def invariants(q: QuadForm) -> FormInvariants:
    """Rank, determinant class, Hasse-Witt class, signature and classical
    Hasse set of a form; independent of the diagonalization chosen."""
    diag, _ = diagonalize(q)
    classes = [square_class(a) for a in diag]
    w1 = ONE_CLASS
    for c in classes:
        w1 = w1 * c
    w2 = ZERO_BR
    for (ci, cj) in itertools.combinations(classes, 2):
        w2 = w2 + cup(ci, cj)
    hasse = w2
    for c in classes:
        hasse = hasse + cup(c, c)
    pos = sum(1 for a in diag if a > 0)
    return FormInvariants(q.rank, w1, w2, (pos, q.rank - pos), hasse)


def is_isometric(q1: QuadForm, q2: QuadForm) -> bool:
    """Hasse-Minkowski: rank, signature, det class and Hasse set classify."""
    i1, i2 = invariants(q1), invariants(q2)
    return (
        i1.rank == i2.rank
        and i1.signature == i2.signature
        and i1.w1 == i2.w1
        and i1.hasse == i2.hasse
    )


def orth_sum(q1: QuadForm, q2: QuadForm) -> QuadForm:
    n1, n2 = q1.rank, q2.rank
    g = [[Fraction(0)] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            g[i][j] = q1.gram[i][j]
    for i in range(n2):
        for j in range(n2):
            g[n1 + i][n1 + j] = q2.gram[i][j]
    return QuadForm(g)


def scale(q: QuadForm, c) -> QuadForm:
    c = Fraction(c)
    if not c:
        raise ValueError("scale factor must be nonzero")
    return QuadForm([[c * x for x in row] for row in q.gram])


def negate(q: QuadForm) -> QuadForm:
    return scale(q, -1)


def is_valid_lagrangian(q: QuadForm, L: Lagrangian) -> bool:
    vs = [list(map(Fraction, v)) for v in L.basis]
    if 2 * len(vs) != q.rank:
        return False
    if linalg.rank(vs) != len(vs):
        return False
    return all(not q.bilinear(v, w) for v in vs for w in vs)


@dataclass(frozen=True)
class MetabolicResult:
    metabolic: bool
    witness: Lagrangian | None
    witness_found: bool  # False + metabolic=True means "not found within bound"


def _primitive_vectors(n: int, bound: int):
    """Primitive integer vectors up to sign, by increasing max-norm."""
    for h in range(1, bound + 1):
        for v in itertools.product(range(-h, h + 1), repeat=n):
            if max(abs(x) for x in v) != h:
                continue
            nz = next((x for x in v if x), None)
            if nz is None or nz < 0:
                continue  # fix sign
            from math import gcd
            g = 0
            for x in v:
                g = gcd(g, abs(x))
            if g == 1:
                yield list(v)


def _find_isotropic(q: QuadForm, bound: int, max_candidates: int = 2_000_000):
    seen = 0
    for v in _primitive_vectors(q.rank, bound):
        if not q.value(v):
            return v
        seen += 1
        if seen >= max_candidates:
            break
    return None


def is_metabolic(q: QuadForm, search_bound: int = 50) -> MetabolicResult:
    """Decide metabolicity by invariants; search for a lagrangian witness
    by bounded enumeration of isotropic vectors and hyperbolic splitting.

    The decision never depends on the witness search; over Q a metabolic
    form is exactly one isometric to the hyperbolic form of its rank.
    """
    n = q.rank
    decided = n % 2 == 0 and is_isometric(q, QuadForm.hyperbolic(n // 2))
    if not decided:
        return MetabolicResult(False, None, False)
    vectors = _lagrangian_search(q, search_bound)
    if vectors is None:
        return MetabolicResult(True, None, False)
    L = Lagrangian(tuple(tuple(v) for v in vectors))
    assert is_valid_lagrangian(q, L)
    return MetabolicResult(True, L, True)


def _lagrangian_search(q: QuadForm, bound: int):
    """Split off hyperbolic planes, collecting one isotropic generator per
    plane; returns vectors in the original coordinates or None."""
    n = q.rank
    if n == 0:
        return []
    v = _find_isotropic(q, bound)
    if v is None:
        return None
    v = [Fraction(x) for x in v]
    # partner w with B(v, w) != 0
    j = next(j for j in range(n) if q.bilinear(v, _unit_vec(n, j)))
    w = _unit_vec(n, j)
    b = q.bilinear(v, w)
    w = [x / b for x in w]  # B(v, w) = 1
    # make w isotropic: w -> w - (q(w)/2) v
    c = q.value(w) / 2
    w = [wx - c * vx for wx, vx in zip(w, v)]
    # complement: kernel of the two linear conditions B(v, .), B(w, .)
    rows = [
        [q.bilinear(v, _unit_vec(n, k)) for k in range(n)],
        [q.bilinear(w, _unit_vec(n, k)) for k in range(n)],
    ]
    comp = linalg.kernel_basis(rows)
    # restricted form on the complement
    sub = QuadForm([[q.bilinear(x, y) for y in comp] for x in comp])
    rest = _lagrangian_search(sub, bound)
    if rest is None:
        return None
    out = [v]
    for rv in rest:
        out.append([sum(rv[t] * comp[t][k] for t in range(len(comp))) for k in range(n)])
    return out


def _unit_vec(n, j):
    return [Fraction(1) if k == j else Fraction(0) for k in range(n)]


def dt_class(n: int) -> tuple[SquareClass, BrClass]:
    """Degree-1 and degree-2 parts of d_t for a rank-n bundle over a field:
    ((-1)^n, binom(n,2) copies of (-1) cup (-1))."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    w1p = SquareClass(-1) if n % 2 else ONE_CLASS
    w2p = cup(SquareClass(-1), SquareClass(-1)) if (n * (n - 1) // 2) % 2 else ZERO_BR
    return w1p, w2p


def verify_main_lemma(q: QuadForm, L: Lagrangian) -> bool:
    """For a metabolic form with lagrangian L: w_t(q) equals d_t of a
    trivial bundle of half rank (all positive-degree Chern classes vanish
    over a field)."""
    if not is_valid_lagrangian(q, L):
        raise ValueError("not a valid lagrangian for this form")
    inv = invariants(q)
    w1p, w2p = dt_class(q.rank // 2)
    return inv.w1 == w1p and inv.w2 == w2p
