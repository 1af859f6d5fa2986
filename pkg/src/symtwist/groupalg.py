"""Finite permutation groups, cosets, double cosets and orthogonal
representations over Q.

Elements are permutations of {0..N-1} in one-line notation (tuples),
ordered lexicographically so that coset representatives are canonical.
Groups up to order 48 get full Cayley-table verification; larger groups
are accepted with sampled verification and a warning flag.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import linalg
from .quadform import QuadForm

Perm = tuple[int, ...]

FULL_CHECK_BOUND = 48


def p_mul(a: Perm, b: Perm) -> Perm:
    """(a b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def p_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def p_identity(n: int) -> Perm:
    return tuple(range(n))


def p_order(a: Perm) -> int:
    e = p_identity(len(a))
    cur, k = a, 1
    while cur != e:
        cur = p_mul(cur, a)
        k += 1
    return k


def parse_cycles(s: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)"."""
    out = list(range(degree))
    s = s.strip()
    if s in ("", "()", "e", "1"):
        return tuple(out)
    depth = 0
    cycles, cur = [], []
    for tok in s.replace("(", " ( ").replace(")", " ) ").replace(",", " ").split():
        if tok == "(":
            depth += 1
            cur = []
        elif tok == ")":
            depth -= 1
            cycles.append(cur)
        else:
            cur.append(int(tok) - 1)
    if depth != 0:
        raise ValueError(f"unbalanced cycle notation: {s!r}")
    for cyc in cycles:
        for i, x in enumerate(cyc):
            out[x] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def cycle_str(a: Perm) -> str:
    seen = [False] * len(a)
    parts = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) or "()"


class FiniteGroup:
    """A finite group of permutations of {0..N-1}, closed and verified."""

    def __init__(self, elements, degree: int | None = None, _verified: bool = False):
        elems = sorted(set(tuple(e) for e in elements))
        if not elems:
            raise ValueError("a group needs at least the identity")
        self.degree = degree if degree is not None else len(elems[0])
        self.elements: tuple[Perm, ...] = tuple(elems)
        self.identity = p_identity(self.degree)
        self.sampled_only = False
        if not _verified:
            self._verify()

    def _verify(self):
        elems = set(self.elements)
        if self.identity not in elems:
            raise ValueError("identity missing")
        n = len(self.elements)
        if n <= FULL_CHECK_BOUND:
            pairs = itertools.product(self.elements, repeat=2)
        else:
            rng = random.Random(0)
            pairs = [
                (rng.choice(self.elements), rng.choice(self.elements)) for _ in range(4 * n)
            ]
            self.sampled_only = True
        for a, b in pairs:
            if p_mul(a, b) not in elems:
                raise ValueError("set is not closed under multiplication")
        for a in self.elements:
            if p_inv(a) not in elems:
                raise ValueError("set is not closed under inverses")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return tuple(a) in set(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, degree={self.degree})"

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_generators(gens, degree: int) -> "FiniteGroup":
        e = p_identity(degree)
        seen = {e}
        frontier = [e]
        gens = [tuple(g) for g in gens]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = p_mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return FiniteGroup(seen, degree)

    @staticmethod
    def cyclic(n: int) -> "FiniteGroup":
        g = tuple((i + 1) % n for i in range(n))
        return FiniteGroup.from_generators([g], n)

    @staticmethod
    def symmetric(n: int) -> "FiniteGroup":
        return FiniteGroup(list(itertools.permutations(range(n))), n)

    @staticmethod
    def dihedral(n: int) -> "FiniteGroup":
        rot = tuple((i + 1) % n for i in range(n))
        refl = tuple((-i) % n for i in range(n))
        return FiniteGroup.from_generators([rot, refl], n)

    @staticmethod
    def direct_product(G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        dg, dh = G.degree, H.degree
        elems = []
        for a in G.elements:
            for b in H.elements:
                elems.append(tuple(list(a) + [dg + x for x in b]))
        return FiniteGroup(elems, dg + dh)

    @staticmethod
    def klein_four() -> "FiniteGroup":
        return FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))


def subgroup_closure(G: FiniteGroup, S) -> FiniteGroup:
    """Smallest subgroup of G containing S."""
    S = [tuple(s) for s in S]
    for s in S:
        if s not in G:
            raise ValueError("generator not in group")
    return FiniteGroup.from_generators(S, G.degree)


def is_subgroup(G: FiniteGroup, H: FiniteGroup) -> bool:
    return H.degree == G.degree and set(H.elements) <= set(G.elements)


def is_normal(G: FiniteGroup, N: FiniteGroup) -> bool:
    ns = set(N.elements)
    return all(p_mul(g, p_mul(n, p_inv(g))) in ns for g in G.elements for n in N.elements)


def cosets(G: FiniteGroup, H: FiniteGroup) -> list[Perm]:
    """Canonical (lexicographically minimal) left coset representatives."""
    if not is_subgroup(G, H):
        raise ValueError("H is not a subgroup of G")
    seen = set()
    reps = []
    for g in G.elements:  # already sorted, so first hit is minimal
        coset = frozenset(p_mul(g, h) for h in H.elements)
        if coset not in seen:
            seen.add(coset)
            reps.append(g)
    return reps


def coset_index(G: FiniteGroup, H: FiniteGroup, reps: list[Perm], g: Perm) -> int:
    """Index of the coset gH among the representatives."""
    hs = set(H.elements)
    for i, r in enumerate(reps):
        if p_mul(p_inv(r), g) in hs:
            return i
    raise ValueError("element not covered by the representatives")


def double_cosets(G: FiniteGroup, A: FiniteGroup, B: FiniteGroup) -> list[tuple[Perm, int]]:
    """Representatives and sizes of the double cosets A g B."""
    if not (is_subgroup(G, A) and is_subgroup(G, B)):
        raise ValueError("A and B must be subgroups of G")
    remaining = set(G.elements)
    out = []
    for g in G.elements:
        if g not in remaining:
            continue
        dc = {p_mul(a, p_mul(g, b)) for a in A.elements for b in B.elements}
        out.append((g, len(dc)))
        remaining -= dc
    assert sum(sz for _, sz in out) == G.order
    return out


def subgroups(G: FiniteGroup) -> list[FiniteGroup]:
    """All subgroups generated by at most two elements.

    For the group orders used here (<= 24, cyclic/dihedral/klein types)
    every subgroup is at most 2-generated, so this is the full lattice.
    """
    found = {}
    trivial = FiniteGroup([G.identity], G.degree)
    found[trivial.elements] = trivial
    for a in G.elements:
        H = subgroup_closure(G, [a])
        found.setdefault(H.elements, H)
    singles = list(found.values())
    for a in G.elements:
        for b in G.elements:
            if b <= a:
                continue
            H = subgroup_closure(G, [a, b])
            found.setdefault(H.elements, H)
    return sorted(found.values(), key=lambda H: (H.order, H.elements))


def quotient_is_cyclic(D: FiniteGroup, N: FiniteGroup) -> int | None:
    """If D/N is cyclic, return its order, else None."""
    idx = D.order // N.order
    ns = set(N.elements)
    for d in D.elements:
        # smallest k with d^k in N = order of the coset dN
        cur, k = d, 1
        while cur not in ns:
            cur = p_mul(cur, d)
            k += 1
        if k == idx:
            return idx
    return 1 if idx == 1 else None


class OrthRep:
    """An orthogonal representation: a verified homomorphism from a finite
    group into the exact orthogonal group of a rational form."""

    def __init__(self, group: FiniteGroup, form: QuadForm, images: dict):
        self.group = group
        self.form = form
        imgs = {tuple(g): [[Fraction(x) for x in row] for row in M] for g, M in images.items()}
        if set(imgs) != set(group.elements):
            raise ValueError("images must cover the whole group")
        self.images = imgs
        self._verify()

    def _verify(self):
        n = self.form.rank
        idm = linalg.identity(n)
        if not linalg.mat_eq(self.images[self.group.identity], idm):
            raise ValueError("identity must map to the identity matrix")
        for g, M in self.images.items():
            if not self.form.is_orthogonal(M):
                raise ValueError(f"image of {g} does not preserve the form")
        elems = self.group.elements
        if self.group.order <= FULL_CHECK_BOUND:
            pairs = itertools.product(elems, repeat=2)
        else:
            rng = random.Random(1)
            pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(4 * self.group.order)]
        for a, b in pairs:
            if not linalg.mat_eq(
                linalg.mat_mul(self.images[a], self.images[b]), self.images[p_mul(a, b)]
            ):
                raise ValueError("images do not satisfy the homomorphism property")

    @staticmethod
    def from_generator_images(group: FiniteGroup, form: QuadForm, gen_images: dict) -> "OrthRep":
        """Extend generator images over the whole group by word closure."""
        n = form.rank
        images = {group.identity: linalg.identity(n)}
        gen_images = {tuple(g): [[Fraction(x) for x in row] for row in M] for g, M in gen_images.items()}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g, M in gen_images.items():
                    b = p_mul(a, g)
                    prod = linalg.mat_mul(images[a], M)
                    if b in images:
                        if not linalg.mat_eq(images[b], prod):
                            raise ValueError("generator images are inconsistent")
                    else:
                        images[b] = prod
                        nxt.append(b)
            frontier = nxt
        if len(images) != group.order:
            raise ValueError("generators do not generate the group")
        return OrthRep(group, form, images)

    def __call__(self, g) -> list[list[Fraction]]:
        return self.images[tuple(g)]

    def det_character(self) -> dict[Perm, int]:
        out = {}
        for g, M in self.images.items():
            d = linalg.det(M)
            if d not in (1, -1):
                raise AssertionError("orthogonal matrix with determinant != +-1")
            out[g] = int(d)
        return out

    def det_is_trivial(self) -> bool:
        return all(v == 1 for v in self.det_character().values())


def trivial_rep(group: FiniteGroup, form: QuadForm) -> OrthRep:
    n = form.rank
    return OrthRep(group, form, {g: linalg.identity(n) for g in group.elements})


def permutation_rep(G: FiniteGroup, H: FiniteGroup) -> OrthRep:
    """G permuting the left cosets of H, on the form with the cosets as an
    orthonormal basis."""
    reps = cosets(G, H)
    k = len(reps)
    form = QuadForm.identity(k)
    images = {}
    for g in G.elements:
        M = [[Fraction(0)] * k for _ in range(k)]
        for j, r in enumerate(reps):
            i = coset_index(G, H, reps, p_mul(g, r))
            M[i][j] = Fraction(1)
        images[g] = M
    return OrthRep(G, form, images)


def rep_direct_sum(r1: OrthRep, r2: OrthRep) -> OrthRep:
    if r1.group != r2.group:
        raise ValueError("direct sum requires the same group")
    from .quadform import orth_sum

    form = orth_sum(r1.form, r2.form)
    n1, n2 = r1.form.rank, r2.form.rank
    images = {}
    for g in r1.group.elements:
        M = [[Fraction(0)] * (n1 + n2) for _ in range(n1 + n2)]
        for i in range(n1):
            for j in range(n1):
                M[i][j] = r1.images[g][i][j]
        for i in range(n2):
            for j in range(n2):
                M[n1 + i][n1 + j] = r2.images[g][i][j]
        images[g] = M
    return OrthRep(r1.group, form, images)


def sign_rep(G: FiniteGroup, character: dict) -> OrthRep:
    """Rank-1 representation from a {+-1}-valued character."""
    form = QuadForm.identity(1)
    images = {g: [[Fraction(character[tuple(g)])]] for g in G.elements}
    return OrthRep(G, form, images)
