"""Galois algebras: explicit G-torsors over Q.

A G-torsor is realized as a commutative etale Q-algebra of dimension |G|
with a verified action of G by algebra automorphisms whose fixed ring is
Q.  The bundled constructions are split torsors Map(G, Q), quadratic and
biquadratic fields, the cyclic cubic x^3 - 3x - 1 and the cyclotomic
fields of fifth and seventh roots of unity; automorphisms are supplied as
polynomials and verified, never discovered.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from . import linalg
from .fields import _poly_divmod, _poly_mul, _trim
from .groupalg import FiniteGroup, FULL_CHECK_BOUND, is_subgroup, parse_cycles, p_inv, p_mul
from .quadform import QuadForm


class EtaleAlgebra:
    """A commutative etale Q-algebra with explicit structure constants."""

    def __init__(self, dim: int, mult_table, unit, label: str = ""):
        self.dim = dim
        self.table = tuple(
            tuple(tuple(Fraction(x) for x in vec) for vec in row) for row in mult_table
        )
        self.unit = tuple(Fraction(x) for x in unit)
        self.label = label
        self._verify_algebra()

    def mult_vec(self, u, v):
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, t in enumerate(self.table[i][j]):
                    if t:
                        out[k] += c * t
        return out

    def mult_matrix(self, u):
        """Matrix of multiplication by the element with coordinates u."""
        cols = []
        for j in range(self.dim):
            ej = [Fraction(1) if k == j else Fraction(0) for k in range(self.dim)]
            cols.append(self.mult_vec(u, ej))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def trace(self, u) -> Fraction:
        M = self.mult_matrix(u)
        return sum(M[i][i] for i in range(self.dim))

    def _verify_algebra(self):
        n = self.dim
        basis = [[Fraction(1) if k == j else Fraction(0) for k in range(n)] for j in range(n)]
        for i in range(n):
            for j in range(i):
                if self.table[i][j] != self.table[j][i]:
                    raise ValueError("algebra is not commutative")
        for j in range(n):
            if self.mult_vec(self.unit, basis[j]) != basis[j]:
                raise ValueError("unit element fails")
        # associativity spot check on basis triples
        for i in range(n):
            for j in range(n):
                for k in range(min(n, 4)):
                    lhs = self.mult_vec(self.mult_vec(basis[i], basis[j]), basis[k])
                    rhs = self.mult_vec(basis[i], self.mult_vec(basis[j], basis[k]))
                    if lhs != rhs:
                        raise ValueError("structure constants are not associative")

    def is_scalar(self, u) -> Fraction | None:
        """If u = c * unit, return c."""
        piv = next((i for i, x in enumerate(self.unit) if x), None)
        c = Fraction(u[piv]) / self.unit[piv]
        if list(u) == [c * x for x in self.unit]:
            return c
        return None

    def __repr__(self):
        return f"EtaleAlgebra({self.label or self.dim})"


def trace_form(A: EtaleAlgebra) -> QuadForm:
    """Gram(i,j) = Tr(b_i b_j); nondegenerate exactly when A is etale."""
    n = A.dim
    basis = [[Fraction(1) if k == j else Fraction(0) for k in range(n)] for j in range(n)]
    g = [[A.trace(A.mult_vec(basis[i], basis[j])) for j in range(n)] for i in range(n)]
    try:
        return QuadForm(g)
    except ValueError as exc:
        raise ValueError("degenerate trace form: algebra is not etale") from exc


class GaloisAlgebra(EtaleAlgebra):
    """An etale algebra of dimension |G| with verified G-action and fixed
    ring Q (the torsor condition over the rational base)."""

    def __init__(self, group: FiniteGroup, mult_table, unit, action: dict, label: str = "", tag: str = ""):
        super().__init__(group.order, mult_table, unit, label)
        self.group = group
        self.tag = tag
        self.action = {
            tuple(g): [[Fraction(x) for x in row] for row in M] for g, M in action.items()
        }
        if set(self.action) != set(group.elements):
            raise ValueError("action must cover the whole group")
        self._verify_torsor()

    def act(self, g) -> list[list[Fraction]]:
        return self.action[tuple(g)]

    def _verify_torsor(self):
        n = self.dim
        basis = [[Fraction(1) if k == j else Fraction(0) for k in range(n)] for j in range(n)]
        idm = linalg.identity(n)
        if not linalg.mat_eq(self.action[self.group.identity], idm):
            raise ValueError("identity must act trivially")
        # homomorphism over the Cayley table (full at desk scale)
        elems = self.group.elements
        if self.group.order <= FULL_CHECK_BOUND:
            import itertools

            pairs = itertools.product(elems, repeat=2)
        else:
            import random

            rng = random.Random(2)
            pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(4 * len(elems))]
        for a, b in pairs:
            if not linalg.mat_eq(
                linalg.mat_mul(self.action[a], self.action[b]), self.action[p_mul(a, b)]
            ):
                raise ValueError("action is not a group homomorphism")
        # each action matrix is an algebra automorphism fixing the unit
        for g, M in self.action.items():
            if linalg.mat_vec(M, list(self.unit)) != list(self.unit):
                raise ValueError("action must fix the unit")
            for i in range(n):
                for j in range(i + 1):
                    lhs = linalg.mat_vec(M, self.mult_vec(basis[i], basis[j]))
                    rhs = self.mult_vec(linalg.mat_vec(M, basis[i]), linalg.mat_vec(M, basis[j]))
                    if lhs != rhs:
                        raise ValueError("action matrix is not an algebra automorphism")
        # fixed subalgebra must be exactly Q * unit
        rows = []
        for g in self.group.elements:
            M = self.action[g]
            for i in range(n):
                rows.append([M[i][j] - (1 if i == j else 0) for j in range(n)])
        fixed = linalg.kernel_basis(rows) if rows else []
        if len(fixed) != 1:
            raise ValueError("fixed space of the full group is not 1-dimensional")
        # etale check
        trace_form(self)

    def __repr__(self):
        return f"GaloisAlgebra({self.label or self.tag}, |G|={self.group.order})"


# -- constructors -----------------------------------------------------------


def split_torsor(G: FiniteGroup, label: str = "") -> GaloisAlgebra:
    """Map(G, Q) with G acting by right translation on arguments."""
    n = G.order
    elems = list(G.elements)
    idx = {g: i for i, g in enumerate(elems)}
    table = [
        [
            [Fraction(1) if (i == j and k == i) else Fraction(0) for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = [Fraction(1)] * n
    action = {}
    for g in G.elements:
        M = [[Fraction(0)] * n for _ in range(n)]
        for a in elems:
            # g . e_a = e_{a g^{-1}}
            M[idx[p_mul(a, p_inv(g))]][idx[a]] = Fraction(1)
        action[g] = M
    return GaloisAlgebra(G, table, unit, action, label or f"split_{n}", tag="split")


def _poly_mod(p, f):
    _, r = _poly_divmod(_trim(list(p)), f)
    return list(r) + [Fraction(0)] * (len(f) - 1 - len(r))


def _poly_compose_mod(a, b, f):
    """a(b(x)) mod f."""
    out = [Fraction(0)]
    power = [Fraction(1)]
    for c in a:
        if c:
            term = [c * x for x in power]
            m = max(len(out), len(term))
            out = [
                (out[i] if i < len(out) else Fraction(0))
                + (term[i] if i < len(term) else Fraction(0))
                for i in range(m)
            ]
        power = _poly_mod(_poly_mul(power, b), f)
    return _poly_mod(out, f)


def field_torsor(f_coeffs, gen_auts: dict, group: FiniteGroup, label: str = "") -> GaloisAlgebra:
    """Q[x]/(f) for a monic integer polynomial f, with the G-action given
    by automorphism polynomials for the group generators.

    `gen_auts` maps generator permutations of `group` to coefficient lists
    (low to high) of polynomials a with f(a(x)) = 0 mod f; the assignment
    is extended to all of G by word closure and verified.
    """
    f = [Fraction(c) for c in f_coeffs]
    if f[-1] != 1:
        raise ValueError("f must be monic")
    n = len(f) - 1
    if n != group.order:
        raise ValueError("deg f must equal the group order")
    # structure constants of the power basis
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            p = [Fraction(0)] * (i + j) + [Fraction(1)]
            row.append(_poly_mod(p, f))
        table.append(row)
    unit = [Fraction(1)] + [Fraction(0)] * (n - 1)

    def aut_matrix(a):
        # check f(a(x)) = 0 mod f
        img = _poly_compose_mod([Fraction(c) for c in f], a, f)
        if any(img):
            raise ValueError(f"{a} is not an automorphism: f(a(x)) != 0 mod f")
        cols = []
        power = [Fraction(1)] + [Fraction(0)] * (n - 1)
        for _ in range(n):
            cols.append(list(power))
            power = _poly_mod(_poly_mul(power, a), f)
        # column k is a(x)^k
        cols = [_poly_mod(c, f) for c in cols]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    action = {group.identity: linalg.identity(n)}
    gen_auts = {tuple(g): [Fraction(c) for c in a] for g, a in gen_auts.items()}
    gen_mats = {g: aut_matrix(a) for g, a in gen_auts.items()}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g, M in gen_mats.items():
                k = p_mul(g, h)
                prod = linalg.mat_mul(M, action[h])
                if k in action:
                    if not linalg.mat_eq(action[k], prod):
                        raise ValueError("automorphism assignment is inconsistent")
                else:
                    action[k] = prod
                    nxt.append(k)
        frontier = nxt
    if len(action) != group.order:
        raise ValueError("generators do not generate the group")
    return GaloisAlgebra(group, table, unit, action, label, tag="field")


def quadratic_torsor(d: int, label: str = "") -> GaloisAlgebra:
    """Q(sqrt(d)) (or Q x Q when d is a square) as a C2-torsor."""
    G = FiniteGroup.cyclic(2)
    gen = (1, 0)
    return field_torsor([-d, 0, 1], {gen: [0, -1]}, G, label or f"sqrt{d}")


def biquadratic_torsor(a: int, b: int, label: str = "") -> GaloisAlgebra:
    """Q(sqrt(a), sqrt(b)) as a Klein-four torsor, via theta = sqrt a + sqrt b."""
    if a == b:
        raise ValueError("radicands must differ")
    # min poly of theta: x^4 - 2(a+b) x^2 + (a-b)^2
    f = [Fraction((a - b) ** 2), 0, Fraction(-2 * (a + b)), 0, Fraction(1)]
    # sqrt a = (theta^3 - (3a+b) theta) / (2(b-a)), and symmetrically
    ra = [Fraction(0), Fraction(-(3 * a + b), 2 * (b - a)), Fraction(0), Fraction(1, 2 * (b - a))]
    rb = [Fraction(0), Fraction(-(a + 3 * b), 2 * (a - b)), Fraction(0), Fraction(1, 2 * (a - b))]

    def comb(sa, sb):
        return [sa * x + sb * y for x, y in zip(ra, rb)]

    G = FiniteGroup.klein_four()
    g1 = (1, 0, 2, 3)  # flips sqrt(a)
    g2 = (0, 1, 3, 2)  # flips sqrt(b)
    auts = {g1: comb(-1, 1), g2: comb(1, -1)}
    return field_torsor(f, auts, G, label or f"biquad_{a}_{b}")


def cyclic_cubic_torsor(label: str = "cubic_x3_3x_1") -> GaloisAlgebra:
    """The cyclic cubic field Q[x]/(x^3 - 3x + 1), generator x -> x^2 - 2.

    The roots are 2cos(2pi/9), 2cos(4pi/9), 2cos(8pi/9) and squaring the
    generator doubles the angle, so x -> x^2 - 2 cycles them.
    """
    G = FiniteGroup.cyclic(3)
    gen = (1, 2, 0)
    return field_torsor([1, -3, 0, 1], {gen: [-2, 0, 1]}, G, label)


def cyclotomic_torsor(p: int, label: str = "") -> GaloisAlgebra:
    """Q(zeta_p) for prime p, with cyclic Galois group of order p - 1."""
    import sympy

    if not sympy.isprime(p):
        raise ValueError("order must be prime here")
    g = sympy.primitive_root(p)
    n = p - 1
    G = FiniteGroup.cyclic(n)
    gen = tuple((i + 1) % n for i in range(n))
    f = [Fraction(1)] * (n + 1)  # x^{p-1} + ... + 1
    aut = [Fraction(0)] * g + [Fraction(1)]  # x -> x^g, reduced later
    aut = _poly_mod(aut, f)
    return field_torsor(f, {gen: aut}, G, label or f"zeta{p}")


def fixed_subalgebra(A: GaloisAlgebra, H: FiniteGroup):
    """The H-fixed subalgebra, with the embedding of its basis into A.

    Returns (EtaleAlgebra of dimension [G:H], basis matrix whose columns
    are the fixed basis vectors inside A).
    """
    if not is_subgroup(A.group, H):
        raise ValueError("H is not a subgroup of the torsor group")
    n = A.dim
    rows = []
    for h in H.elements:
        M = A.action[h]
        for i in range(n):
            rows.append([M[i][j] - (1 if i == j else 0) for j in range(n)])
    basis = linalg.kernel_basis(rows)
    k = len(basis)
    if k != A.group.order // H.order:
        raise AssertionError("fixed space dimension differs from the index")
    # columns are the embedded basis vectors
    B = [[basis[j][i] for j in range(k)] for i in range(n)]
    # structure constants: express products of basis vectors in the basis
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = A.mult_vec(basis[i], basis[j])
            coords = linalg.solve(B, prod)
            if coords is None:
                raise AssertionError("fixed subspace is not closed under multiplication")
            row.append(coords)
        table.append(row)
    unit_coords = linalg.solve(B, list(A.unit))
    if unit_coords is None:
        raise AssertionError("unit is not in the fixed subspace")
    sub = EtaleAlgebra(k, table, unit_coords, label=f"{A.label}^H")
    return sub, B


# -- corpus -----------------------------------------------------------------

QUADRATIC_DISCRIMINANTS = (2, -2, 3, -3, 5, 6, 7, 10)
BIQUADRATIC_PAIRS = ((2, 3), (-1, 2), (-3, 5))


def standard_corpus() -> list[GaloisAlgebra]:
    """The bundled torsor corpus: split torsors, eight quadratic fields,
    Q(i), three biquadratic fields, a cyclic cubic and the fifth and
    seventh cyclotomic fields."""
    out = [
        split_torsor(FiniteGroup.cyclic(2), "split_c2"),
        split_torsor(FiniteGroup.cyclic(3), "split_c3"),
        split_torsor(FiniteGroup.symmetric(3), "split_s3"),
    ]
    for d in QUADRATIC_DISCRIMINANTS:
        out.append(quadratic_torsor(d))
    out.append(quadratic_torsor(-1, "gauss"))
    for a, b in BIQUADRATIC_PAIRS:
        out.append(biquadratic_torsor(a, b))
    out.append(cyclic_cubic_torsor())
    out.append(cyclotomic_torsor(5))
    out.append(cyclotomic_torsor(7))
    return out


def load_corpus(path=None) -> list[GaloisAlgebra]:
    """Load torsor records from a JSON corpus file.

    Each record: {"label", "poly": [c0..cn], "group": {"degree", "generators":
    {name: cycles}}, "auts": {name: [c0..ck]}}.  A record with "split" set
    instead builds the split torsor of its group.
    """
    if path is None:
        with resources.files("symtwist.data").joinpath("corpus.json").open() as fh:
            data = json.load(fh)
    else:
        with open(path) as fh:
            data = json.load(fh)
    out = []
    for rec in data["torsors"]:
        gspec = rec["group"]
        degree = gspec["degree"]
        gens = {name: parse_cycles(c, degree) for name, c in gspec["generators"].items()}
        G = FiniteGroup.from_generators(gens.values(), degree)
        if rec.get("split"):
            out.append(split_torsor(G, rec["label"]))
            continue
        auts = {gens[name]: [Fraction(c) for c in coeffs] for name, coeffs in rec["auts"].items()}
        out.append(field_torsor(rec["poly"], auts, G, rec["label"]))
    return out
