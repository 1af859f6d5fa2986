"""Combinatorial ramification invariant of a tame cover datum.

A component of the branch locus carries an odd inertia order e and a list
of character-component ranks d_k; the invariant is d = sum k d_k and only
its parity enters the divisor class.  For subquotient configurations
(G, H, Delta, I, f) the invariant of the induced permutation module has a
closed form over double cosets, which is checked here against a brute-force
idempotent-rank computation over the cyclotomic field of order e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .fields import CyclotomicField
from .groupalg import (
    FiniteGroup,
    Perm,
    cosets,
    coset_index,
    double_cosets,
    is_normal,
    is_subgroup,
    p_inv,
    p_mul,
    p_order,
    quotient_is_cyclic,
    subgroups,
)


@dataclass(frozen=True)
class RamComponent:
    e: int
    d_list: tuple[int, ...]  # d_k for 0 <= k <= floor(e/2)
    label: str = ""

    def __post_init__(self):
        if self.e < 1 or self.e % 2 == 0:
            raise ValueError("inertia order must be odd and positive")
        if len(self.d_list) != self.e // 2 + 1:
            raise ValueError("d_k list must cover 0 <= k <= floor(e/2)")
        if any(d < 0 for d in self.d_list):
            raise ValueError("component ranks must be nonnegative")


@dataclass(frozen=True)
class RamDatum:
    components: tuple[RamComponent, ...]


def d_from_ranks(comp: RamComponent) -> int:
    return sum(k * d for k, d in enumerate(comp.d_list))


def ramification_class(datum: RamDatum) -> list[tuple[str, int]]:
    """Per-component parities of d: the divisor class mod 2."""
    return [(c.label, d_from_ranks(c) % 2) for c in datum.components]


def _conjugate_set(H: FiniteGroup, g: Perm):
    gi = p_inv(g)
    return {p_mul(p_mul(g, h), gi) for h in H.elements}


@dataclass(frozen=True)
class SubquotientConfig:
    """A decomposition datum inside a finite group: subgroup H, decomposition
    group Delta with cyclic normal inertia I of odd order, residue degree f,
    and a designated generator of I fixing the character convention."""

    G: FiniteGroup
    H: FiniteGroup
    Delta: FiniteGroup
    I: FiniteGroup
    f: int
    generator: Perm
    label: str = ""

    def __post_init__(self):
        for sub in (self.H, self.Delta, self.I):
            if not is_subgroup(self.G, sub):
                raise ValueError("H, Delta, I must be subgroups of G")
        if not is_subgroup(self.Delta, self.I):
            raise ValueError("I must be contained in Delta")
        if not is_normal(self.Delta, self.I):
            raise ValueError("I must be normal in Delta")
        if self.I.order % 2 == 0:
            raise ValueError("inertia order must be odd")
        g = tuple(self.generator)
        if g not in self.I or p_order(g) != self.I.order:
            raise ValueError("designated generator must generate I")
        if self.f < 1 or quotient_is_cyclic(self.Delta, self.I) != self.f:
            raise ValueError("Delta/I must be cyclic of order f")

    @property
    def e(self) -> int:
        return self.I.order


def d_from_inertia_rep(e: int, M) -> list[int]:
    """Character-component ranks of a matrix of order dividing e, as ranks
    of the idempotent images over the cyclotomic field of order e.

    Returns d_k for 0 <= k <= floor(e/2); the full range is computed and
    the symmetry d_k = d_{e-k} is verified before truncation.
    """
    if e < 1 or e % 2 == 0:
        raise ValueError("order must be odd and positive")
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    Minv = linalg.inverse(M)
    powers = [linalg.identity(n)]
    for _ in range(e - 1):
        powers.append(linalg.mat_mul(powers[-1], Minv))
    if not linalg.mat_eq(linalg.mat_mul(powers[-1], Minv), powers[0]):
        raise ValueError("matrix order does not divide e")
    K = CyclotomicField(e)
    full = []
    for k in range(e):
        # e * idempotent: sum_u zeta^{ku} M^{-u}; scaling keeps the rank
        N = [[K.zero for _ in range(n)] for _ in range(n)]
        for u in range(e):
            z = K.zeta(k * u)
            P = powers[u]
            for r in range(n):
                for c in range(n):
                    if P[r][c]:
                        N[r][c] = N[r][c] + z * P[r][c]
        full.append(linalg.rank(N))
    for k in range(1, e):
        if full[k] != full[e - k]:
            raise AssertionError("character rank symmetry d_k = d_{e-k} failed")
    if sum(full) != n:
        raise AssertionError("character ranks do not add up to the module rank")
    return full[: e // 2 + 1]


@dataclass(frozen=True)
class DoubleCosetLocal:
    """Local numbers at one double coset: inertia split e = e'_i e_i and
    residue split f = f'_i f_i."""

    rep: Perm
    e_prime: int
    e_i: int
    f_prime: int
    f_i: int


def _local_data(cfg: SubquotientConfig) -> list[DoubleCosetLocal]:
    out = []
    e, f = cfg.e, cfg.f
    for rep, _size in double_cosets(cfg.G, cfg.Delta, cfg.H):
        conj = _conjugate_set(cfg.H, rep)
        e_prime = len(conj & set(cfg.I.elements))
        delta_cap = len(conj & set(cfg.Delta.elements))
        if e % e_prime or delta_cap % e_prime:
            raise ValueError("inconsistent double-coset intersection sizes")
        e_i = e // e_prime
        f_prime = delta_cap // e_prime
        if f % f_prime:
            raise ValueError("residue degree does not split over the double coset")
        f_i = f // f_prime
        if e_i * f_i * e_prime * f_prime != e * f:
            raise AssertionError("local e/f factorizations do not multiply up")
        out.append(DoubleCosetLocal(rep, e_prime, e_i, f_prime, f_i))
    total = sum(loc.e_i * loc.f_i for loc in out)
    if total != cfg.G.order // cfg.H.order:
        raise AssertionError("double-coset orbit sizes do not cover the coset space")
    return out


def example4_closed_form(cfg: SubquotientConfig) -> int:
    """sum over double cosets of e'_i f_i (e_i^2 - 1)/8."""
    total = 0
    for loc in _local_data(cfg):
        num = loc.e_prime * loc.f_i * (loc.e_i * loc.e_i - 1)
        if num % 8:
            raise AssertionError("(e_i^2 - 1) not divisible by 8 for odd e_i")
        total += num // 8
    return total


def example4_bruteforce(cfg: SubquotientConfig) -> int:
    """Same invariant from first principles: build the inertia permutation
    module blockwise (f_i copies of I/(I cap conj of H) per double coset),
    get the d_k by idempotent ranks, and return sum k d_k."""
    e = cfg.e
    d_list = [0] * (e // 2 + 1)
    for loc in _local_data(cfg):
        conj = _conjugate_set(cfg.H, loc.rep)
        Ii = FiniteGroup(conj & set(cfg.I.elements), cfg.G.degree)
        reps = cosets(cfg.I, Ii)
        if len(reps) != loc.e_i:
            raise AssertionError("inertia coset count disagrees with e_i")
        n = len(reps)
        M = [[Fraction(0)] * n for _ in range(n)]
        for j, r in enumerate(reps):
            i = coset_index(cfg.I, Ii, reps, p_mul(cfg.generator, r))
            M[i][j] = Fraction(1)
        block = d_from_inertia_rep(e, M)
        for k, d in enumerate(block):
            d_list[k] += loc.f_i * d
    comp = RamComponent(e, tuple(d_list), cfg.label)
    return d_from_ranks(comp)


def bruteforce_component(cfg: SubquotientConfig) -> RamComponent:
    """The d_k datum of the brute-force permutation module."""
    e = cfg.e
    d_list = [0] * (e // 2 + 1)
    for loc in _local_data(cfg):
        conj = _conjugate_set(cfg.H, loc.rep)
        Ii = FiniteGroup(conj & set(cfg.I.elements), cfg.G.degree)
        reps = cosets(cfg.I, Ii)
        n = len(reps)
        M = [[Fraction(0)] * n for _ in range(n)]
        for j, r in enumerate(reps):
            i = coset_index(cfg.I, Ii, reps, p_mul(cfg.generator, r))
            M[i][j] = Fraction(1)
        block = d_from_inertia_rep(e, M)
        for k, d in enumerate(block):
            d_list[k] += loc.f_i * d
    return RamComponent(e, tuple(d_list), cfg.label)


def final_congruence_check(cfgs: list[SubquotientConfig]) -> bool:
    """Per component, the brute-force parity of d must match the parity of
    sum_i f_i (e_i^2 - 1)/8; the odd factor e'_i never matters mod 2."""
    for cfg in cfgs:
        brute = d_from_ranks(bruteforce_component(cfg)) % 2
        dropped = sum(loc.f_i * (loc.e_i * loc.e_i - 1) // 8 for loc in _local_data(cfg)) % 2
        if brute != dropped:
            return False
    return True


def woods_hole_identity(e: int, exponent: int = 1) -> bool:
    """1/(1 - zeta) = -(1/e) sum_{k=1}^{e-1} k zeta^k, exactly, for the
    primitive e-th root zeta^exponent."""
    if e < 2:
        raise ValueError("order must be at least 2")
    if math.gcd(exponent, e) != 1:
        raise ValueError("exponent must give a primitive root")
    K = CyclotomicField(e)
    z = K.zeta(exponent)
    s = K.zero
    for k in range(1, e):
        s = s + k * K.zeta(exponent * k)
    return (K.one - z) * s * Fraction(-1, e) == K.one


def sweep_configs(max_order: int = 24, max_f: int = 3, max_e: int | None = None) -> list[SubquotientConfig]:
    """Deterministic enumeration of subquotient configs: all cyclic groups
    up to max_order and the odd dihedral groups D_3..D_11, with every
    (H, Delta, I) choice having odd cyclic inertia and f <= max_f."""
    out = []
    ambient = [FiniteGroup.cyclic(n) for n in range(2, max_order + 1)]
    ambient += [FiniteGroup.dihedral(m) for m in range(3, 12, 2) if 2 * m <= max_order]
    for gi, G in enumerate(ambient):
        subs = subgroups(G)
        name = f"G{gi}_o{G.order}"
        for I in subs:
            e = I.order
            if e % 2 == 0 or e < 3:
                continue
            if max_e is not None and e > max_e:
                continue
            gens = [g for g in I.elements if p_order(g) == e]
            if not gens:
                continue  # not cyclic
            gen = min(gens)
            for Delta in subs:
                if not is_subgroup(Delta, I) or not is_normal(Delta, I):
                    continue
                f = quotient_is_cyclic(Delta, I)
                if f is None or f > max_f:
                    continue
                for H in subs:
                    out.append(
                        SubquotientConfig(
                            G, H, Delta, I, f, gen,
                            label=f"{name}_e{e}_f{f}_H{H.order}_D{Delta.order}",
                        )
                    )
    return out
