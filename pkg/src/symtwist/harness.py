"""Deterministic verification suites over the torsor corpus.

Each suite builds labeled instances, runs the relevant identity checks and
returns a RunReport; the CLI and the acceptance tests both drive these
functions, so a failure seen in a report reproduces from the same label.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .arith import hilbert, Place, REAL_PLACE, square_class, cup
from .clifford import (
    CliffordAlgebra,
    UnsupportedSpinorNormRegime,
    delta2_via_clifford,
    lift,
    r_map,
    reflection_matrix,
    sigma,
    spinor_norm,
)
from .galois import GaloisAlgebra, standard_corpus
from .groupalg import FiniteGroup, OrthRep, is_normal, permutation_rep, rep_direct_sum, subgroups, trivial_rep
from .quadform import (
    Lagrangian,
    QuadForm,
    invariants,
    is_metabolic,
    negate,
    orth_sum,
    verify_main_lemma,
)
from .ramify import (
    SubquotientConfig,
    example4_bruteforce,
    example4_closed_form,
    final_congruence_check,
    sweep_configs,
    woods_hole_identity,
)
from .twist import (
    TwistInput,
    delta2_via_twist,
    lemma21_check,
    metabolic_twist_check,
    product_form_check,
    verify_prop27,
    verify_thm03_w1,
)


@dataclass(frozen=True)
class CheckResult:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class RunReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, label: str, ok: bool, detail: str = ""):
        self.checks.append(CheckResult(label, bool(ok), detail))

    def finish(self, t0: float) -> "RunReport":
        self.checks.sort(key=lambda c: c.label)
        self.seconds = time.time() - t0
        return self

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def count(self) -> int:
        return len(self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "count": self.count,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [
                {"label": c.label, "ok": c.ok, **({"detail": c.detail} if c.detail else {})}
                for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# place/symbol layer


def suite_arith(seed: int = 0, pairs: int = 500) -> RunReport:
    """Hilbert symbol bimultiplicativity, symmetry and reciprocity."""
    t0 = time.time()
    rep = RunReport("arith")
    rng = random.Random(seed)

    def nz(bound=10_000):
        v = 0
        while not v:
            v = rng.randint(-bound, bound)
        return v

    places = [REAL_PLACE] + [Place(p) for p in (2, 3, 5, 7, 11, 13)]
    ok_bi = ok_sym = ok_rec = True
    for _ in range(pairs):
        a, b, c = nz(), nz(), nz()
        v = rng.choice(places)
        if hilbert(a * c, b, v) != hilbert(a, b, v) * hilbert(c, b, v):
            ok_bi = False
        if hilbert(a, b, v) != hilbert(b, a, v):
            ok_sym = False
        # reciprocity: the global product over all ramified places is +1
        ram = {2, abs(a), abs(b)}
        checked = {REAL_PLACE}
        prod = hilbert(a, b, REAL_PLACE)
        for p in sorted({f for m in ram for f in _prime_factors(m)}):
            prod *= hilbert(a, b, Place(p))
            checked.add(Place(p))
        if prod != 1:
            ok_rec = False
    rep.add(f"bimultiplicative_{pairs}", ok_bi)
    rep.add(f"symmetric_{pairs}", ok_sym)
    rep.add(f"reciprocity_{pairs}", ok_rec)
    return rep.finish(t0)


def _prime_factors(m: int):
    from .arith import factor

    return set(factor(m)) if m > 1 else set()


# ---------------------------------------------------------------------------
# form invariants


def _random_form(rng: random.Random, rank: int) -> QuadForm:
    entries = [rng.choice([1, -1, 2, -2, 3, -3, 5, 6, Fraction(1, 2), Fraction(-3, 4)]) for _ in range(rank)]
    return QuadForm.diagonal(entries)


def _random_congruence(rng: random.Random, n: int):
    # small entries keep the squarefree parts of the transformed diagonal
    # well inside the factorization bound
    while True:
        P = [[Fraction(rng.randint(-1, 1)) for _ in range(n)] for _ in range(n)]
        if linalg.det([row[:] for row in P]):
            return P


def suite_quadform(seed: int = 0, forms: int = 200, max_rank: int = 6) -> RunReport:
    """Invariant stability under congruence and the Whitney sum formula."""
    t0 = time.time()
    rep = RunReport("quadform")
    rng = random.Random(seed)
    stable = True
    for _ in range(forms):
        q = _random_form(rng, rng.randint(1, max_rank))
        P = _random_congruence(rng, q.rank)
        if invariants(q) != invariants(q.transform(P)):
            stable = False
    rep.add(f"congruence_stability_{forms}", stable)
    whitney = True
    dictionary = True
    for _ in range(forms):
        q1 = _random_form(rng, rng.randint(1, 3))
        q2 = _random_form(rng, rng.randint(1, 3))
        i1, i2, i12 = invariants(q1), invariants(q2), invariants(orth_sum(q1, q2))
        if i12.w1 != i1.w1 * i2.w1:
            whitney = False
        if i12.w2 != i1.w2 + i2.w2 + cup(i1.w1, i2.w1):
            whitney = False
        if i12.signature != (i1.signature[0] + i2.signature[0], i1.signature[1] + i2.signature[1]):
            whitney = False
        # classical dictionary: hasse = w2 + (w1) cup (-1)
        if i12.hasse != i12.w2 + cup(i12.w1, square_class(-1)):
            dictionary = False
    rep.add(f"whitney_sum_{forms}", whitney)
    rep.add(f"hasse_dictionary_{forms}", dictionary)
    return rep.finish(t0)


# ---------------------------------------------------------------------------
# Clifford layer


def suite_clifford(seed: int = 0) -> RunReport:
    """Structural identities of the Clifford algebra at rank <= 3."""
    t0 = time.time()
    rep = RunReport("clifford")
    rng = random.Random(seed)
    entry_pool = [1, -1, 2, 3]
    diags = [[a] for a in entry_pool]
    diags += [[a, b] for a in entry_pool for b in entry_pool]
    diags += [[a, b, c] for a in entry_pool for b in entry_pool for c in [1, -1, 2]]
    dim_ok = square_ok = sigma_ok = norm_ok = lift_ok = parity_ok = True
    for diag in diags:
        n = len(diag)
        q = QuadForm.diagonal(diag)
        alg = CliffordAlgebra(diag)
        if len(alg.one().coeffs) != 1 or alg.n != n:
            dim_ok = False
        # v^2 = q(v) for random vectors
        for _ in range(3):
            v = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
            sq = alg.vector(v) * alg.vector(v)
            if sq != alg.scalar(q.value(v)):
                square_ok = False
        # sigma reverses: sign (-1)^{k(k-1)/2} on grade-k monomials
        for mask in range(1 << n):
            k = bin(mask).count("1")
            x = alg.one()
            for i in range(n):
                if mask >> i & 1:
                    x = x * alg.e(i + 1)
            want = x if (k * (k - 1) // 2) % 2 == 0 else -x
            if sigma(x) != want:
                sigma_ok = False
        # N multiplicativity on products of anisotropic vectors
        vecs = []
        while len(vecs) < 2:
            v = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
            if q.value(v):
                vecs.append(v)
        x, y = alg.vector(vecs[0]), alg.vector(vecs[1])
        if spinor_norm(x * y) != spinor_norm(x) * spinor_norm(y):
            norm_ok = False
        # r(lift(u)) recovers u, for reflections and their products
        mats = [reflection_matrix(q, vecs[0]), linalg.mat_mul(reflection_matrix(q, vecs[0]), reflection_matrix(q, vecs[1]))]
        mats.append([[Fraction(-1) if i == j else Fraction(0) for j in range(n)] for i in range(n)])
        for u in mats:
            lf = lift(q, u, alg)
            eps = 1 if lf.element.parity == "even" else -1
            if not linalg.mat_eq(r_map(lf.element, eps), u):
                lift_ok = False
        # parity sign law: v -> eps x v x^{-1} maps V to V orthogonally
        xg = x * y if rng.random() < 0.5 else x
        eps = 1 if xg.parity == "even" else -1
        M = [
            [c.as_rational() if hasattr(c, "as_rational") else c for c in row]
            for row in r_map(xg, eps)
        ]
        if not q.is_orthogonal(M):
            parity_ok = False
    rep.add(f"dimension_{len(diags)}", dim_ok)
    rep.add(f"vector_square_{len(diags)}", square_ok)
    rep.add(f"sigma_sign_law_{len(diags)}", sigma_ok)
    rep.add(f"norm_multiplicative_{len(diags)}", norm_ok)
    rep.add(f"r_after_lift_{len(diags)}", lift_ok)
    rep.add(f"parity_sign_law_{len(diags)}", parity_ok)
    return rep.finish(t0)


# ---------------------------------------------------------------------------
# corpus helpers


_ACTIVE_CORPUS: list[GaloisAlgebra] | None = None


def set_corpus(torsors: list[GaloisAlgebra] | None):
    """Override the torsor corpus used by the suites (None restores the
    bundled one)."""
    global _ACTIVE_CORPUS
    _ACTIVE_CORPUS = list(torsors) if torsors is not None else None


def active_corpus() -> list[GaloisAlgebra]:
    return list(_ACTIVE_CORPUS) if _ACTIVE_CORPUS is not None else standard_corpus()


def _corpus_by_label() -> dict[str, GaloisAlgebra]:
    return {A.label: A for A in active_corpus()}


def _flip_generator(A: GaloisAlgebra, d: int):
    """The group element acting as -1 on sqrt(d) and +1 on the complementary
    quadratic subextension (or the unique nontrivial element for C2)."""
    if A.group.order == 2:
        return next(g for g in A.group.elements if g != A.group.identity)
    target = square_class(d).rep
    for g in A.group.elements:
        if g == A.group.identity:
            continue
        M = A.act(g)
        idm = linalg.identity(A.dim)
        rows = [[M[r][c] + idm[r][c] for c in range(A.dim)] for r in range(A.dim)]
        for z in linalg.kernel_basis(rows, one=Fraction(1)):
            s = A.is_scalar(A.mult_vec(list(z), list(z)))
            if s is not None and s and square_class(s).rep == target:
                # g negates sqrt(d); also require it to fix the other root
                fix_rows = [[M[r][c] - idm[r][c] for c in range(A.dim)] for r in range(A.dim)]
                for w in linalg.kernel_basis(fix_rows, one=Fraction(1)):
                    sw = A.is_scalar(A.mult_vec(list(w), list(w)))
                    if sw is not None and sw and square_class(sw).rep != 1:
                        return g
    raise ValueError(f"no generator flips sqrt({d}) in {A.label}")


def _neg(n):
    return [[Fraction(-1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def _signs(pattern):
    n = len(pattern)
    return [[Fraction(pattern[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


QUADRATIC_DS = (-1, 2, -2, 3, -3, 5, 6, -6, 7, -7, 10)


def cross_validation_instances():
    """Labeled (TwistInput, ds, clifford generator images) triples spanning
    ranks 1-4 and both quadratic and biquadratic Galois quotients."""
    corpus = _corpus_by_label()
    out = []
    for d in QUADRATIC_DS:
        label = "gauss" if d == -1 else f"sqrt{d}"
        A = corpus.get(label)
        if A is None:
            from .galois import quadratic_torsor

            A = quadratic_torsor(d, label=label)
        g = _flip_generator(A, d)
        cases = [
            ("r1_neg", QuadForm.identity(1), _signs([-1])),
            ("r2_neg", QuadForm.identity(2), _neg(2)),
            ("r2_refl", QuadForm.diagonal([1, d]), _signs([1, -1])),
            ("r3_neg", QuadForm.identity(3), _neg(3)),
            ("r3_pi", QuadForm.diagonal([1, 1, d]), _signs([-1, -1, 1])),
            ("r4_pi", QuadForm.identity(4), _signs([-1, -1, 1, 1])),
            ("r2_skew", QuadForm([[2, 1], [1, 2]]), _neg(2)),
        ]
        for tag, E, M in cases:
            rep = OrthRep.from_generator_images(A.group, E, {g: M})
            out.append((f"{label}_{tag}", TwistInput(E, rep, A), [d], [M]))
    for (a, b) in ((2, 3), (-1, 2), (-3, 5)):
        A = corpus[f"biquad_{a}_{b}"]
        ga_, gb = _flip_generator(A, a), _flip_generator(A, b)
        cases = [
            ("r2_negrefl", QuadForm.identity(2), _neg(2), _signs([-1, 1])),
            ("r2_reflrefl", QuadForm.diagonal([1, a]), _signs([-1, 1]), _signs([1, -1])),
            ("r4_blocks", QuadForm.identity(4), _signs([-1, -1, 1, 1]), _signs([-1, 1, -1, 1])),
        ]
        for tag, E, Ma, Mb in cases:
            rep = OrthRep.from_generator_images(A.group, E, {ga_: Ma, gb: Mb})
            out.append((f"biquad_{a}_{b}_{tag}", TwistInput(E, rep, A), [a, b], [Ma, Mb]))
    return out


def suite_cross_validation(min_supported: int = 30) -> RunReport:
    """delta2 via Clifford cocycles against delta2 via the twist, exactly."""
    t0 = time.time()
    rep = RunReport("cross_validation")
    supported = 0
    for label, inp, ds, mats in cross_validation_instances():
        try:
            via_clifford = delta2_via_clifford(inp.E, ds, mats)
        except UnsupportedSpinorNormRegime:
            continue
        supported += 1
        via_twist = delta2_via_twist(inp)
        rep.add(
            label,
            via_clifford == via_twist,
            f"clifford={via_clifford} twist={via_twist}",
        )
    rep.add(f"supported_count_at_least_{min_supported}", supported >= min_supported, str(supported))
    return rep.finish(t0)


def thm03_instances():
    """Labeled twist inputs across the whole corpus and representation
    generators: trivial, order-two characters, reflections, permutation
    representations and a direct sum."""
    out = []
    for A in active_corpus():
        G = A.group
        out.append((f"{A.label}_trivial", TwistInput(QuadForm.identity(1), trivial_rep(G, QuadForm.identity(1)), A)))
        chars = _order_two_characters(G)
        for ci, chi in enumerate(chars):
            sgn = OrthRep(G, QuadForm.identity(1), {g: [[Fraction(chi[g])]] for g in G.elements})
            out.append((f"{A.label}_char{ci}", TwistInput(sgn.form, sgn, A)))
            refl = OrthRep(
                G,
                QuadForm.diagonal([1, 2]),
                {g: _signs([chi[g], 1]) for g in G.elements},
            )
            out.append((f"{A.label}_char{ci}_refl", TwistInput(refl.form, refl, A)))
            neg = OrthRep(G, QuadForm.identity(2), {g: _signs([chi[g], chi[g]]) for g in G.elements})
            out.append((f"{A.label}_char{ci}_neg", TwistInput(neg.form, neg, A)))
        for hi, H in enumerate(subgroups(G)):
            pr = permutation_rep(G, H)
            out.append((f"{A.label}_perm{hi}_i{G.order // H.order}", TwistInput(pr.form, pr, A)))
        if chars:
            sgn = OrthRep(G, QuadForm.identity(1), {g: [[Fraction(chars[0][g])]] for g in G.elements})
            both = rep_direct_sum(sgn, trivial_rep(G, QuadForm.identity(1)))
            out.append((f"{A.label}_sum", TwistInput(both.form, both, A)))
    return out


def _order_two_characters(G: FiniteGroup):
    chars = []
    for N in subgroups(G):
        if N.order * 2 == G.order and is_normal(G, N):
            chars.append({g: 1 if g in N else -1 for g in G.elements})
    return chars


def suite_thm03() -> RunReport:
    """w1(twist) = w1(E) * w1(rep) over the full corpus."""
    t0 = time.time()
    rep = RunReport("thm03")
    for label, inp in thm03_instances():
        rep.add(label, verify_thm03_w1(inp))
    return rep.finish(t0)


def prop27_instances(max_group_order: int = 12):
    out = []
    for A in active_corpus():
        if A.group.order > max_group_order:
            continue
        for hi, H in enumerate(subgroups(A.group)):
            out.append((f"{A.label}_H{hi}_o{H.order}", A.group, H, A))
    return out


def suite_prop27(max_group_order: int = 12) -> RunReport:
    """Permutation twist vs trace form of the fixed subalgebra."""
    t0 = time.time()
    rep = RunReport("prop27")
    for label, G, H, A in prop27_instances(max_group_order):
        rep.add(label, verify_prop27(G, H, A))
    return rep.finish(t0)


def suite_product_lemma() -> RunReport:
    """Unaveraged product form identity and the averaging-operator identity
    on every twist instance used by the other corpus suites."""
    t0 = time.time()
    rep = RunReport("product_lemma")
    seen = set()
    instances = [(lbl, inp) for lbl, inp, _, _ in cross_validation_instances()]
    instances += thm03_instances()
    for label, G, H, A in prop27_instances():
        pr = permutation_rep(G, H)
        instances.append((f"prop27_{label}", TwistInput(pr.form, pr, A)))
    for label, inp in instances:
        if label in seen:
            continue
        seen.add(label)
        rep.add(f"{label}_product", product_form_check(inp))
        rep.add(f"{label}_averaging", lemma21_check(inp))
    return rep.finish(t0)


def metabolic_instances(seed: int = 0, count: int = 20):
    """Twist inputs whose form is metabolic with a representation-invariant
    lagrangian: (q' + -q') with a sign-diagonal action on both halves."""
    rng = random.Random(seed)
    corpus = _corpus_by_label()
    torsors = [corpus[l] for l in ("sqrt2", "sqrt-3", "sqrt5", "gauss", "biquad_2_3")]
    out = []
    i = 0
    while len(out) < count:
        A = torsors[i % len(torsors)]
        i += 1
        k = rng.randint(1, 3)
        qp = QuadForm.diagonal([rng.choice([1, -1, 2, -2, 3, 5]) for _ in range(k)])
        E = orth_sum(qp, negate(qp))
        signs = [rng.choice([1, -1]) for _ in range(k)]
        L = Lagrangian(
            tuple(
                tuple(Fraction(1) if t in (j, k + j) else Fraction(0) for t in range(2 * k))
                for j in range(k)
            )
        )
        gen_imgs = {}
        for g in A.group.elements:
            if g == A.group.identity:
                continue
            flip = rng.choice([signs, [1] * k]) if A.group.order > 2 else signs
            gen_imgs[g] = _signs(list(flip) + list(flip))
        try:
            rep = OrthRep.from_generator_images(A.group, E, gen_imgs)
        except ValueError:
            continue
        out.append((f"met_{len(out)}_{A.label}_k{k}", TwistInput(E, rep, A), L))
    return out


def suite_metabolic(seed: int = 0) -> RunReport:
    """Total invariant of metabolic forms equals the half-rank d_t class,
    and twists of invariant-lagrangian instances stay metabolic."""
    t0 = time.time()
    rep = RunReport("metabolic")
    rng = random.Random(seed)
    for trial in range(12):
        k = rng.randint(1, 4)
        qp = QuadForm.diagonal([rng.choice([1, -1, 2, -2, 3, 5, -6]) for _ in range(k)])
        q = orth_sum(qp, negate(qp))
        L = Lagrangian(
            tuple(
                tuple(Fraction(1) if t in (j, k + j) else Fraction(0) for t in range(2 * k))
                for j in range(k)
            )
        )
        rep.add(f"main_lemma_{trial}_r{2 * k}", verify_main_lemma(q, L))
    for k in (1, 2):
        res = is_metabolic(QuadForm.hyperbolic(k))
        rep.add(
            f"main_lemma_hyp_r{2 * k}",
            res.metabolic and res.witness_found and verify_main_lemma(QuadForm.hyperbolic(k), res.witness),
        )
    for label, inp, L in metabolic_instances(seed):
        rep.add(label, metabolic_twist_check(inp, L))
    return rep.finish(t0)


def suite_ramify(max_order: int = 24, max_f: int = 3) -> RunReport:
    """Closed form vs brute force over the exhaustive subquotient sweep,
    the mod-2 congruence, and the base C3 value."""
    t0 = time.time()
    rep = RunReport("ramify")
    cfgs = sweep_configs(max_order, max_f)
    rep.add(f"config_count_at_least_100", len(cfgs) >= 100, str(len(cfgs)))
    for cfg in cfgs:
        a, b = example4_closed_form(cfg), example4_bruteforce(cfg)
        rep.add(cfg.label, a == b, f"closed={a} brute={b}")
    rep.add("final_congruence", final_congruence_check(cfgs))
    C3 = FiniteGroup.cyclic(3)
    triv = FiniteGroup.from_generators([C3.identity], 3)
    base = SubquotientConfig(C3, triv, C3, C3, 1, (1, 2, 0), label="c3_base")
    rep.add("c3_value_is_1", example4_closed_form(base) == 1 == example4_bruteforce(base))
    return rep.finish(t0)


def suite_woods_hole(max_e: int = 30) -> RunReport:
    t0 = time.time()
    rep = RunReport("woods_hole")
    import math

    for e in range(2, max_e + 1):
        ok = all(woods_hole_identity(e, x) for x in range(1, e) if math.gcd(x, e) == 1)
        rep.add(f"e{e:02d}", ok)
    return rep.finish(t0)


def suite_etale(seed: int = 0) -> list[RunReport]:
    return [
        suite_cross_validation(),
        suite_thm03(),
        suite_prop27(),
        suite_product_lemma(),
        suite_metabolic(seed),
    ]


SUITES = ("arith", "quadform", "clifford", "etale", "ramify", "all")


def run_suites(name: str, seed: int = 0, max_rank: int = 6, max_group_order: int = 12) -> list[RunReport]:
    if name == "arith":
        return [suite_arith(seed)]
    if name == "quadform":
        return [suite_quadform(seed, max_rank=max_rank)]
    if name == "clifford":
        return [suite_clifford(seed)]
    if name == "etale":
        return [
            suite_cross_validation(),
            suite_thm03(),
            suite_prop27(max_group_order),
            suite_product_lemma(),
            suite_metabolic(seed),
        ]
    if name == "ramify":
        return [suite_ramify(), suite_woods_hole()]
    if name == "all":
        return (
            [suite_arith(seed), suite_quadform(seed, max_rank=max_rank), suite_clifford(seed)]
            + run_suites("etale", seed, max_rank, max_group_order)
            + [suite_ramify(), suite_woods_hole()]
        )
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
