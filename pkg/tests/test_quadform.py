import random

from fractions import Fraction

import pytest

from symtwist import linalg
from symtwist.arith import SquareClass, cup, square_class
from symtwist.quadform import (
    Lagrangian,
    QuadForm,
    diagonalize,
    dt_class,
    invariants,
    is_isometric,
    is_metabolic,
    is_valid_lagrangian,
    negate,
    orth_sum,
    scale,
    verify_main_lemma,
)


def test_constructor_rejects_bad_grams():
    with pytest.raises(ValueError):
        QuadForm([[1, 2], [3, 1]])  # not symmetric
    with pytest.raises(ValueError):
        QuadForm([[1, 1], [1, 1]])  # degenerate


def test_diagonalize_congruence():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(1, 5)
        while True:
            g = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            for i in range(n):
                for j in range(i):
                    g[i][j] = g[j][i]
            if linalg.det([r[:] for r in g]):
                break
        q = QuadForm(g)
        diag, P = diagonalize(q)
        assert q.transform(P) == QuadForm.diagonal(diag)


def test_diagonalize_zero_diagonal():
    q = QuadForm([[0, 1], [1, 0]])
    diag, P = diagonalize(q)
    assert q.transform(P) == QuadForm.diagonal(diag)
    assert all(d for d in diag)


def test_invariants_basic():
    inv = invariants(QuadForm.diagonal([-1, -1]))
    assert inv.w1.rep == 1
    assert [str(v) for v in inv.w2.places()] == ["inf", "2"]
    assert inv.signature == (0, 2)


def test_invariant_congruence_stability():
    q = QuadForm.diagonal([2, -3, 5])
    P = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert invariants(q) == invariants(q.transform(P))


def test_hasse_dictionary():
    # hasse = w2 + (w1) cup (-1) on assorted forms
    for entries in ([1], [2, 3], [-1, 5, 6], [2, -2, 7, 10]):
        inv = invariants(QuadForm.diagonal(entries))
        assert inv.hasse == inv.w2 + cup(inv.w1, SquareClass(-1))


def test_is_isometric_classifies():
    # 2 = 1 + 1, so <2,2> ~ <1,1>
    assert is_isometric(QuadForm.diagonal([2, 2]), QuadForm.diagonal([1, 1]))
    assert not is_isometric(QuadForm.diagonal([1, 1]), QuadForm.diagonal([1, -1]))
    # same det class and signature, different Hasse sets
    assert not is_isometric(QuadForm.diagonal([2, 3]), QuadForm.diagonal([1, 6]))
    assert not is_isometric(QuadForm.diagonal([1, 7]), QuadForm.diagonal([1, 5]))


def test_scale_and_negate():
    q = QuadForm.diagonal([1, -2])
    assert invariants(scale(q, 4)) == invariants(q)
    assert invariants(negate(q)).signature == (1, 1)


def test_metabolic_decision_and_witness():
    res = is_metabolic(QuadForm.hyperbolic(2))
    assert res.metabolic and res.witness_found
    assert is_valid_lagrangian(QuadForm.hyperbolic(2), res.witness)
    assert not is_metabolic(QuadForm.identity(2)).metabolic
    assert not is_metabolic(QuadForm.diagonal([1, -2])).metabolic


def test_graph_lagrangian_of_q_minus_q():
    q = QuadForm.diagonal([2, -3, 5])
    m = orth_sum(q, negate(q))
    L = Lagrangian(tuple(
        tuple(Fraction(1) if t in (j, 3 + j) else Fraction(0) for t in range(6))
        for j in range(3)
    ))
    assert is_valid_lagrangian(m, L)
    assert verify_main_lemma(m, L)


def test_dt_class_periodicity():
    w1p, w2p = dt_class(2)
    assert w1p.rep == 1
    assert [str(v) for v in w2p.places()] == ["inf", "2"]
    assert dt_class(4)[1] == dt_class(0)[1]
    assert dt_class(1)[0] == square_class(-1)


def test_main_lemma_rejects_bad_lagrangian():
    q = QuadForm.hyperbolic(1)
    with pytest.raises(ValueError):
        verify_main_lemma(q, Lagrangian(((Fraction(1), Fraction(0)),)))
