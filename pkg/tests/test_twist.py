import pytest

from fractions import Fraction

from symtwist.arith import SquareClass, cup
from symtwist.galois import quadratic_torsor, split_torsor, standard_corpus
from symtwist.groupalg import FiniteGroup, OrthRep, trivial_rep
from symtwist.quadform import Lagrangian, QuadForm, invariants, is_isometric
from symtwist.twist import (
    TwistInput,
    delta2_via_twist,
    lemma21_check,
    metabolic_twist_check,
    product_form_check,
    twist,
    twist_sum_functoriality,
    verify_thm03_w1,
    w1_rep,
)

C2 = FiniteGroup.cyclic(2)
FLIP = (1, 0)


def sign_rep_on(q: QuadForm, signs):
    n = q.rank
    M = [[Fraction(signs[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return OrthRep.from_generator_images(C2, q, {FLIP: M})


def test_trivial_rep_twist_is_the_form():
    q = QuadForm.diagonal([1, -2])
    for A in (split_torsor(C2), quadratic_torsor(7)):
        out = twist(TwistInput(q, trivial_rep(A.group, q), A))
        assert is_isometric(out.form, q)


def test_split_torsor_twist_is_the_form():
    q = QuadForm.identity(2)
    A = split_torsor(C2)
    rep = sign_rep_on(q, [-1, -1])
    assert is_isometric(twist(TwistInput(q, rep, A)).form, q)


def test_sign_twist_of_unit_form():
    q = QuadForm.identity(1)
    A = quadratic_torsor(5)
    out = twist(TwistInput(q, sign_rep_on(q, [-1]), A))
    assert out.form == QuadForm.diagonal([5])


def test_twist_input_group_mismatch_rejected():
    q = QuadForm.identity(1)
    A = split_torsor(FiniteGroup.cyclic(3))
    with pytest.raises(ValueError):
        TwistInput(q, sign_rep_on(q, [-1]), A)


def test_product_form_and_averaging_identities():
    q = QuadForm.diagonal([1, 3])
    A = quadratic_torsor(-2)
    inp = TwistInput(q, sign_rep_on(q, [-1, 1]), A)
    assert product_form_check(inp)
    assert lemma21_check(inp)


def test_w1_rep_values():
    q = QuadForm.identity(1)
    A = quadratic_torsor(6)
    assert w1_rep(trivial_rep(C2, q), A).rep == 1
    assert w1_rep(sign_rep_on(q, [-1]), A).rep == 6


def test_w1_product_formula_across_torsors():
    q = QuadForm.diagonal([1, 2])
    for d in (2, -3, 10):
        A = quadratic_torsor(d)
        for signs in ([-1, 1], [-1, -1], [1, 1]):
            assert verify_thm03_w1(TwistInput(q, sign_rep_on(q, signs), A))


def test_delta2_via_twist_values():
    q = QuadForm.identity(2)
    A = quadratic_torsor(3)
    assert delta2_via_twist(TwistInput(q, sign_rep_on(q, [-1, -1]), A)) == cup(
        SquareClass(3), SquareClass(-1)
    )
    assert delta2_via_twist(TwistInput(q, sign_rep_on(q, [-1, 1]), A)).is_trivial


def test_metabolic_twist():
    q = QuadForm.hyperbolic(1)
    A = quadratic_torsor(3)
    L = Lagrangian(((Fraction(1), Fraction(1)),))
    inp = TwistInput(q, sign_rep_on(q, [-1, -1]), A)
    assert metabolic_twist_check(inp, L)
    # a non-lagrangian is rejected
    with pytest.raises(ValueError):
        metabolic_twist_check(inp, Lagrangian(((Fraction(1), Fraction(0)),)))


def test_sum_functoriality():
    A = quadratic_torsor(5)
    q1, q2 = QuadForm.identity(1), QuadForm.diagonal([2])
    in1 = TwistInput(q1, sign_rep_on(q1, [-1]), A)
    in2 = TwistInput(q2, trivial_rep(C2, q2), A)
    assert twist_sum_functoriality(in1, in2)


def test_odd_order_group_preserves_w1():
    # odd-order orthogonal images have det +1, so w1 is unchanged
    for A in standard_corpus():
        if A.group.order % 2 == 0 or A.group.order > 3:
            continue
        q = QuadForm.identity(1)
        out = twist(TwistInput(q, trivial_rep(A.group, q), A))
        assert invariants(out.form).w1.rep == 1
