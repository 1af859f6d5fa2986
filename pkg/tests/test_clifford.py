import random

from fractions import Fraction

import pytest

from symtwist import linalg
from symtwist.clifford import (
    CliffordAlgebra,
    NotInCliffordGroup,
    UnsupportedSpinorNormRegime,
    clifford_group_check,
    delta2_via_clifford,
    lift,
    r_map,
    reflection_factorize,
    reflection_matrix,
    sigma,
    spinor_norm,
)
from symtwist.arith import SquareClass, cup
from symtwist.quadform import QuadForm


def test_generator_relations():
    alg = CliffordAlgebra([3, 10])
    e1, e2 = alg.e(1), alg.e(2)
    assert e1 * e1 == alg.scalar(3)
    assert e2 * e2 == alg.scalar(10)
    assert e1 * e2 + e2 * e1 == alg.zero()


def test_vector_square_is_form_value():
    q = QuadForm.diagonal([2, -3, 5])
    alg = CliffordAlgebra([2, -3, 5])
    rng = random.Random(7)
    for _ in range(20):
        v = [Fraction(rng.randint(-4, 4)) for _ in range(3)]
        assert alg.vector(v) * alg.vector(v) == alg.scalar(q.value(v))


def test_sigma_is_an_antiautomorphism():
    alg = CliffordAlgebra([1, 2, -1])
    rng = random.Random(9)
    for _ in range(10):
        x = alg.vector([Fraction(rng.randint(-2, 2)) for _ in range(3)])
        y = alg.vector([Fraction(rng.randint(-2, 2)) for _ in range(3)])
        assert sigma(x * y) == sigma(y) * sigma(x)


def test_spinor_norm_values_and_multiplicativity():
    alg = CliffordAlgebra([2, 5])
    e1, e2 = alg.e(1), alg.e(2)
    assert spinor_norm(e1) == 2
    assert spinor_norm(e1 * e2) == 10
    assert spinor_norm(e1 * e2 * e1) == 20


def test_clifford_group_rejects_non_members():
    alg = CliffordAlgebra([1, 1])
    with pytest.raises(NotInCliffordGroup):
        clifford_group_check(alg.one() + alg.e(1))


def test_r_map_of_a_vector_is_its_reflection():
    q = QuadForm.diagonal([1, 1])
    alg = CliffordAlgebra([1, 1])
    M = r_map(alg.e(1), -1)
    assert linalg.mat_eq(
        [[x.as_rational() for x in row] for row in M],
        reflection_matrix(q, [1, 0]),
    )


def test_reflection_factorize_diagonal_and_skew():
    rng = random.Random(3)
    for gram in ([[1, 0], [0, 3]], [[2, 1], [1, 2]], [[1, 0, 0], [0, -1, 0], [0, 0, 2]]):
        q = QuadForm(gram)
        n = q.rank
        # random orthogonal built from reflections
        u = linalg.identity(n)
        for _ in range(3):
            while True:
                v = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
                if q.value(v):
                    break
            u = linalg.mat_mul(u, reflection_matrix(q, v))
        vecs = reflection_factorize(q, u)
        assert len(vecs) <= 2 * n
        prod = linalg.identity(n)
        for v in vecs:
            prod = linalg.mat_mul(prod, reflection_matrix(q, v))
        assert linalg.mat_eq(prod, u)


def test_lift_then_r_recovers_the_isometry():
    q = QuadForm.diagonal([1, 1, 2])
    alg = CliffordAlgebra([1, 1, 2])
    u = [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]
    lf = lift(q, u, alg)
    eps = 1 if lf.element.parity == "even" else -1
    M = r_map(lf.element, eps)
    assert linalg.mat_eq([[x.as_rational() for x in row] for row in M], u)


def test_delta2_quadratic_cases():
    # -I on <1,1> over Q(sqrt d) gives (d) cup (-1)
    got = delta2_via_clifford(QuadForm.identity(2), [3], [[[-1, 0], [0, -1]]])
    assert got == cup(SquareClass(3), SquareClass(-1))
    # a reflection gives the trivial class
    got = delta2_via_clifford(QuadForm.identity(2), [3], [[[-1, 0], [0, 1]]])
    assert got.is_trivial


def test_delta2_unsupported_regime_raises():
    with pytest.raises(UnsupportedSpinorNormRegime):
        delta2_via_clifford(QuadForm.diagonal([2, 1]), [5], [[[-1, 0], [0, 1]]])


def test_delta2_biquadratic_case():
    got = delta2_via_clifford(
        QuadForm.identity(2),
        [2, 3],
        [[[-1, 0], [0, -1]], [[-1, 0], [0, 1]]],
    )
    assert got == cup(SquareClass(2), SquareClass(-1)) + cup(SquareClass(3), SquareClass(-1))
