import pytest

from fractions import Fraction

from symtwist.groupalg import (
    FiniteGroup,
    OrthRep,
    cosets,
    coset_index,
    cycle_str,
    double_cosets,
    is_normal,
    p_order,
    parse_cycles,
    permutation_rep,
    quotient_is_cyclic,
    rep_direct_sum,
    subgroup_closure,
    subgroups,
    trivial_rep,
)
from symtwist.quadform import QuadForm


def test_cycle_parsing_roundtrip():
    g = parse_cycles("(1 2 3)(4 5)", 5)
    assert p_order(g) == 6
    assert parse_cycles(cycle_str(g), 5) == g
    assert parse_cycles("()", 3) == (0, 1, 2)


def test_group_constructors():
    assert FiniteGroup.cyclic(6).order == 6
    assert FiniteGroup.symmetric(3).order == 6
    assert FiniteGroup.dihedral(4).order == 8
    assert FiniteGroup.klein_four().order == 4


def test_closure_check_rejects_non_groups():
    with pytest.raises(ValueError):
        FiniteGroup([(0, 1, 2), (1, 2, 0)], 3)  # not closed: square of the 3-cycle missing


def test_subgroup_lattice_of_s3():
    S3 = FiniteGroup.symmetric(3)
    subs = subgroups(S3)
    assert sorted(h.order for h in subs) == [1, 2, 2, 2, 3, 6]
    A3 = next(h for h in subs if h.order == 3)
    assert is_normal(S3, A3)
    assert quotient_is_cyclic(S3, A3) == 2


def test_cosets_partition():
    S3 = FiniteGroup.symmetric(3)
    H = subgroup_closure(S3, [(1, 0, 2)])
    reps = cosets(S3, H)
    assert len(reps) == 3
    seen = set()
    for g in S3.elements:
        seen.add(coset_index(S3, H, reps, g))
    assert seen == {0, 1, 2}


def test_double_cosets_cover():
    S3 = FiniteGroup.symmetric(3)
    H = subgroup_closure(S3, [(1, 0, 2)])
    dcs = double_cosets(S3, H, H)
    assert sum(size for _, size in dcs) == S3.order


def test_orth_rep_validates_homomorphism():
    C2 = FiniteGroup.cyclic(2)
    q = QuadForm.identity(1)
    with pytest.raises(ValueError):
        OrthRep(C2, q, {C2.identity: [[Fraction(1)]], (1, 0): [[Fraction(2)]]})


def test_permutation_rep_is_orthogonal():
    S3 = FiniteGroup.symmetric(3)
    H = subgroup_closure(S3, [(1, 0, 2)])
    rep = permutation_rep(S3, H)
    assert rep.form.rank == 3
    for g in S3.elements:
        assert rep.form.is_orthogonal(rep(g))


def test_det_character_and_direct_sum():
    C2 = FiniteGroup.cyclic(2)
    q = QuadForm.identity(1)
    sgn = OrthRep.from_generator_images(C2, q, {(1, 0): [[Fraction(-1)]]})
    assert not sgn.det_is_trivial()
    both = rep_direct_sum(sgn, trivial_rep(C2, q))
    assert both.form.rank == 2
    assert both.det_character()[(1, 0)] == -1
