import math

import pytest

from symtwist.groupalg import FiniteGroup, subgroup_closure, subgroups
from symtwist.ramify import (
    RamComponent,
    RamDatum,
    SubquotientConfig,
    d_from_inertia_rep,
    d_from_ranks,
    example4_bruteforce,
    example4_closed_form,
    final_congruence_check,
    ramification_class,
    sweep_configs,
    woods_hole_identity,
)

C3 = FiniteGroup.cyclic(3)
TRIV3 = subgroup_closure(C3, [C3.identity])
GEN3 = (1, 2, 0)


def cyclic_cfg(n, h_order=1, label=""):
    G = FiniteGroup.cyclic(n)
    H = next(h for h in subgroups(G) if h.order == h_order)
    gen = tuple((i + 1) % n for i in range(n))
    return SubquotientConfig(G, H, G, G, 1, gen, label=label)


def test_d_from_ranks():
    assert d_from_ranks(RamComponent(3, (1, 1))) == 1
    assert d_from_ranks(RamComponent(1, (4,))) == 0
    assert d_from_ranks(RamComponent(5, (2, 0, 3))) == 6


def test_component_validation():
    with pytest.raises(ValueError):
        RamComponent(4, (1, 1, 1))  # even order
    with pytest.raises(ValueError):
        RamComponent(5, (1, 1))  # wrong length


def test_ramification_class_parities():
    datum = RamDatum((RamComponent(3, (1, 1), "b1"), RamComponent(5, (0, 2, 2), "b2")))
    assert ramification_class(datum) == [("b1", 1), ("b2", 0)]


def test_d_from_inertia_rep_identity_and_cycle():
    assert d_from_inertia_rep(3, [[1, 0], [0, 1]]) == [2, 0]
    cyc = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert d_from_inertia_rep(3, cyc) == [1, 1]


def test_d_from_inertia_rep_rejects_order_mismatch():
    with pytest.raises(ValueError):
        d_from_inertia_rep(3, [[0, 1], [1, 1]])  # order does not divide 3


def test_config_validation():
    with pytest.raises(ValueError):
        SubquotientConfig(C3, TRIV3, C3, C3, 2, GEN3)  # f mismatch
    C4 = FiniteGroup.cyclic(4)
    t4 = subgroup_closure(C4, [C4.identity])
    with pytest.raises(ValueError):
        SubquotientConfig(C4, t4, C4, C4, 1, (1, 2, 3, 0))  # even inertia


def test_c3_base_value():
    cfg = SubquotientConfig(C3, TRIV3, C3, C3, 1, GEN3)
    assert example4_closed_form(cfg) == 1
    assert example4_bruteforce(cfg) == 1


def test_c9_and_c15_values():
    assert example4_closed_form(cyclic_cfg(9)) == 10
    assert example4_bruteforce(cyclic_cfg(9)) == 10
    cfg = cyclic_cfg(15, h_order=3)
    assert example4_closed_form(cfg) == 9
    assert example4_bruteforce(cfg) == 9


def test_h_equals_g_gives_zero():
    G = FiniteGroup.cyclic(9)
    gen = tuple((i + 1) % 9 for i in range(9))
    cfg = SubquotientConfig(G, G, G, G, 1, gen)
    assert example4_closed_form(cfg) == 0
    assert example4_bruteforce(cfg) == 0


def test_nontrivial_residue_degree():
    # C6 with I = C3, Delta = C6, f = 2
    G = FiniteGroup.cyclic(6)
    I = next(h for h in subgroups(G) if h.order == 3)
    H = subgroup_closure(G, [G.identity])
    gen = min(g for g in I.elements if g != G.identity)
    cfg = SubquotientConfig(G, H, G, I, 2, gen)
    assert example4_closed_form(cfg) == example4_bruteforce(cfg)


def test_final_congruence():
    cfgs = [cyclic_cfg(3), cyclic_cfg(9), cyclic_cfg(15, 3)]
    assert final_congruence_check(cfgs)


def test_sweep_is_large_and_deterministic():
    cfgs = sweep_configs(12, 2)
    again = sweep_configs(12, 2)
    assert [c.label for c in cfgs] == [c.label for c in again]
    assert len(cfgs) >= 20


def test_woods_hole_small_orders():
    assert woods_hole_identity(2, 1)
    assert woods_hole_identity(3, 1)
    for x in range(1, 7):
        if math.gcd(x, 7) == 1:
            assert woods_hole_identity(7, x)
    with pytest.raises(ValueError):
        woods_hole_identity(6, 2)  # not coprime
