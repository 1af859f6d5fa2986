"""The combinatorial ramification invariant.

Computes the invariant for cyclic subquotient configurations along both
the double-coset closed form and the idempotent-rank brute force, and
verifies the Woods-Hole identity in a cyclotomic field.
"""

from symtwist import (
    FiniteGroup,
    SubquotientConfig,
    d_from_inertia_rep,
    example4_bruteforce,
    example4_closed_form,
    woods_hole_identity,
)
from symtwist.groupalg import subgroup_closure, subgroups

print("== C3 base case ==")
C3 = FiniteGroup.cyclic(3)
triv = subgroup_closure(C3, [C3.identity])
cfg = SubquotientConfig(C3, triv, C3, C3, 1, (1, 2, 0))
print("closed form:", example4_closed_form(cfg))
print("brute force:", example4_bruteforce(cfg))

print()
print("== Character ranks of the regular C3 module ==")
cyc = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
print("d_k over Q(zeta_3):", d_from_inertia_rep(3, cyc))

print()
print("== C15 with a C3 subgroup ==")
C15 = FiniteGroup.cyclic(15)
H3 = next(h for h in subgroups(C15) if h.order == 3)
gen = tuple((i + 1) % 15 for i in range(15))
cfg15 = SubquotientConfig(C15, H3, C15, C15, 1, gen)
print("closed form:", example4_closed_form(cfg15))
print("brute force:", example4_bruteforce(cfg15))

print()
print("== Woods-Hole identity ==")
for e in (2, 3, 7, 12):
    print(f"e={e}:", woods_hole_identity(e, 1))
