"""Twisting forms by Galois algebras.

Builds the bundled torsor corpus, twists forms along representations and
checks the determinant product formula and the two computations of the
degree-two boundary class against each other.
"""

from fractions import Fraction

from symtwist import (
    OrthRep,
    QuadForm,
    TwistInput,
    delta2_via_clifford,
    delta2_via_twist,
    invariants,
    quadratic_torsor,
    standard_corpus,
    twist,
    verify_thm03_w1,
    w1_rep,
)
from symtwist.groupalg import FiniteGroup

print("== The corpus ==")
for A in standard_corpus():
    print(f"  {A.label:14} group order {A.group.order}")

print()
print("== A sign twist ==")
C2 = FiniteGroup.cyclic(2)
A = quadratic_torsor(5)
q = QuadForm.identity(1)
rep = OrthRep.from_generator_images(C2, q, {(1, 0): [[Fraction(-1)]]})
out = twist(TwistInput(q, rep, A))
print("twist of <1> by the sign action over Q(sqrt 5):", [[str(x) for x in r] for r in out.form.gram])
print("w1(rep) =", w1_rep(rep, A))
print("w1 product formula:", verify_thm03_w1(TwistInput(q, rep, A)))

print()
print("== delta2 two ways ==")
q2 = QuadForm.identity(2)
neg = OrthRep.from_generator_images(C2, q2, {(1, 0): [[-1, 0], [0, -1]]})
A3 = quadratic_torsor(3)
via_twist = delta2_via_twist(TwistInput(q2, neg, A3))
via_clifford = delta2_via_clifford(q2, [3], [[[-1, 0], [0, -1]]])
print("via twist:   ", via_twist)
print("via clifford:", via_clifford)
print("agree:", via_twist == via_clifford)
print()
print("twist invariants:", invariants(twist(TwistInput(q2, neg, A3)).form).as_record())
