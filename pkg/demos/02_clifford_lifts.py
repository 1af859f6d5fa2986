"""Clifford algebras and lifting isometries.

Builds C(q) for a diagonal form, factors an isometry into reflections,
lifts it to the Clifford group and reads off its spinor norm; ends with
the boundary class of a Galois action computed from the lift cocycle.
"""

from symtwist import (
    CliffordAlgebra,
    QuadForm,
    delta2_via_clifford,
    lift,
    r_map,
    reflection_factorize,
    sigma,
    spinor_norm,
)

q = QuadForm.diagonal([2, 5])
alg = CliffordAlgebra([2, 5])
e1, e2 = alg.e(1), alg.e(2)

print("== Generator relations ==")
print("e1^2 =", e1 * e1)
print("e1 e2 + e2 e1 =", e1 * e2 + e2 * e1)
print("sigma(e1 e2) =", sigma(e1 * e2))
print("N(e1 e2) =", spinor_norm(e1 * e2))

print()
print("== Lifting -I ==")
u = [[-1, 0], [0, -1]]
vecs = reflection_factorize(q, u)
print("reflection vectors:", [[str(c) for c in v] for v in vecs])
lf = lift(q, u, alg)
print("lift:", lf.element, " spinor norm:", lf.norm, " class:", lf.norm_class)
eps = 1 if lf.element.parity == "even" else -1
back = [[c.as_rational() for c in row] for row in r_map(lf.element, eps)]
print("r(lift) recovers u:", back == [[-1, 0], [0, -1]])

print()
print("== Boundary class of a Galois action ==")
# Gal(Q(sqrt 3)/Q) acting by -I on <1,1>
cls = delta2_via_clifford(QuadForm.identity(2), [3], [[[-1, 0], [0, -1]]])
print("delta2(-I over Q(sqrt 3)) =", cls)
