"""Invariants of rational quadratic forms.

Walks through square classes, Hilbert symbols, the ramification-set view of
2-torsion Brauer classes, and the classifying invariants of forms over Q.
"""

from symtwist import (
    QuadForm,
    SquareClass,
    cup,
    hilbert,
    invariants,
    is_isometric,
    is_metabolic,
)
from symtwist.arith import Place, REAL_PLACE

print("== Hilbert symbols ==")
print("(-1,-1) at inf:", hilbert(-1, -1, REAL_PLACE))
print("(-1,-1) at 2:  ", hilbert(-1, -1, Place(2)))
print("(-1,-1) at 3:  ", hilbert(-1, -1, Place(3)))
print("cup(-1, -1) as a ramification set:", cup(SquareClass(-1), SquareClass(-1)))

print()
print("== Form invariants ==")
for entries in ([1, 1], [-1, -1], [2, 3], [1, -1]):
    inv = invariants(QuadForm.diagonal(entries))
    print(f"<{entries}>: w1={inv.w1} w2={inv.w2} sig={inv.signature} hasse={inv.hasse}")

print()
print("== Classification (Hasse-Minkowski) ==")
print("<2,2> ~ <1,1>:", is_isometric(QuadForm.diagonal([2, 2]), QuadForm.identity(2)))
print("<2,3> ~ <1,6>:", is_isometric(QuadForm.diagonal([2, 3]), QuadForm.diagonal([1, 6])))

print()
print("== Metabolic forms ==")
res = is_metabolic(QuadForm.hyperbolic(2))
print("hyperbolic rank 4 metabolic:", res.metabolic)
print("lagrangian witness:", [tuple(map(str, v)) for v in res.witness.basis])
