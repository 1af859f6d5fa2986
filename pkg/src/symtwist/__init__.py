"""Exact invariants of rational quadratic forms and their Galois twists.

Square classes and 2-torsion Brauer classes over Q, Clifford-algebra
cocycles, twists of symmetric bundles by Galois algebras, and the tame
ramification invariant, all in exact rational arithmetic.
"""

from .arith import (
    BrClass,
    Place,
    Rat,
    SquareClass,
    cup,
    hilbert,
    hilbert_ramified,
    square_class,
)
from .quadform import (
    FormInvariants,
    Lagrangian,
    QuadForm,
    diagonalize,
    dt_class,
    invariants,
    is_isometric,
    is_metabolic,
    orth_sum,
    verify_main_lemma,
)
from .clifford import (
    CliffordAlgebra,
    CliffordElement,
    UnsupportedSpinorNormRegime,
    delta2_via_clifford,
    lift,
    r_map,
    reflection_factorize,
    sigma,
    spinor_norm,
)
from .groupalg import FiniteGroup, OrthRep, permutation_rep, subgroups
from .galois import (
    EtaleAlgebra,
    GaloisAlgebra,
    fixed_subalgebra,
    load_corpus,
    quadratic_torsor,
    split_torsor,
    standard_corpus,
    trace_form,
)
from .twist import (
    TwistInput,
    TwistOutput,
    delta2_via_twist,
    metabolic_twist_check,
    product_form_check,
    twist,
    verify_prop27,
    verify_thm03_w1,
    w1_rep,
)
from .ramify import (
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

__version__ = "0.1.0"
