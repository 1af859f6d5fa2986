import json

import pytest

from symtwist.galois import (
    biquadratic_torsor,
    cyclic_cubic_torsor,
    cyclotomic_torsor,
    field_torsor,
    fixed_subalgebra,
    load_corpus,
    quadratic_torsor,
    split_torsor,
    standard_corpus,
    trace_form,
)
from symtwist.groupalg import FiniteGroup, subgroups
from symtwist.quadform import QuadForm, invariants, is_isometric


def test_split_torsor_trace_form_is_identity():
    A = split_torsor(FiniteGroup.cyclic(3))
    assert trace_form(A) == QuadForm.identity(3)


def test_quadratic_torsor_trace_form():
    A = quadratic_torsor(5)
    assert trace_form(A) == QuadForm.diagonal([2, 10])
    # Q(i): trace form <2, -2>
    inv = invariants(trace_form(quadratic_torsor(-1)))
    assert inv.signature == (1, 1)
    assert inv.w1.rep == -1


def test_torsor_action_is_checked():
    # x -> x is not an order-2 automorphism matching the swap
    with pytest.raises(ValueError):
        field_torsor([-5, 0, 1], {(1, 0): [0, 1]}, FiniteGroup.cyclic(2))


def test_cubic_torsor_discriminant_is_square():
    A = cyclic_cubic_torsor()
    assert invariants(trace_form(A)).w1.rep == 1


def test_cyclotomic_torsor_invariants():
    # disc Q(zeta_5) = 125, totally complex of degree 4
    inv = invariants(trace_form(cyclotomic_torsor(5)))
    assert inv.w1.rep == 5
    assert inv.signature == (2, 2)
    inv7 = invariants(trace_form(cyclotomic_torsor(7)))
    assert inv7.w1.rep == -7
    assert inv7.signature == (3, 3)


def test_fixed_subalgebra_of_biquadratic():
    A = biquadratic_torsor(2, 3)
    for H in subgroups(A.group):
        sub, emb = fixed_subalgebra(A, H)
        assert sub.dim == A.dim // H.order
        if H.order == 4:
            assert sub.dim == 1
    # the subfield fixed by the sqrt3-fixing generator is Q(sqrt 3)
    H = next(
        h for h in subgroups(A.group)
        if h.order == 2 and (1, 0, 2, 3) in h
    )
    sub, _ = fixed_subalgebra(A, H)
    assert is_isometric(trace_form(sub), trace_form(quadratic_torsor(3)))


def test_standard_corpus_shape():
    corp = standard_corpus()
    labels = [A.label for A in corp]
    assert len(labels) == len(set(labels)) == 18
    assert "gauss" in labels and "zeta7" in labels
    for A in corp:
        assert A.dim == A.group.order


def test_load_corpus_matches_bundled(tmp_path):
    corp = load_corpus()
    assert [A.label for A in corp] == [A.label for A in standard_corpus()]
    for loaded, built in zip(corp, standard_corpus()):
        assert is_isometric(trace_form(loaded), trace_form(built))


def test_load_corpus_custom_file(tmp_path):
    doc = {
        "torsors": [
            {
                "label": "only_sqrt2",
                "poly": [-2, 0, 1],
                "group": {"degree": 2, "generators": {"g": "(1 2)"}},
                "auts": {"g": ["0", "-1"]},
            }
        ]
    }
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(doc))
    (A,) = load_corpus(path)
    assert A.label == "only_sqrt2"
    assert trace_form(A) == QuadForm.diagonal([2, 4])
