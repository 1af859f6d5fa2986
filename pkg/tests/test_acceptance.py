"""Acceptance suite: ten property checks at desk scale, each with a stated
wall-clock budget.  Every test prints a PASS/FAIL line so the run doubles
as a report."""

from symtwist import harness


def report(name, rep, budget):
    status = "PASS" if rep.passed and rep.seconds < budget else "FAIL"
    print(f"{status} {name}: {rep.count} checks in {rep.seconds:.2f}s (budget {budget}s)")
    for c in rep.failures():
        print(f"     failing: {c.label} {c.detail}")
    assert rep.passed, f"{name}: {len(rep.failures())} failing checks"
    assert rep.seconds < budget, f"{name}: exceeded {budget}s"


def test_criterion_01_hilbert_layer():
    rep = harness.suite_arith(seed=0, pairs=500)
    report("criterion 1 (hilbert symbols, 500 pairs)", rep, 5)


def test_criterion_02_invariant_stability():
    rep = harness.suite_quadform(seed=0, forms=200)
    report("criterion 2 (invariant stability, 200 forms)", rep, 30)


def test_criterion_03_clifford_suite():
    rep = harness.suite_clifford(seed=0)
    report("criterion 3 (clifford identities, rank <= 3)", rep, 30)


def test_criterion_04_delta2_cross_validation():
    rep = harness.suite_cross_validation(min_supported=30)
    report("criterion 4 (delta2 clifford vs twist)", rep, 120)


def test_criterion_05_w1_product_formula():
    rep = harness.suite_thm03()
    report("criterion 5 (w1 product formula, full corpus)", rep, 120)


def test_criterion_06_permutation_twist_vs_trace_form():
    rep = harness.suite_prop27(max_group_order=12)
    report("criterion 6 (permutation twist = fixed trace form)", rep, 180)


def test_criterion_07_product_and_averaging_identities():
    rep = harness.suite_product_lemma()
    report("criterion 7 (product form + averaging identities)", rep, 300)


def test_criterion_08_metabolic_forms():
    rep = harness.suite_metabolic(seed=0)
    report("criterion 8 (metabolic total invariant + twists)", rep, 60)


def test_criterion_09_ramification_sweep():
    rep = harness.suite_ramify(max_order=24, max_f=3)
    report("criterion 9 (ramification double-path sweep)", rep, 300)


def test_criterion_10_woods_hole():
    rep = harness.suite_woods_hole(max_e=30)
    report("criterion 10 (woods-hole identity, e <= 30)", rep, 10)
