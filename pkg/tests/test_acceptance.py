"""Acceptance gate: every criterion below runs at its stated (exact) tolerance
and prints one pass/fail line.  The whole module must finish well under a
minute on the exact backend."""

from fractions import Fraction

from fqg import selftest
from fqg.classical import (check_cyclic_identity, check_dual_group_theorem,
                           check_dualact_consequences, check_magic_unitary,
                           check_order_properties, check_pointwise_relations,
                           enumerate_automorphisms,
                           enumerate_automorphisms_brute, extract_matrix,
                           universal_classical_family)
from fqg.constructors import check_fundamental_examples
from fqg.fixtures import sign_twisted_dual_family, translation_family
from fqg.fourier import check_iteration_lemma, dual_pair, verify_fourier_identities
from fqg.groups import CATALOG, named_group
from fqg.hopf import check_haar_antipode_identity, verify_quantum_group
from fqg.linalg import LinearMap
from fqg.qfamily import (check_action, compose, double_hat_formula_matches,
                         hat, is_automorphism_family, slice_commutative,
                         verify_dual_equivalences)
from fqg.scalar import scalar


def _announce(number, label, ok):
    print("ACCEPTANCE %02d %-38s %s" % (number, label, "PASS" if ok else "FAIL"))
    assert ok, "criterion %d (%s) failed" % (number, label)


def test_criterion_01_hopf_axioms():
    ok = True
    for name in CATALOG:
        for kind in ("fun", "grp"):
            qg = selftest.catalog_quantum_group(name, kind)
            rep = verify_quantum_group(qg)
            ok = ok and rep.passed
            ok = ok and qg.haar_of_eta() == scalar(Fraction(1, qg.dim))
    _announce(1, "hopf axioms + haar element value", ok)


def test_criterion_02_fourier_identities():
    ok = True
    for name in CATALOG:
        for kind in ("fun", "grp"):
            qg = selftest.catalog_quantum_group(name, kind)
            pair = dual_pair(qg)
            ok = ok and verify_fourier_identities(pair).passed
            ok = ok and check_haar_antipode_identity(qg).passed
            ok = ok and check_iteration_lemma(pair).passed
            once = pair.fourier_dual.compose(pair.fourier)
            ok = ok and once == qg.antipode.scale(scalar(Fraction(1, qg.dim)))
    _announce(2, "fourier identities + iteration", ok)


def test_criterion_03_fundamental_examples():
    ok = all(check_fundamental_examples(named_group(name)).passed
             for name in CATALOG)
    _announce(3, "fundamental examples + hopf isomorphism", ok)


def test_criterion_04_automorphism_oracle():
    ok = True
    for name, expected in selftest.AUT_ORDERS.items():
        group = named_group(name)
        auts = enumerate_automorphisms(group)
        ok = ok and len(auts) == expected
        if group.order <= 8:
            ok = ok and enumerate_automorphisms_brute(group) == auts
    _announce(4, "automorphism counts vs brute force", ok)


def test_criterion_05_universal_families():
    ok = True
    one = scalar(1)
    for name in CATALOG:
        group = named_group(name)
        fam = universal_classical_family(group)
        verdict, _ = is_automorphism_family(fam)
        ok = ok and verdict
        ok = ok and check_action(fam).passed
        matrix = extract_matrix(fam)
        ok = ok and check_magic_unitary(matrix).passed
        ok = ok and check_dualact_consequences(matrix).passed
        ok = ok and check_order_properties(matrix).passed
        slices = slice_commutative(fam)
        auts = enumerate_automorphisms(group)
        mats = [LinearMap(group.order, group.order,
                          [{psi[y]: one} for y in range(group.order)])
                for psi in auts]
        ok = ok and len(slices) == len(mats)
        ok = ok and all(s == m for s, m in zip(slices, mats))
    _announce(5, "universal classical families", ok)


def test_criterion_06_family_duality():
    ok = True
    for _label, fam, _expected in selftest.family_catalog():
        hat(fam)  # raises unless both closed formulas agree exactly
        ok = ok and double_hat_formula_matches(fam)
        mine, _ = is_automorphism_family(fam, deep=False)
        dual, _ = is_automorphism_family(hat(fam), deep=False)
        ok = ok and mine == dual
    _announce(6, "family duality (hat formulas, iff)", ok)


def test_criterion_07_equivalence_lemma_both_truth_values():
    ok = True
    seen = {"item1_multiplicative": set(), "item2_star": set(),
            "item3_unital": set()}
    for _label, fam, _expected in selftest.family_catalog():
        rep = verify_dual_equivalences(fam)
        ok = ok and rep.passed
        for item in seen:
            seen[item].add(rep.check(item).witness[0])
    for item, values in seen.items():
        ok = ok and values == {True, False}
    _announce(7, "equivalences tested in both truth values", ok)


def test_criterion_08_composition():
    ok = True
    one = scalar(1)
    for name in ("Z5", "S3"):
        group = named_group(name)
        fam = universal_classical_family(group)
        comp = compose(fam, fam)
        verdict, _ = is_automorphism_family(comp)
        ok = ok and verdict
        auts = enumerate_automorphisms(group)
        k = len(auts)
        slices = slice_commutative(comp)
        for i, phi in enumerate(auts):
            for j, chi in enumerate(auts):
                composed = tuple(phi[chi[y]] for y in range(group.order))
                expected = LinearMap(group.order, group.order,
                                     [{composed[y]: one}
                                      for y in range(group.order)])
                ok = ok and slices[i * k + j] == expected
    _announce(8, "composition of families", ok)


def test_criterion_09_classical_relations():
    tfam = translation_family(named_group("S3"))
    rep = check_pointwise_relations(extract_matrix(tfam))
    conv = rep.check("conv_hom_relation")
    ok = (not conv.passed) and len(conv.witness) == 3
    for name in selftest.ORDER_SWEEP_NAMES:
        matrix = extract_matrix(universal_classical_family(named_group(name)))
        ok = ok and check_pointwise_relations(matrix).passed
        ok = ok and check_order_properties(matrix).passed
    z6 = named_group("Z6")
    matrix = extract_matrix(universal_classical_family(z6))
    for x in range(6):
        for y in range(6):
            if z6.element_order(x) != z6.element_order(y):
                ok = ok and not matrix.entries[x][y]
    _announce(9, "classical relation systems + controls", ok)


def test_criterion_10_cyclic_theorem_desk_scale():
    ok = all(check_cyclic_identity(
        extract_matrix(universal_classical_family(named_group(name)))).passed
        for name in ("Z4", "Z6", "Z8", "Z9"))
    _announce(10, "cyclic summation identity + commutation", ok)


def test_criterion_11_dual_group_theorem():
    ok = True
    for name in ("S3", "Z4"):
        fam = hat(universal_classical_family(named_group(name)))
        ok = ok and check_dual_group_theorem(fam).passed
    rep = check_dual_group_theorem(sign_twisted_dual_family())
    fails = rep.failed_names()
    ok = ok and bool(fails) and fails[0] == "entries_idempotent"
    _announce(11, "dual-group proof chain + negative control", ok)


def test_criterion_12_selftest_determinism(capsys):
    from fqg.cli import main

    assert main(["selftest", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["selftest", "--format", "json"]) == 0
    second = capsys.readouterr().out
    ok = first == second and len(first) > 1000
    _announce(12, "selftest JSON byte-determinism", ok)
