import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqg.algebra import BlockAlgebra, InvalidDataError
from fqg.classical import enumerate_automorphisms, universal_classical_family
from fqg.constructors import function_algebra, group_algebra
from fqg.fixtures import (broken_adjoint_family, counit_degenerate_family,
                          identity_family_with_hopf, target_permuted_family,
                          translation_family)
from fqg.groups import cyclic, named_group
from fqg.linalg import LinearMap
from fqg.qfamily import (QuantumFamily, check_action, check_family,
                         check_convolution_preservation, compose,
                         double_hat_formula_matches, hat, identity_family,
                         is_automorphism_family, slice_commutative,
                         verify_dual_equivalences)
from fqg.scalar import QQi, scalar

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=3)
entries = st.builds(QQi, fractions, fractions)


def test_identity_family_passes_everything():
    qf = identity_family(function_algebra(cyclic(3)))
    rep = check_family(qf)
    assert rep.passed
    rep = check_convolution_preservation(qf)
    assert rep.passed
    ok, _ = is_automorphism_family(qf)
    assert ok


def test_counit_degenerate_family_is_hom_but_rank_one():
    qf = counit_degenerate_family(function_algebra(cyclic(3)))
    rep = check_family(qf)
    assert rep.check("unital_star_hom").passed
    assert not rep.check("podles").passed
    assert rep.check("podles").witness == (1,)


def test_counit_degenerate_failure_set_frozen():
    # computed directly: on F(Z_2), α(δ_0 ⋆ δ_0) = (1/2)·1⊗1 but
    # α(δ_0) ⋆' α(δ_0) = 1⊗1, so the convolution product is NOT preserved;
    # the adjoint and counit survive, the Haar element and state do not.
    qf = counit_degenerate_family(function_algebra(cyclic(2)))
    rep = check_convolution_preservation(qf)
    got = {c.name: c.passed for c in rep.checks}
    assert got == {"conv_product": False, "conv_adjoint": True,
                   "haar_element": False, "counit": True, "haar_state": False}


def test_universal_family_preserves_all_convolution_structure():
    qf = universal_classical_family(named_group("D4"))
    rep = check_convolution_preservation(qf)
    assert rep.passed, rep.failed_names()


def test_hat_of_identity_is_identity():
    g = function_algebra(cyclic(4))
    qf = identity_family(g)
    h = hat(qf)
    assert h.alpha == qf.alpha  # same matrix on the dual coordinates
    assert h.source is not qf.source


def _random_family(coeffs):
    """An arbitrary linear map F(Z_3) -> F(Z_3)⊗C² from 18 coefficients."""
    g = function_algebra(cyclic(3))
    b = BlockAlgebra([1, 1])
    cols = []
    it = iter(coeffs)
    for j in range(3):
        col = {}
        for r in range(6):
            v = next(it)
            if not v.is_zero():
                col[r] = v
        cols.append(col)
    return QuantumFamily(g, b, LinearMap(3, 6, cols))


@given(st.lists(entries, min_size=18, max_size=18))
@settings(max_examples=20)
def test_hat_formulas_agree_for_arbitrary_linear_maps(coeffs):
    qf = _random_family(coeffs)
    hat(qf)  # raises if the two closed formulas disagree


@given(st.lists(entries, min_size=18, max_size=18))
@settings(max_examples=20)
def test_double_hat_is_antipode_conjugation_for_arbitrary_maps(coeffs):
    qf = _random_family(coeffs)
    assert double_hat_formula_matches(qf)


@given(st.lists(entries, min_size=18, max_size=18))
@settings(max_examples=10)
def test_dual_equivalences_hold_for_arbitrary_maps(coeffs):
    qf = _random_family(coeffs)
    rep = verify_dual_equivalences(qf)
    assert rep.passed, [(c.name, c.witness) for c in rep.checks]


def test_hat_of_universal_family_is_automorphism_family_on_dual():
    qf = universal_classical_family(cyclic(4))
    ok, rep = is_automorphism_family(hat(qf))
    assert ok, rep.failed_names()


def test_double_hat_is_the_identity_on_automorphism_families():
    # automorphism families commute with the antipode, so conjugating by it
    # returns the same matrix
    for qf in (universal_classical_family(named_group("S3")),
               identity_family(function_algebra(cyclic(4)))):
        assert hat(hat(qf)).alpha == qf.alpha


def test_dual_equivalences_witness_values():
    idf = identity_family(function_algebra(cyclic(3)))
    rep = verify_dual_equivalences(idf)
    assert rep.passed
    for item in ("item1_multiplicative", "item2_star", "item3_unital",
                 "item4_haar_state"):
        assert rep.check(item).witness == (True, True)

    eps = counit_degenerate_family(function_algebra(cyclic(2)))
    rep = verify_dual_equivalences(eps)
    assert rep.passed
    assert rep.check("item1_multiplicative").witness == (False, False)
    assert rep.check("item3_unital").witness == (False, False)

    broken = broken_adjoint_family(function_algebra(cyclic(2)))
    rep = verify_dual_equivalences(broken)
    assert rep.passed
    assert rep.check("item2_star").witness == (False, False)


def test_is_automorphism_family_catalog():
    ok, _ = is_automorphism_family(identity_family(function_algebra(cyclic(3))))
    assert ok
    ok, rep = is_automorphism_family(universal_classical_family(named_group("S3")))
    assert ok
    assert rep.check("double_hat_identity").passed
    assert rep.check("dual_family_automorphism").passed
    ok, _ = is_automorphism_family(counit_degenerate_family(function_algebra(cyclic(3))))
    assert not ok


def test_compose_with_identity_is_unit_factor_isomorphic():
    qf = universal_classical_family(cyclic(3))
    idf = identity_family(qf.source)  # over the one-dimensional algebra
    left = compose(idf, qf)
    # B⊗C with B one-dimensional: index (0, c) ↔ c, so matrices agree verbatim
    assert left.alpha == qf.alpha
    right = compose(qf, identity_family(qf.source))
    assert right.alpha == qf.alpha


def test_compose_universal_z5_is_automorphism_family_of_dim_16():
    qf = universal_classical_family(cyclic(5))
    comp = compose(qf, qf)
    assert comp.target_algebra.dim == 16
    ok, rep = is_automorphism_family(comp)
    assert ok, rep.failed_names()


def test_compose_associative_up_to_reindexing():
    qf = universal_classical_family(cyclic(3))
    left = compose(compose(qf, qf), qf)
    right = compose(qf, compose(qf, qf))
    assert left.alpha == right.alpha


def test_action_equation():
    uf = universal_classical_family(named_group("S3"))
    assert check_action(uf).passed
    idf = identity_family_with_hopf(function_algebra(cyclic(3)))
    assert check_action(idf).passed


def test_action_fails_for_non_group_permutation_of_target():
    uf = universal_classical_family(cyclic(3))
    # swapping the two points of Aut(Z_3) moves the identity: not a group map
    bad = target_permuted_family(uf, [1, 0])
    rep = check_action(bad)
    assert not rep.passed
    assert rep.checks[0].witness


def test_slices_recover_enumerated_automorphisms():
    for name, count in (("S3", 6), ("Z8", 4)):
        group = named_group(name)
        uf = universal_classical_family(group)
        slices = slice_commutative(uf)
        auts = enumerate_automorphisms(group)
        assert len(slices) == count
        one = scalar(1)
        mats = [LinearMap(group.order, group.order,
                          [{psi[y]: one} for y in range(group.order)])
                for psi in auts]
        for s in slices:
            assert any(s == m for m in mats)
        for m in mats:
            assert any(s == m for s in slices)


def test_identity_family_slices_to_identity_map():
    g = function_algebra(cyclic(4))
    maps = slice_commutative(identity_family(g))
    assert maps == [LinearMap.identity(4, scalar(1))]


def test_slice_rejects_non_pointwise_target():
    g = function_algebra(cyclic(2))
    target = group_algebra(cyclic(2)).algebra  # basis is not idempotent
    one = scalar(1)
    cols = [{j * 2 + 0: one} for j in range(2)]
    qf = QuantumFamily(g, target, LinearMap(2, 4, cols))
    with pytest.raises(InvalidDataError):
        slice_commutative(qf)


def test_translation_family_is_star_hom_with_podles_but_not_conv():
    qf = translation_family(named_group("S3"))
    rep = check_family(qf)
    assert rep.passed
    conv = check_convolution_preservation(qf)
    assert not conv.check("conv_product").passed
    ok, _ = is_automorphism_family(qf)
    assert not ok
