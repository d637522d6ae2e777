from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from fqg.constructors import (function_algebra, group_algebra,
                              quantum_group_data_equal)
from fqg.fourier import (build_dual, check_iteration_lemma, conv_adjoint,
                         conv_table, conv_vec, convolve, dual_pair,
                         verify_fourier_identities)
from fqg.groups import cyclic, named_group
from fqg.hopf import QuantumGroup
from fqg.linalg import vec_eq, vec_scale
from fqg.scalar import QQi, scalar

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def test_function_algebra_convolution_is_scaled_group_law():
    g = function_algebra(cyclic(3))
    third = scalar(Fraction(1, 3))
    for a in range(3):
        for b in range(3):
            got = convolve(g, g.algebra.basis_element(a), g.algebra.basis_element(b))
            assert vec_eq(got.coeffs, {(a + b) % 3: third})


def test_group_ring_convolution_is_diagonal():
    g = group_algebra(cyclic(4))
    for a in range(4):
        for b in range(4):
            got = convolve(g, g.algebra.basis_element(a), g.algebra.basis_element(b))
            assert vec_eq(got.coeffs, {b: scalar(1)} if a == b else {})


@given(st.lists(st.builds(QQi, fractions, fractions), min_size=6, max_size=6))
def test_unit_convolution_collapses_to_haar(coeffs):
    g = function_algebra(named_group("S3"))
    x = g.algebra.element(coeffs)
    left = conv_vec(g, g.algebra.unit, x.coeffs)
    right = conv_vec(g, x.coeffs, g.algebra.unit)
    target = vec_scale(g.algebra.unit, g.haar_of(x.coeffs))
    assert vec_eq(left, target) and vec_eq(right, target)


def test_conv_adjoint_formulas():
    fun = function_algebra(cyclic(5))
    for g in range(5):
        assert vec_eq(conv_adjoint(fun, fun.algebra.basis_element(g)).coeffs,
                      {(-g) % 5: scalar(1)})
    grp = group_algebra(cyclic(5))
    for g in range(5):
        assert vec_eq(conv_adjoint(grp, grp.algebra.basis_element(g)).coeffs,
                      {g: scalar(1)})


@given(st.lists(st.builds(QQi, fractions, fractions), min_size=4, max_size=4))
def test_conv_adjoint_involutive(coeffs):
    g = function_algebra(cyclic(4))
    x = g.algebra.element(coeffs)
    assert conv_adjoint(g, conv_adjoint(g, x)) == x


def test_convolution_associative_on_basis():
    g = function_algebra(named_group("S3"))
    ct = conv_table(g)
    for i in range(6):
        for j in range(6):
            for k in range(6):
                left = conv_vec(g, ct.get((i, j), {}), {k: scalar(1)})
                right = conv_vec(g, {i: scalar(1)}, ct.get((j, k), {}))
                assert vec_eq(left, right)


def test_conv_adjoint_antimultiplicative_for_convolution():
    g = group_algebra(named_group("S3"))
    ct = conv_table(g)
    for i in range(6):
        for j in range(6):
            lhs = g.bullet_vec(ct.get((i, j), {}))
            rhs = conv_vec(g, g.bullet_vec({j: scalar(1)}),
                           g.bullet_vec({i: scalar(1)}))
            assert vec_eq(lhs, rhs)


def test_dual_dimensions_and_invertibility():
    g = function_algebra(named_group("S3"))
    pair = dual_pair(g)
    assert pair.dual.dim == g.dim
    assert pair.fourier.rank() == g.dim


def test_group_ring_fourier_lands_on_inverse_deltas():
    g = group_algebra(named_group("D4"))
    pair = dual_pair(g)
    for x in range(g.dim):
        inv = next(i for i in range(g.dim)
                   if g.algebra.mult[(x, i)].get(0) is not None)
        assert vec_eq(pair.fourier.cols[x], {inv: scalar(1)})


def test_fourier_identities_catalog():
    assert verify_fourier_identities(dual_pair(function_algebra(named_group("S3")))).passed
    assert verify_fourier_identities(dual_pair(group_algebra(named_group("D4")))).passed


def test_perturbed_antipode_breaks_transform_intertwining():
    g = function_algebra(cyclic(4))
    one = scalar(1)
    from fqg.linalg import LinearMap

    perm = LinearMap(4, 4, [{0: one}, {2: one}, {1: one}, {3: one}])
    bad = QuantumGroup(g.algebra, g.coproduct, g.counit,
                       g.antipode.compose(perm), g.haar_state,
                       g.haar_element, "bad-antipode")
    pair = build_dual(bad, verify=False)
    rep = verify_fourier_identities(pair)
    assert "fourier_antipode" in rep.failed_names()


def test_iteration_lemma_exact_values():
    for build in (function_algebra, group_algebra):
        g = build(cyclic(5))
        pair = dual_pair(g)
        rep = check_iteration_lemma(pair)
        assert rep.passed
        once = pair.fourier_dual.compose(pair.fourier)
        assert once == g.antipode.scale(scalar(Fraction(1, 5)))


def test_double_dual_is_the_primal_on_the_nose():
    for name in ("Z4", "S3"):
        for build in (function_algebra, group_algebra):
            g = build(named_group(name))
            pair = dual_pair(g)
            pair2 = dual_pair(pair.dual)
            assert quantum_group_data_equal(pair2.dual, g)
            assert pair2.fourier == pair.fourier_dual


def test_dual_haar_element_value_matches_primal():
    g = function_algebra(named_group("S3"))
    pair = dual_pair(g)
    assert pair.dual.haar_of_eta() == g.haar_of_eta()
