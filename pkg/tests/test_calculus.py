"""Coefficient-space integration and the anchored primitive pairs."""

import numpy as np
import pytest
from numpy.polynomial import chebyshev as npcheb
from numpy.polynomial import polynomial as nppoly

from chebgreen import (
    CoeffVector,
    NodeVector,
    cgl_points,
    extend,
    integrate_coeffs,
    lagrange_integrals,
    node_poly_primitive,
    reduce_fine_to_coarse,
)
from chebgreen.core import barycentric_weights_cgl


def test_extend_pads_with_zeros():
    out = extend(CoeffVector([1.0, 2.0]), 3)
    np.testing.assert_array_equal(out.values, [1.0, 2.0, 0.0, 0.0, 0.0])
    same = extend(CoeffVector([1.0, 2.0]), 0)
    np.testing.assert_array_equal(same.values, [1.0, 2.0])
    with pytest.raises(ValueError):
        extend(CoeffVector([1.0]), -1)


def test_integrate_known_triples():
    got = integrate_coeffs(CoeffVector([1.0, 0.0, 0.0]))
    np.testing.assert_array_equal(got.values, [0.0, 1.0, 0.0])
    got = integrate_coeffs(CoeffVector([0.0, 1.0, 0.0, 0.0]))
    np.testing.assert_array_equal(got.values, [0.25, 0.0, 0.25, 0.0])
    got = integrate_coeffs(CoeffVector([0.0, 0.0, 1.0, 0.0, 0.0]))
    np.testing.assert_allclose(got.values, [0.0, -0.5, 0.0, 1.0 / 6.0, 0.0], rtol=0, atol=1e-16)


def test_integrate_requires_two_trailing_zeros():
    with pytest.raises(ValueError):
        integrate_coeffs(CoeffVector([1.0, 2.0, 3.0]))
    with pytest.raises(ValueError):
        integrate_coeffs(CoeffVector([1.0, 0.0, 3e-300]))  # almost zero is not zero
    with pytest.raises(ValueError):
        integrate_coeffs(CoeffVector([1.0, 0.0]))  # too short


@pytest.mark.parametrize("n", [3, 4, 9, 40])
def test_integrate_inverts_differentiation(n):
    # differentiating the antiderivative must reproduce the input
    rng = np.random.default_rng(n)
    c = np.zeros(n + 2)
    c[:n] = rng.standard_normal(n)
    out = integrate_coeffs(CoeffVector(c)).values
    np.testing.assert_allclose(npcheb.chebder(out), c[:-1], rtol=0, atol=1e-13)


def test_integrate_matches_reference_antiderivative():
    rng = np.random.default_rng(5)
    c = np.zeros(9)
    c[:7] = rng.standard_normal(7)
    got = integrate_coeffs(CoeffVector(c)).values
    ref = npcheb.chebint(c)[: c.size]
    # anchoring constants differ; compare everything above T_0
    np.testing.assert_allclose(got[1:], ref[1:], rtol=0, atol=1e-14)


def test_reduce_fine_to_coarse():
    v = np.arange(9.0)
    np.testing.assert_array_equal(reduce_fine_to_coarse(v), [0.0, 2.0, 4.0, 6.0, 8.0])
    with pytest.raises(ValueError):
        reduce_fine_to_coarse(np.arange(4.0))  # even length has no coarse twin


# ---------------------------------------------------------------------------
# Lagrange-basis primitives


def test_lagrange_integrals_degree_two_values():
    pair = lagrange_integrals(1, 2)  # l_1 = 1 - x^2
    np.testing.assert_allclose(pair.up.values, [4.0 / 3.0, 2.0 / 3.0, 0.0], rtol=0, atol=1e-15)
    np.testing.assert_allclose(pair.down.values, [0.0, 2.0 / 3.0, 4.0 / 3.0], rtol=0, atol=1e-15)
    pair = lagrange_integrals(0, 2)  # l_0 = x(x+1)/2
    np.testing.assert_allclose(pair.up.values, [1.0 / 3.0, -1.0 / 12.0, 0.0], rtol=0, atol=1e-15)


@pytest.mark.parametrize("N", [1, 2, 3, 5, 8])
def test_lagrange_integrals_anchoring(N):
    for i in range(N + 1):
        pair = lagrange_integrals(i, N)
        assert pair.up.values[-1] == 0.0
        assert pair.down.values[0] == 0.0
        # up + down is the full integral, constant across nodes
        total = pair.up.values + pair.down.values
        np.testing.assert_allclose(total, total[0], rtol=0, atol=1e-14)


@pytest.mark.parametrize("N", [2, 4, 7])
def test_lagrange_integrals_against_monomial_reference(N):
    # expand l_i in monomials and integrate exactly
    x = cgl_points(N)
    for i in range(N + 1):
        roots = np.delete(x, i)
        li = nppoly.polyfromroots(roots) / np.prod(x[i] - roots)
        prim = nppoly.polyint(li)
        up_ref = nppoly.polyval(x, prim) - nppoly.polyval(-1.0, prim)
        pair = lagrange_integrals(i, N)
        np.testing.assert_allclose(pair.up.values, up_ref, rtol=0, atol=1e-13)
        np.testing.assert_allclose(
            pair.down.values, up_ref[0] - up_ref, rtol=0, atol=1e-13
        )


def test_lagrange_integrals_rejects_bad_indices():
    with pytest.raises(ValueError):
        lagrange_integrals(3, 2)
    with pytest.raises(ValueError):
        lagrange_integrals(-1, 2)
    with pytest.raises(ValueError):
        lagrange_integrals(0, 0)


# ---------------------------------------------------------------------------
# node-polynomial primitives


def test_node_poly_primitive_endpoint_value():
    pair = node_poly_primitive(0, 3)
    assert abs(pair.up.values[0] - 2.0 / 45.0) < 1e-16


@pytest.mark.parametrize("N", [3, 5, 7])
def test_node_poly_primitive_against_monomial_reference(N):
    # reference: lambda_i times the integral of prod_j (x - x_j)
    x = cgl_points(N)
    lam = barycentric_weights_cgl(N)
    omega = nppoly.polyfromroots(x)
    prim = nppoly.polyint(omega)
    for i in range(N + 1):
        up_ref = lam[i] * (nppoly.polyval(x, prim) - nppoly.polyval(-1.0, prim))
        pair = node_poly_primitive(i, N)
        np.testing.assert_allclose(pair.up.values, up_ref, rtol=0, atol=1e-13)
        np.testing.assert_allclose(pair.down.values, up_ref[0] - up_ref, rtol=0, atol=1e-13)
        assert pair.up.values[-1] == 0.0
        assert pair.down.values[0] == 0.0


def test_node_poly_primitive_needs_degree_three():
    with pytest.raises(ValueError):
        node_poly_primitive(0, 2)
    with pytest.raises(ValueError):
        node_poly_primitive(4, 3)
