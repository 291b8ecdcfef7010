"""Polynomial values, quasi-monomial ladders and basis conversion."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isospec.errors import BasisMismatchError, ParameterError
from isospec.polynomials import (
    MONOMIAL,
    Basis,
    Polynomial,
    convert_basis,
    quasi_basis,
    quasi_monomial,
)

steps = st.sampled_from([F(1), F(-1), F(1, 2), F(3, 7), F(-2, 5)])
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
vectors = st.lists(coeffs, max_size=16)


class TestQuasiMonomial:
    def test_empty_product_is_one(self):
        assert quasi_monomial(0, 1) == Polynomial.constant(1)

    def test_degree_two_unit_step(self):
        assert quasi_monomial(2, 1) == Polynomial((0, -1, 1))  # x^2 - x

    def test_degree_three_half_step(self):
        # x(x - 1/2)(x - 1)
        assert quasi_monomial(3, F(1, 2)) == Polynomial((0, F(1, 2), F(-3, 2), 1))

    def test_monic_of_exact_degree(self):
        for n in range(12):
            poly = quasi_monomial(n, F(3, 7))
            assert poly.degree == n
            assert poly.leading == 1

    def test_zero_step_rejected(self):
        with pytest.raises(ParameterError):
            quasi_monomial(3, 0)


class TestConvertBasis:
    def test_square_to_ladder(self):
        p = Polynomial((0, 0, 1))
        q = convert_basis(p, quasi_basis(1))
        assert q.coeffs == (0, 1, 1)  # x^2 = x^(2) + x^(1)

    def test_identity_conversion(self):
        p = Polynomial((1, 2, 3))
        assert convert_basis(p, MONOMIAL) is p

    def test_ladder_unit_vector_expands(self):
        step = F(1, 2)
        for n in range(8):
            vec = Polynomial.unit_vector(n, quasi_basis(step))
            assert convert_basis(vec, MONOMIAL) == quasi_monomial(n, step)

    def test_mismatched_steps_refused(self):
        p = Polynomial((1, 1), quasi_basis(1))
        with pytest.raises(BasisMismatchError):
            convert_basis(p, quasi_basis(F(1, 2)))

    @given(vectors, steps)
    def test_round_trip_is_identity(self, vec, step):
        p = Polynomial(vec)
        there = convert_basis(p, quasi_basis(step))
        assert convert_basis(there, MONOMIAL) == p

    @given(vectors, steps)
    def test_degree_is_preserved(self, vec, step):
        p = Polynomial(vec)
        assert convert_basis(p, quasi_basis(step)).degree == p.degree

    @given(vectors, steps, st.integers(-6, 6))
    def test_conversion_preserves_values(self, vec, step, j):
        p = Polynomial(vec)
        q = convert_basis(p, quasi_basis(step))
        point = j * step
        assert p(point) == q(point)


class TestArithmetic:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert Polynomial((0,)).is_zero
        assert Polynomial(()).degree == -1

    def test_product(self):
        x = Polynomial.identity()
        assert (x + Polynomial.constant(1)) * (x - Polynomial.constant(1)) == Polynomial((-1, 0, 1))

    def test_product_requires_monomial_basis(self):
        p = Polynomial((1, 1), quasi_basis(1))
        with pytest.raises(BasisMismatchError):
            p * p

    def test_cross_basis_addition_refused(self):
        with pytest.raises(BasisMismatchError):
            Polynomial((1,)) + Polynomial((1,), quasi_basis(1))

    def test_derivative(self):
        assert Polynomial((5, 3, 0, 2)).derivative() == Polynomial((3, 0, 6))

    def test_shift_and_affine(self):
        p = Polynomial((0, 0, 1))
        assert p.shifted(1) == Polynomial((1, 2, 1))
        assert p.affine(-1, 0) == p
        assert Polynomial((0, 1)).affine(-1, F(1, 2)) == Polynomial((F(1, 2), -1))

    def test_evaluate_monomial(self):
        p = Polynomial((1, -3, 2))
        assert p(F(1, 2)) == 1 - F(3, 2) + F(1, 2)

    def test_evaluate_quasi(self):
        # 2*x^(2) + 3 at step 1: 2*x(x-1) + 3
        p = Polynomial((3, 0, 2), quasi_basis(1))
        assert p(4) == 2 * 4 * 3 + 3

    def test_power(self):
        x = Polynomial.identity()
        assert (x + Polynomial.constant(1)) ** 2 == Polynomial((1, 2, 1))


class TestSerialization:
    def test_monomial_round_trip(self):
        p = Polynomial((F(1, 2), 0, -2))
        blob = p.to_json_obj()
        assert blob == {"basis": "monomial", "coeffs": ["1/2", "0", "-2"]}
        assert Polynomial.from_json_obj(blob) == p

    def test_quasi_round_trip(self):
        p = Polynomial((1, -1), quasi_basis(F(-3, 7)))
        blob = p.to_json_obj()
        assert blob["basis"] == {"quasi": "-3/7"}
        assert Polynomial.from_json_obj(blob) == p


def test_basis_validation():
    with pytest.raises(ParameterError):
        Basis(F(0))
    assert Basis().is_monomial
    assert not quasi_basis(1).is_monomial
