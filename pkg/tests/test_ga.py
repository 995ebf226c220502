#!/usr/bin/env python3
#
# Copyright (C) 2026 Hamcon contributors
#
# This file is part of Hamcon.
#
# Hamcon is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Hamcon is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with Hamcon.  If not, see <https://www.gnu.org/licenses/>.

import math
import unittest

import numpy as np

from hamcon.errors import HamconAlgebraError, HamconNumericalError
from hamcon.ga import (
    Algebra,
    ScalarMvFunction,
    blade_grade,
    mv_derivative,
    reorder_sign,
    vector_derivative,
)


class TestBlades(unittest.TestCase):
    def test_blade_grade(self):
        self.assertEqual(blade_grade(0), 0)
        self.assertEqual(blade_grade(0b101), 2)
        self.assertEqual(blade_grade(0b1111), 4)

    def test_reorder_sign(self):
        self.assertEqual(reorder_sign(0b01, 0b10), 1)
        self.assertEqual(reorder_sign(0b10, 0b01), -1)
        # e3 e12 = e12 e3 after two swaps
        self.assertEqual(reorder_sign(0b100, 0b011), 1)


class TestAlgebra(unittest.TestCase):
    def setUp(self):
        self.algebra = Algebra(3)
        self.rng = np.random.default_rng(42)

    def test_invalid_dimension(self):
        with self.assertRaises(HamconAlgebraError):
            Algebra(0)
        with self.assertRaises(HamconAlgebraError):
            Algebra(9)
        with self.assertRaises(HamconAlgebraError):
            Algebra(2.5)

    def test_generators_square(self):
        for e in self.algebra.basis_vectors():
            self.assertTrue((e * e).allclose(self.algebra.scalar(1.0)))

    def test_anticommutation(self):
        e1, e2 = self.algebra.e(1), self.algebra.e(2)
        self.assertTrue((e1 * e2).allclose(-(e2 * e1)))
        self.assertEqual((e1 * e2)[0b011], 1.0)
        self.assertTrue(self.algebra.e(2, 1).allclose(-self.algebra.e(1, 2)))

    def test_pseudoscalar_square(self):
        I = self.algebra.pseudoscalar()
        self.assertTrue((I * I).allclose(self.algebra.scalar(-1.0)))
        self.assertTrue(
            self.algebra.pseudoscalar([2, 1], sign=-1.0).allclose(
                -self.algebra.e(1, 2)
            )
        )

    def test_associativity(self):
        a, b, c = (self.algebra.random(self.rng) for _ in range(3))
        self.assertTrue(((a * b) * c).allclose(a * (b * c), atol=1e-10))
        self.assertTrue(((a ^ b) ^ c).allclose(a ^ (b ^ c), atol=1e-10))

    def test_vector_product_split(self):
        a = self.algebra.random(self.rng, grades=(1,))
        b = self.algebra.random(self.rng, grades=(1,))
        self.assertTrue((a * b).allclose((a | b) + (a ^ b), atol=1e-12))
        self.assertAlmostEqual(
            (a | b).scalar_part(), float(a.vector_part() @ b.vector_part())
        )

    def test_inner_products(self):
        e1, e2 = self.algebra.e(1), self.algebra.e(2)
        B = e1 ^ e2
        self.assertTrue((e1 | B).allclose(e2))
        self.assertTrue((B | e1).allclose(-e2))
        self.assertTrue((2.0 | B).is_zero())
        self.assertTrue((B | 2.0).is_zero())

    def test_reverse(self):
        B = self.algebra.e(1, 2)
        self.assertTrue((~B).allclose(-B))
        I = self.algebra.pseudoscalar()
        self.assertTrue(I.reverse().allclose(-I))
        a = self.algebra.random(self.rng)
        b = self.algebra.random(self.rng)
        self.assertTrue(
            (a * b).reverse().allclose(b.reverse() * a.reverse(), atol=1e-10)
        )

    def test_grades(self):
        value = 1.0 + self.algebra.e(1) + 0.0 * self.algebra.e(2, 3)
        self.assertEqual(value.grades(), [0, 1])
        self.assertFalse(value.is_homogeneous())
        self.assertTrue(value.grade(1).is_homogeneous())
        self.assertTrue(
            value.grade_project((0,)).allclose(self.algebra.scalar(1.0))
        )

    def test_magnitude(self):
        value = self.algebra.e(1) + self.algebra.e(2)
        self.assertAlmostEqual(value.magnitude(), math.sqrt(2))
        with self.assertRaises(HamconAlgebraError):
            self.algebra.zero().normalized()

    def test_scalar_product(self):
        B = self.algebra.e(1, 2)
        self.assertAlmostEqual(B.scalar_product(B), -1.0)
        self.assertAlmostEqual(B.scalar_product(B.reverse()), 1.0)

    def test_algebra_mismatch(self):
        other = Algebra(2)
        with self.assertRaises(HamconAlgebraError):
            self.algebra.e(1) * other.e(1)

    def test_vector_components(self):
        with self.assertRaises(HamconAlgebraError):
            self.algebra.vector([1.0, 2.0])
        v = self.algebra.vector([1.0, 2.0, 3.0])
        np.testing.assert_array_equal(v.vector_part(), [1.0, 2.0, 3.0])

    def test_export(self):
        value = 2.0 * self.algebra.e(1, 3) - 0.5
        self.assertEqual(value.export(), [[0, -0.5], [5, 2.0]])
        restored = self.algebra.from_export(value.export())
        self.assertTrue(restored.allclose(value))
        with self.assertRaises(HamconAlgebraError):
            self.algebra.from_export([[8, 1.0]])

    def test_immutable(self):
        v = self.algebra.e(1)
        with self.assertRaises(ValueError):
            v.coeffs[1] = 2.0


class TestCalculus(unittest.TestCase):
    def setUp(self):
        self.algebra = Algebra(3)
        self.rng = np.random.default_rng(7)

    def test_mv_derivative_quadratic(self):
        F = ScalarMvFunction(lambda P: 0.5 * P.magnitude() ** 2, grades=(2,))
        P = self.algebra.random(self.rng, grades=(2,))
        derivative = mv_derivative(F, P)
        self.assertEqual(derivative.grades(atol=1e-12), [2])
        self.assertTrue(derivative.allclose(P.reverse(), atol=1e-7))

    def test_mv_derivative_linear(self):
        A = self.algebra.random(self.rng)
        derivative = mv_derivative(lambda P: A.scalar_product(P), A)
        self.assertTrue(derivative.allclose(A, atol=1e-7))

    def test_mv_derivative_non_finite(self):
        with self.assertRaises(HamconNumericalError):
            mv_derivative(lambda P: math.nan, self.algebra.e(1), grades=(1,))

    def test_identity_field(self):
        q = self.algebra.random(self.rng, grades=(1,))
        samples = vector_derivative(lambda point: point, q)
        self.assertTrue(
            samples.gradient().allclose(self.algebra.scalar(3.0), atol=1e-8)
        )
        self.assertAlmostEqual(
            samples.divergence().scalar_part(), 3.0, places=8
        )
        self.assertTrue(samples.curl().is_zero(atol=1e-8))
        np.testing.assert_allclose(samples.jacobian(), np.eye(3), atol=1e-8)

    def test_rotation_field_curl(self):
        B = self.algebra.e(1, 2)
        q = self.algebra.random(self.rng, grades=(1,))
        samples = vector_derivative(lambda point: point | B, q)
        self.assertTrue(samples.curl().allclose(2.0 * B, atol=1e-8))
        self.assertTrue(samples.divergence().is_zero(atol=1e-8))

    def test_scalar_valued_field(self):
        q = self.algebra.vector([1.0, 2.0, -1.0])
        samples = vector_derivative(
            lambda point: 0.5 * point.magnitude() ** 2, q
        )
        self.assertTrue(samples.curl().allclose(q, atol=1e-8))
