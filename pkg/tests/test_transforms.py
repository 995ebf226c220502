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

from hamcon.errors import (
    HamconAlgebraError,
    HamconScenarioError,
    HamconSingularMapError,
)
from hamcon.ga import Algebra
from hamcon.transforms import (
    Diffeo,
    adjoint,
    adjoint_inverse,
    anisotropic_scaling,
    bivector_from_spec,
    differential,
    field_rotation,
    generator_from_spec,
    graph_adjoint,
    graph_outermorphism,
    infinitesimal_adjoint,
    infinitesimal_outermorphism,
    lie_flow,
    lie_series,
    outermorphism,
    outermorphism_matrix,
    rotate_diffeo,
    rotation,
    rotor_exp,
    translate_diffeo,
    translation,
)


class TestRotors(unittest.TestCase):
    def setUp(self):
        self.algebra = Algebra(3)

    def test_plane_rotation(self):
        theta = 0.7
        rotor = rotor_exp(theta * self.algebra.e(1, 2))
        rotated = rotor.apply(self.algebra.e(1))
        expected = self.algebra.vector([math.cos(theta), math.sin(theta), 0])
        self.assertTrue(rotated.allclose(expected, atol=1e-14))
        self.assertLess(rotor.unitarity_error(), 1e-14)

    def test_matrix_orthogonal(self):
        B = 0.3 * self.algebra.e(1, 2) - 1.1 * self.algebra.e(2, 3)
        M = rotor_exp(B).matrix()
        np.testing.assert_allclose(M @ M.T, np.eye(3), atol=1e-13)
        self.assertAlmostEqual(np.linalg.det(M), 1.0)

    def test_non_simple_bivector(self):
        algebra = Algebra(4)
        B = algebra.e(1, 2) + 2.0 * algebra.e(3, 4)
        rotor = rotor_exp(B)
        self.assertLess(rotor.unitarity_error(), 1e-10)
        rotated = rotor.apply(algebra.e(3))
        expected = algebra.vector([0.0, 0.0, math.cos(2.0), math.sin(2.0)])
        self.assertTrue(rotated.allclose(expected, atol=1e-10))

    def test_inverse(self):
        rotor = rotor_exp(0.4 * self.algebra.e(1, 3))
        v = self.algebra.vector([0.2, -1.0, 3.0])
        self.assertTrue(rotor.inverse().apply(rotor.apply(v)).allclose(v))

    def test_not_a_bivector(self):
        with self.assertRaises(HamconAlgebraError):
            rotor_exp(self.algebra.e(1))

    def test_flow_of_rotation_generator(self):
        B = 0.9 * self.algebra.e(1, 2) + 0.4 * self.algebra.e(1, 3)
        x0 = self.algebra.vector([0.5, -0.5, 1.0])
        q = self.algebra.vector([1.0, 2.0, 3.0])
        flowed = lie_flow(rotation(B, x0), q, 1.0)
        self.assertTrue(flowed.allclose(rotate_diffeo(B, x0)(q), atol=1e-8))
        self.assertTrue(
            lie_series(rotation(B, x0), q, 1.0, 30).allclose(
                flowed, atol=1e-8
            )
        )

    def test_flow_composition(self):
        B = 0.7 * self.algebra.e(1, 2) - 0.3 * self.algebra.e(2, 3)
        x0 = self.algebra.vector([0.1, 0.4, -0.2])
        v = rotation(B, x0) + translation(self.algebra.vector([0.0, 0.0, 0.5]))
        q = self.algebra.vector([1.0, -1.0, 0.5])
        s, t = 0.3, 0.5
        composed = lie_flow(v, lie_flow(v, q, s, steps=300), t, steps=500)
        direct = lie_flow(v, q, s + t, steps=800)
        self.assertTrue(composed.allclose(direct, atol=1e-9))
        # the inverse flow undoes the forward one
        back = lie_flow(v, lie_flow(v, q, t, steps=500), -t, steps=500)
        self.assertTrue(back.allclose(q, atol=1e-9))
        self.assertIs(lie_flow(v, q, 0.0), q)


class TestMaps(unittest.TestCase):
    def setUp(self):
        self.algebra = Algebra(3)
        self.rng = np.random.default_rng(3)
        self.q = self.algebra.vector([0.3, -0.4, 1.2])

    def test_outermorphism_matrix(self):
        M = outermorphism_matrix(np.diag([2.0, 3.0, 5.0]))
        self.assertAlmostEqual(M[0, 0], 1.0)
        self.assertAlmostEqual(M[0b011, 0b011], 6.0)
        self.assertAlmostEqual(M[0b111, 0b111], 30.0)

    def test_outermorphism_preserves_wedge(self):
        f = rotate_diffeo(0.8 * self.algebra.e(2, 3))
        a = self.algebra.random(self.rng, grades=(1,))
        b = self.algebra.random(self.rng, grades=(1,))
        pushed = outermorphism(f, a ^ b, self.q)
        expected = differential(f, a, self.q) ^ differential(f, b, self.q)
        self.assertTrue(pushed.allclose(expected, atol=1e-12))

    def test_adjoint_inverse_of_rotation(self):
        f = rotate_diffeo(0.8 * self.algebra.e(1, 2))
        P = self.algebra.random(self.rng, grades=(2,))
        self.assertTrue(
            adjoint_inverse(f, P, self.q).allclose(
                outermorphism(f, P, self.q), atol=1e-8
            )
        )

    def test_infinitesimal_adjoint(self):
        eps = 1e-4
        B = self.algebra.e(1, 2) - 0.5 * self.algebra.e(2, 3)
        v = rotation(B)
        f = rotate_diffeo(eps * B)
        P = self.algebra.random(self.rng, grades=(2,))
        self.assertTrue(
            adjoint(f, P, self.q).allclose(
                infinitesimal_adjoint(v, P, self.q, eps), atol=1e-7
            )
        )
        self.assertTrue(
            adjoint_inverse(f, P, self.q).allclose(
                infinitesimal_adjoint(v, P, self.q, -eps), atol=1e-7
            )
        )
        A = self.algebra.random(self.rng, grades=(2,))
        self.assertTrue(
            outermorphism(f, A, self.q).allclose(
                infinitesimal_outermorphism(v, A, self.q, eps), atol=1e-7
            )
        )

    def test_newton_inverse(self):
        algebra = self.algebra

        def forward(q):
            x = q.vector_part()
            return algebra.vector(x + 0.1 * x**3)

        f = Diffeo(forward, label='cubic')
        p = algebra.vector([0.5, -1.0, 2.0])
        q = f.invert(p)
        self.assertTrue(f(q).allclose(p, atol=1e-9))

    def test_analytic_inverse(self):
        v0 = self.algebra.vector([1.0, 2.0, 3.0])
        f = translate_diffeo(v0)
        self.assertTrue(f.invert(f(self.q)).allclose(self.q))

    def test_singular_map(self):
        algebra = self.algebra
        f = Diffeo(
            lambda q: algebra.vector([q.vector_part()[0], 0.0, 0.0]),
            label='collapse',
        )
        with self.assertRaises(HamconSingularMapError):
            adjoint_inverse(f, algebra.e(1, 2), self.q)

    def test_graph_maps(self):
        gradients = np.array([[0.3], [-0.2]])
        pulled = graph_adjoint(self.algebra.e(3), gradients)
        self.assertTrue(
            pulled.allclose(self.algebra.vector([0.3, -0.2, 1.0]))
        )
        pushed = graph_outermorphism(self.algebra.e(1, 2), gradients)
        expected = (
            self.algebra.e(1, 2)
            - 0.2 * self.algebra.e(1, 3)
            - 0.3 * self.algebra.e(2, 3)
        )
        self.assertTrue(pushed.allclose(expected, atol=1e-15))


class TestCatalog(unittest.TestCase):
    def setUp(self):
        self.algebra = Algebra(4)

    def test_translation(self):
        v0 = self.algebra.vector([1.0, 0.0, 2.0, 0.0])
        v = translation(v0)
        self.assertTrue(v(self.algebra.e(2)).allclose(v0))
        np.testing.assert_array_equal(v.jacobian(v0), np.zeros((4, 4)))

    def test_rotation_jacobian(self):
        B = self.algebra.e(1, 2)
        v = rotation(B)
        q = self.algebra.vector([1.0, 2.0, 3.0, 4.0])
        self.assertTrue(v(q).allclose(self.algebra.vector([-2, 1, 0, 0])))
        J = v.jacobian(q)
        np.testing.assert_allclose(J, -J.T)
        np.testing.assert_allclose(
            J, rotation(B, q).jacobian(self.algebra.zero())
        )

    def test_sum_and_scaling(self):
        B = self.algebra.e(1, 2)
        v0 = self.algebra.vector([0.0, 0.0, 1.0, 0.0])
        v = rotation(B) + translation(v0).scaled(2.0)
        q = self.algebra.e(1)
        self.assertTrue(v(q).allclose(self.algebra.e(2) + 2.0 * v0))
        self.assertEqual(v.label, 'rotate+2*translate')

    def test_field_rotation(self):
        v = field_rotation(self.algebra.e(3, 4), D=2)
        self.assertEqual(v.label, 'rotate_y')
        with self.assertRaises(HamconAlgebraError):
            field_rotation(self.algebra.e(2, 3), D=2)

    def test_scaling_generator(self):
        v = anisotropic_scaling(self.algebra, axis=2)
        q = self.algebra.vector([1.0, 2.0, 3.0, 4.0])
        self.assertTrue(v(q).allclose(2.0 * self.algebra.e(2)))

    def test_bivector_from_spec(self):
        B = bivector_from_spec(self.algebra, {'plane': [1, 3], 'angle': 0.5})
        self.assertTrue(B.allclose(0.5 * self.algebra.e(1, 3)))
        B = bivector_from_spec(self.algebra, {'blades': [[0b1100, 2.0]]})
        self.assertTrue(B.allclose(2.0 * self.algebra.e(3, 4)))
        with self.assertRaises(HamconScenarioError):
            bivector_from_spec(self.algebra, {'plane': [2, 2]})
        with self.assertRaises(HamconScenarioError):
            bivector_from_spec(self.algebra, {'blades': [[1, 1.0]]})
        with self.assertRaises(HamconScenarioError):
            bivector_from_spec(self.algebra, {})

    def test_generator_from_spec(self):
        v, f = generator_from_spec(
            self.algebra, {'kind': 'translate', 'v0': [1, 0, 0, 0]}, 2
        )
        self.assertEqual(v.label, 'translate')
        self.assertEqual(f.label, 'translate')
        v, f = generator_from_spec(
            self.algebra,
            {'kind': 'rotate_x', 'plane': [1, 2], 'x0': [1, 1, 0, 0]},
            2,
        )
        self.assertEqual(v.label, 'rotate_x')
        self.assertTrue(f(self.algebra.vector([1, 1, 0, 0])).allclose(
            self.algebra.vector([1, 1, 0, 0])
        ))
        v, f = generator_from_spec(
            self.algebra, {'kind': 'rotate_y', 'plane': [3, 4]}, 2
        )
        self.assertEqual(f.label, 'rotate_y')

    def test_generator_from_spec_errors(self):
        for spec in (
            {'kind': 'custom'},
            {'kind': 'warp'},
            {'kind': 'rotate_x', 'plane': [1, 3]},
            {'kind': 'rotate_y', 'plane': [1, 3]},
            {'kind': 'scale', 'axis': 5},
            {'kind': 'translate', 'v0': [1, 0]},
        ):
            with self.assertRaises(HamconScenarioError, msg=str(spec)):
                generator_from_spec(self.algebra, spec, 2)
