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

import unittest

import numpy as np

from hamcon.dynamics import integrate_worldline
from hamcon.errors import (
    HamconAlgebraError,
    HamconDomainError,
    HamconIntegratorError,
    HamconRuntimeError,
    HamconScenarioError,
)
from hamcon.ga import Algebra
from hamcon.hamilton_jacobi import (
    HJSolution,
    SolutionFactory,
    conserved_from_family,
    curl_of_momentum,
    hj_residual,
    momentum_from_hj,
    motion_from_hj,
    plane_wave_string,
    probe_cloud,
    radial_string,
    weyl_hj_residual,
    weyl_plane_wave,
)
from hamcon.models import ScalarFieldModel, StringModel


class TestStringSolutions(unittest.TestCase):
    def setUp(self):
        self.model = StringModel(1.5, D=1, n=3)
        self.algebra = self.model.algebra
        self.rng = np.random.default_rng(11)
        self.radial = radial_string(1.5, [0.2, -0.1, 0.3])

    def test_radial_residual(self):
        probes = probe_cloud(
            self.radial, [-1] * 3, [1] * 3, 20, self.rng, margin=0.2
        )
        self.assertEqual(len(probes), 20)
        for q in probes:
            self.assertLess(abs(hj_residual(self.model, self.radial, q)),
                            1e-6)
            self.assertLess(curl_of_momentum(self.radial, q), 1e-6)

    def test_wrong_tension(self):
        sol = radial_string(3.0, [0.0, 0.0, 0.0])
        q = self.algebra.vector([0.3, 0.4, 0.0])
        # ½((2Λ)² − Λ²) = 1.5 Λ²
        self.assertAlmostEqual(
            hj_residual(self.model, sol, q), 1.5 * 1.5**2, places=5
        )

    def test_plane_wave(self):
        sol = plane_wave_string(1.5, [1.0, 2.0, -2.0])
        for q in probe_cloud(sol, [-2] * 3, [2] * 3, 10, self.rng):
            self.assertLess(abs(hj_residual(self.model, sol, q)), 1e-8)
            P = momentum_from_hj(sol, q)
            np.testing.assert_allclose(
                P.vector_part(), [0.5, 1.0, -1.0], atol=1e-8
            )

    def test_domain(self):
        q = self.algebra.vector([0.2005, -0.1, 0.3])
        with self.assertRaises(HamconDomainError):
            momentum_from_hj(self.radial, q)
        with self.assertRaises(HamconDomainError):
            probe_cloud(
                self.radial,
                [0.2 - 1e-4, -0.1 - 1e-4, 0.3 - 1e-4],
                [0.2 + 1e-4, -0.1 + 1e-4, 0.3 + 1e-4],
                5,
                self.rng,
            )
        self.assertFalse(
            self.radial.contains(self.algebra.vector([0.2, -0.1, 0.3]))
        )
        bounded = HJSolution(
            lambda q, alpha: 1.0, self.algebra, 1, 'bounded',
            lower=[0, 0, 0], upper=[1, 1, 1],
        )
        self.assertTrue(bounded.contains(self.algebra.vector([0.5] * 3)))
        self.assertFalse(
            bounded.contains(self.algebra.vector([0.5] * 3), margin=0.6)
        )

    def test_grade_checks(self):
        bad = HJSolution(lambda q, alpha: q, self.algebra, 1, 'bad')
        with self.assertRaises(HamconAlgebraError):
            bad(self.algebra.vector([1.0, 0.0, 0.0]))
        with self.assertRaises(HamconAlgebraError):
            self.radial(self.algebra.vector([1.0, 0.0, 0.0]), alpha=[0, 0])
        with self.assertRaises(HamconAlgebraError):
            hj_residual(
                self.model, weyl_plane_wave([[0.6, -1.3]]),
                Algebra(3).vector([0.1, 0.2, 0.3]),
            )
        with self.assertRaises(HamconAlgebraError):
            radial_string(1.0, [0.0, 0.0])
        with self.assertRaises(HamconAlgebraError):
            plane_wave_string(1.0, [0.0, 0.0, 0.0])

    def test_export(self):
        exported = self.radial.export()
        self.assertEqual(exported['label'], 'radial')
        self.assertEqual(exported['alpha'], [0.2, -0.1, 0.3])
        self.assertEqual(exported['params']['tension'], 1.5)


class TestCharacteristics(unittest.TestCase):
    def setUp(self):
        self.model = StringModel(1.5, D=1, n=3)
        self.algebra = self.model.algebra
        self.sol = radial_string(1.5, [0.0, 0.0, 0.0])
        self.q_start = self.algebra.vector([0.5, 0.0, 0.0])

    def test_motion_matches_integration(self):
        reconstructed = motion_from_hj(
            self.model, self.sol, self.q_start, 1.0, 0.1
        )
        integrated = integrate_worldline(
            self.model, self.q_start, self.algebra.vector([1.5, 0.0, 0.0]),
            1.0, 0.1,
        )
        self.assertEqual(len(reconstructed), len(integrated))
        np.testing.assert_allclose(
            reconstructed.points(), integrated.points(), atol=1e-8
        )
        for first, second in zip(reconstructed, integrated):
            self.assertTrue(first.P.allclose(second.P, atol=1e-6))

    def test_conserved_along_characteristic(self):
        w = motion_from_hj(self.model, self.sol, self.q_start, 1.0, 0.1)
        for index in range(3):
            self.assertLess(conserved_from_family(self.sol, w, index), 1e-6)
        transverse = integrate_worldline(
            self.model, self.q_start, self.algebra.vector([0.0, 1.5, 0.0]),
            1.0, 0.1,
        )
        self.assertGreater(
            conserved_from_family(self.sol, transverse, 0), 1e-3
        )
        with self.assertRaises(HamconRuntimeError):
            conserved_from_family(self.sol, w, 3)

    def test_motion_errors(self):
        model = StringModel(1.0, D=2, n=3)
        with self.assertRaises(HamconRuntimeError):
            motion_from_hj(model, self.sol, self.q_start, 1.0)
        with self.assertRaises(HamconIntegratorError):
            motion_from_hj(self.model, self.sol, self.q_start, -1.0)


class TestWeylSolutions(unittest.TestCase):
    def test_plane_wave_residual(self):
        model = ScalarFieldModel(D=2, N=1)
        sol = weyl_plane_wave([[0.6, -1.3]])
        rng = np.random.default_rng(12)
        for q in probe_cloud(sol, [-1] * 3, [1] * 3, 10, rng):
            self.assertLess(abs(weyl_hj_residual(model, sol, q)), 1e-8)

    def test_two_components(self):
        model = ScalarFieldModel(D=2, N=2)
        sol = weyl_plane_wave([[0.6, -1.3], [0.2, 0.4]], D=2, N=2)
        q = model.algebra.vector([0.1, -0.4, 0.7, 0.3])
        self.assertLess(abs(weyl_hj_residual(model, sol, q)), 1e-8)
        self.assertEqual(sol(q).grades(), [1])

    def test_shape(self):
        with self.assertRaises(HamconAlgebraError):
            weyl_plane_wave([[0.6, -1.3, 0.1]])


class TestSolutionFactory(unittest.TestCase):
    def test_generate(self):
        model = StringModel(2.0, D=1, n=4)
        sol = SolutionFactory.generate(
            {'name': 'radial', 'q0': [0, 0, 0, 1]}, model
        )
        self.assertEqual(sol.params['tension'], 2.0)
        self.assertEqual(sol.algebra, model.algebra)
        sol = SolutionFactory.generate(
            {'name': 'weyl_plane_wave', 'k': [[1.0, 0.0]]},
            ScalarFieldModel(D=2, N=1),
        )
        self.assertEqual(sol.D, 2)

    def test_generate_errors(self):
        model = StringModel(2.0)
        for spec in ({'name': 'spiral'}, {'q0': [0, 0, 0]}, [],
                     {'name': 'radial', 'q0': [0, 0]},
                     {'name': 'radial', 'q0': [0, 0, 0], 'speed': 1}):
            with self.assertRaises(HamconScenarioError, msg=str(spec)):
                SolutionFactory.generate(spec, model)

    def test_names(self):
        self.assertEqual(
            SolutionFactory.names(),
            ['plane_wave', 'radial', 'weyl_plane_wave'],
        )
