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

from hamcon.conf import RuntimeConf
from hamcon.dynamics import integrate_worldline
from hamcon.errors import HamconAlgebraError, HamconScenarioError
from hamcon.models import (
    MassPotential,
    ModelFactory,
    PotentialFactory,
    QuarticPotential,
    ScalarFieldModel,
    StringModel,
    TiltPotential,
    check_model_derivatives,
    dw_conditions_check,
    eval_action,
    field_values,
)


class TestStringModel(unittest.TestCase):
    def setUp(self):
        self.model = StringModel(1.5, D=1, n=3)
        self.rng = np.random.default_rng(0)

    def test_invalid(self):
        with self.assertRaises(HamconAlgebraError):
            StringModel(0.0)
        with self.assertRaises(HamconAlgebraError):
            StringModel(1.0, D=2, n=1)

    def test_eval(self):
        q = self.model.algebra.zero()
        P = self.model.algebra.vector([1.5, 0.0, 0.0])
        self.assertEqual(self.model.eval(q, P), 0.0)
        P = self.model.algebra.vector([0.0, 3.0, 0.0])
        self.assertAlmostEqual(self.model.eval(q, P), 0.5 * (9.0 - 2.25))

    def test_closed_form_projection(self):
        q = self.model.random_point(self.rng)
        P = self.model.random_momentum(self.rng)
        projected = self.model.closed_form_projection(q, P)
        self.assertAlmostEqual(self.model.eval(q, projected), 0.0)

    def test_derivatives(self):
        for model in (self.model, StringModel(1.0, D=2, n=4)):
            report = check_model_derivatives(model, trials=20, rng=self.rng)
            self.assertTrue(report.passed, report.export())
            self.assertEqual(
                report.tolerance, RuntimeConf().numerics.derivative_tol
            )

    def test_export(self):
        self.assertEqual(
            self.model.export(), {'type': 'string', 'D': 1, 'N': 2,
                                  'tension': 1.5}
        )

    def test_action_on_constraint(self):
        q0 = self.model.algebra.zero()
        P0 = self.model.algebra.vector([1.5, 0.0, 0.0])
        w = integrate_worldline(self.model, q0, P0, 2.0, 0.1)
        samples = list(w)[:-1]
        action = eval_action(
            w, [s.P for s in samples], [s.lam for s in samples], self.model
        )
        self.assertAlmostEqual(action, 1.5 * 2.0)


class TestScalarFieldModel(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(1)

    def test_invalid(self):
        with self.assertRaises(HamconAlgebraError):
            ScalarFieldModel(D=1)
        with self.assertRaises(HamconAlgebraError):
            ScalarFieldModel(N=0)
        with self.assertRaises(HamconAlgebraError):
            ScalarFieldModel(orientation=2)

    def test_structure(self):
        model = ScalarFieldModel(D=2, N=2, potential='mass(2)')
        self.assertTrue(model.I_x.allclose(model.algebra.e(1, 2)))
        self.assertEqual(model.I_x_square, -1.0)
        self.assertEqual(len(model.field_basis), 2)
        # e13, e23, e14 and e24
        self.assertEqual(int(np.sum(model.mixed_mask)), 4)
        q = model.algebra.vector([0.1, 0.2, 3.0, 4.0])
        np.testing.assert_array_equal(field_values(model, q), [3.0, 4.0])
        self.assertAlmostEqual(model.potential_value(q), 0.5 * 4 * 25)

    def test_derivatives(self):
        for potential in ('zero', 'mass(1.3)', 'quartic(1, 0.5)',
                          'tilt(1, 0.7)'):
            for orientation in (1, -1):
                model = ScalarFieldModel(
                    D=2, N=2, potential=potential, orientation=orientation
                )
                report = check_model_derivatives(
                    model, trials=10, rng=self.rng
                )
                self.assertTrue(report.passed, report.export())
        model = ScalarFieldModel(D=3, N=1, potential='mass(1)')
        self.assertTrue(check_model_derivatives(model, trials=10).passed)

    def test_dw_conditions(self):
        model = ScalarFieldModel(D=2, N=2, potential='quartic(1, 1)')
        report = dw_conditions_check(model, trials=10, rng=self.rng)
        self.assertLess(report.max_violation, 1e-8)

    def test_closed_form_projection(self):
        model = ScalarFieldModel(D=2, N=1, potential='mass(1)',
                                 orientation=-1)
        q = model.random_point(self.rng)
        P = model.random_momentum(self.rng)
        projected = model.closed_form_projection(q, P)
        self.assertAlmostEqual(model.eval(q, projected), 0.0, places=12)
        # only the pseudoscalar component moves
        self.assertTrue(
            model.mixed_part(projected).allclose(model.mixed_part(P))
        )

    def test_field_gradients(self):
        model = ScalarFieldModel(D=2, N=1)
        e = model.algebra.e
        P = 0.4 * e(2, 3) - 0.7 * e(1, 3)
        np.testing.assert_allclose(model.field_gradients(P), [[0.4, 0.7]])


class TestPotentials(unittest.TestCase):
    def test_generate_from_string(self):
        potential = PotentialFactory.generate('mass(2)')
        self.assertIsInstance(potential, MassPotential)
        self.assertEqual(potential.m, 2.0)
        potential = PotentialFactory.generate('quartic(1, 0.5)')
        self.assertIsInstance(potential, QuarticPotential)
        self.assertEqual(potential.label, 'quartic(1, 0.5)')
        self.assertEqual(PotentialFactory.generate('zero').label, 'zero()')

    def test_generate_from_mapping(self):
        potential = PotentialFactory.generate({'name': 'tilt', 'c': 2.0})
        self.assertIsInstance(potential, TiltPotential)
        self.assertEqual(potential.params(), {'m': 1.0, 'c': 2.0})
        self.assertFalse(potential.ROTATION_INVARIANT)

    def test_generate_errors(self):
        for spec in ('nope(1)', 'mass(a)', 'mass(1, 2, 3)', {'m': 1.0},
                     {'name': 'mass', 'k': 1.0}, 3.0):
            with self.assertRaises(HamconScenarioError, msg=str(spec)):
                PotentialFactory.generate(spec)

    def test_gradients(self):
        phi = np.array([0.3, -1.2])
        h = 1e-6
        for potential in (MassPotential(1.5), QuarticPotential(1.0, 0.8),
                          TiltPotential(0.5, 2.0)):
            gradient = potential.gradient(phi)
            hessian = potential.hessian_diag(phi)
            for a in range(2):
                step = np.zeros(2)
                step[a] = h
                fd = (potential.value(phi + step)
                      - potential.value(phi - step)) / (2 * h)
                self.assertAlmostEqual(gradient[a], fd, places=6)
                fd = (potential.gradient(phi + step)[a]
                      - potential.gradient(phi - step)[a]) / (2 * h)
                self.assertAlmostEqual(hessian[a], fd, places=6)

    def test_grid_evaluation(self):
        potential = MassPotential(2.0)
        phi = np.ones((2, 3, 4))
        self.assertEqual(potential.value(phi).shape, (3, 4))
        np.testing.assert_allclose(potential.value(phi), 4.0)


class TestModelFactory(unittest.TestCase):
    def test_generate(self):
        model = ModelFactory.generate(
            {'type': 'string', 'tension': 2.0, 'D': 2, 'n': 3}
        )
        self.assertIsInstance(model, StringModel)
        self.assertEqual(model.D, 2)
        model = ModelFactory.generate(
            {'type': 'scalar_field', 'N': 2, 'potential': 'mass(1)'}
        )
        self.assertIsInstance(model, ScalarFieldModel)
        self.assertEqual(model.algebra.n, 4)

    def test_generate_errors(self):
        for spec in ({'type': 'membrane'}, {'tension': 1.0}, 'string',
                     {'type': 'string', 'tension': -1.0},
                     {'type': 'string', 'tension': 1.0, 'color': 'red'}):
            with self.assertRaises(HamconScenarioError, msg=str(spec)):
                ModelFactory.generate(spec)

    def test_descriptions(self):
        self.assertEqual(ModelFactory.names(), ['scalar_field', 'string'])
        for name in ModelFactory.names():
            self.assertTrue(ModelFactory.description(name))
