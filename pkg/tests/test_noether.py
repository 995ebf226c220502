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
import tempfile
import unittest
from pathlib import Path

import numpy as np

from hamcon.dynamics import (
    FieldGrid,
    integrate_worldline,
    recover_momentum,
    solve_scalar_field,
)
from hamcon.errors import HamconDomainError, HamconRuntimeError
from hamcon.models import ScalarFieldModel, StringModel
from hamcon.utils import halving_orders
from hamcon.noether import (
    SpacetimeCurrent,
    charge_along_worldline,
    circle_flux,
    continuity_residual,
    energy_momentum_current,
    field_rotation_current,
    finite_symmetry_check,
    flux_through_patch_boundary,
    grid_patch_flux,
    grid_patch_loop,
    random_samples,
    rotation_currents,
    spacetime_rotation_current,
    string_charge_consistency,
    symmetry_defect,
)
from hamcon.transforms import (
    anisotropic_scaling,
    field_rotation,
    rotate_diffeo,
    rotation,
    scaling_diffeo,
    translation,
)


class TestSymmetryDefect(unittest.TestCase):
    def setUp(self):
        self.model = StringModel(1.0, D=1, n=3)
        self.algebra = self.model.algebra
        self.samples = random_samples(
            self.model, 20, np.random.default_rng(5)
        )

    def test_samples_on_constraint(self):
        self.assertEqual(len(self.samples), 20)
        for q, P in self.samples:
            self.assertLess(abs(self.model.eval(q, P)), 1e-12)

    def test_string_symmetries(self):
        generators = [
            translation(self.algebra.vector([1.0, -2.0, 0.5])),
            rotation(self.algebra.e(1, 2)),
            rotation(
                self.algebra.e(2, 3) - 0.3 * self.algebra.e(1, 3),
                self.algebra.vector([1.0, 1.0, 0.0]),
            ),
        ]
        for v in generators:
            for q, P in self.samples:
                self.assertLess(
                    abs(symmetry_defect(self.model, v, q, P)), 1e-12
                )

    def test_scaling_is_broken(self):
        v = anisotropic_scaling(self.algebra, 1)
        q = self.algebra.zero()
        P = self.algebra.vector([1.0, 0.0, 0.0])
        self.assertAlmostEqual(symmetry_defect(self.model, v, q, P), -1.0)
        defects = [
            abs(symmetry_defect(self.model, v, q, P))
            for q, P in self.samples
        ]
        self.assertGreater(max(defects), 1e-3)

    def test_field_rotation(self):
        rng = np.random.default_rng(6)
        B_y = ScalarFieldModel(D=2, N=2).algebra.e(3, 4)
        v = field_rotation(B_y, 2)
        symmetric = ScalarFieldModel(D=2, N=2, potential='quartic(1, 2)')
        for q, P in random_samples(symmetric, 10, rng):
            self.assertLess(abs(symmetry_defect(symmetric, v, q, P)), 1e-10)
        tilted = ScalarFieldModel(D=2, N=2, potential='tilt(1, 1)')
        defects = [
            abs(symmetry_defect(tilted, v, q, P))
            for q, P in random_samples(tilted, 10, rng)
        ]
        self.assertGreater(max(defects), 1e-3)

    def test_finite_checks(self):
        report = finite_symmetry_check(
            self.model, rotate_diffeo(0.7 * self.algebra.e(1, 3)),
            self.samples,
        )
        self.assertEqual(report.samples, 20)
        self.assertLess(report.max_defect, 1e-10)
        report = finite_symmetry_check(
            self.model, scaling_diffeo(self.algebra, 1, 2.0), self.samples
        )
        self.assertGreater(report.max_defect, 1e-3)
        self.assertEqual(report.export()['generator'], 'scale')


class TestCharges(unittest.TestCase):
    def setUp(self):
        self.model = StringModel(1.0, D=1, n=3)
        self.algebra = self.model.algebra
        self.w = integrate_worldline(
            self.model,
            self.algebra.vector([0.0, 1.0, 0.0]),
            self.algebra.vector([1.0, 0.0, 0.0]),
            2.0,
            0.25,
        )

    def test_angular_momentum(self):
        series = charge_along_worldline(self.w, rotation(self.algebra.e(1, 2)))
        self.assertEqual(len(series.charges), len(self.w))
        self.assertLess(series.spread, 1e-10)
        self.assertAlmostEqual(series.charges[0].value.scalar_part(), -1.0)
        self.assertEqual(series.export()['generator'], 'rotate')

    def test_momentum(self):
        v = translation(self.algebra.vector([0.0, 0.0, 1.0]))
        series = charge_along_worldline(self.w, v)
        self.assertLess(series.spread, 1e-10)
        self.assertAlmostEqual(series.charges[-1].value.scalar_part(), 0.0)

    def test_string_consistency(self):
        v = translation(self.algebra.vector([1.0, 0.0, 0.0]))
        self.assertLess(string_charge_consistency(self.w, v, 1.0), 1e-10)
        self.assertAlmostEqual(
            string_charge_consistency(self.w, v, 1.0, sign=-1.0), 2.0
        )


def two_harmonics(x):
    return np.array([np.exp(x[0]) * np.sin(x[1]), x[0] * x[1]])


class TestCurrents(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.model = ScalarFieldModel(D=2, N=1)
        grid = FieldGrid.from_boundary(
            lambda x: np.exp(x[0]) * np.sin(x[1]), (0, 0), (1, 1), (33, 33)
        )
        cls.solved = solve_scalar_field(grid, cls.model)

    def test_energy_momentum_routes(self):
        model = ScalarFieldModel(D=2, N=1, potential='mass(1.5)')
        grid = recover_momentum(
            FieldGrid.from_function(
                lambda x: np.sin(x[0]) * x[1], (0, 0), (1, 1), (9, 9)
            ),
            model,
        )
        for v_x in ([1.0, 0.0], [0.3, -0.8]):
            lagrangian = energy_momentum_current(grid, model, v_x)
            momentum = energy_momentum_current(
                grid, model, v_x, route='momentum'
            )
            np.testing.assert_allclose(
                momentum.j, lagrangian.j, atol=1e-10
            )
            self.assertLess(momentum.leakage, 1e-12)
            self.assertEqual(momentum.params, {'v_x': v_x})

    def test_rotation_routes(self):
        model = ScalarFieldModel(D=2, N=2)
        grid = recover_momentum(
            FieldGrid.from_function(two_harmonics, (0, 0), (1, 1), (9, 9)),
            model,
        )
        B_x = model.algebra.e(1, 2)
        x0 = [0.5, 0.5]
        np.testing.assert_allclose(
            spacetime_rotation_current(grid, model, B_x, x0,
                                       route='momentum').j,
            spacetime_rotation_current(grid, model, B_x, x0).j,
            atol=1e-10,
        )
        B_y = model.algebra.e(3, 4)
        lagrangian = field_rotation_current(grid, model, B_y)
        momentum = field_rotation_current(grid, model, B_y, route='momentum')
        np.testing.assert_allclose(momentum.j, lagrangian.j, atol=1e-10)
        self.assertEqual(lagrangian.label, 'rotate_y')
        # j = φ₂ ∂φ₁ − φ₁ ∂φ₂
        phi = grid.phi
        gradients = grid.gradients()
        np.testing.assert_allclose(
            lagrangian.j,
            phi[1] * gradients[0] - phi[0] * gradients[1],
            atol=1e-12,
        )

    def test_rotation_currents_dispatch(self):
        model = ScalarFieldModel(D=2, N=2)
        grid = recover_momentum(
            FieldGrid.from_function(two_harmonics, (0, 0), (1, 1), (5, 5)),
            model,
        )
        current = rotation_currents(grid, model, B_y=model.algebra.e(3, 4))
        self.assertEqual(current.label, 'rotate_y')
        current = rotation_currents(grid, model, B_x=model.algebra.e(1, 2))
        self.assertEqual(current.label, 'rotate_x')
        with self.assertRaises(HamconRuntimeError):
            rotation_currents(grid, model)
        with self.assertRaises(HamconRuntimeError):
            rotation_currents(
                grid, model, B_x=model.algebra.e(1, 2),
                B_y=model.algebra.e(3, 4),
            )
        with self.assertRaises(HamconRuntimeError):
            energy_momentum_current(grid, model, [1.0, 0.0], route='other')

    def test_continuity(self):
        for current in (
            energy_momentum_current(self.solved, self.model, [1.0, 0.0]),
            energy_momentum_current(self.solved, self.model, [0.0, 1.0]),
            spacetime_rotation_current(
                self.solved, self.model, self.model.algebra.e(1, 2),
                [0.5, 0.5],
            ),
        ):
            report = continuity_residual(current)
            self.assertLess(report.max, 5e-2, current.label)
            self.assertEqual(report.margin, 2)

    def test_patch_flux(self):
        v = translation(self.model.algebra.vector([1.0, 0.0, 0.0]))
        flux = grid_patch_flux(self.solved, self.model, v, (4, 4), (28, 28))
        self.assertLess(abs(flux), 1e-2)
        current = energy_momentum_current(self.solved, self.model, [1.0, 0.0])
        self.assertLess(abs(circle_flux(current, (0.5, 0.5), 0.3)), 1e-2)

    def test_manual_current(self):
        grid = FieldGrid.from_function(
            lambda x: 0.0 * x[0], (-1, -1), (1, 1), (9, 9)
        )
        current = SpacetimeCurrent(grid.coords(), grid, 'radial')
        self.assertAlmostEqual(
            circle_flux(current, (0.0, 0.0), 0.5), 2 * math.pi * 0.25
        )
        self.assertAlmostEqual(continuity_residual(current).max, 2.0)
        with self.assertRaises(HamconDomainError):
            circle_flux(current, (0.8, 0.0), 0.5)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir, 'current.csv')
            current.dump_csv(path)
            lines = path.read_text().splitlines()
        self.assertEqual(lines[0], 'x1,x2,j1,j2')
        self.assertEqual(len(lines), 82)

    def test_small_grid(self):
        grid = FieldGrid.from_function(
            lambda x: 0.0 * x[0], (0, 0), (1, 1), (4, 4)
        )
        current = SpacetimeCurrent(grid.coords(), grid, 'radial')
        with self.assertRaises(HamconDomainError):
            continuity_residual(current)
        self.assertAlmostEqual(continuity_residual(current, margin=1).max, 2.0)


class TestRefinement(unittest.TestCase):
    """Harmonic field e^x sin y solved on three grids of halved spacing,
    with the residuals measured over fixed regions of the square."""

    LEVELS = (17, 33, 65)

    @classmethod
    def setUpClass(cls):
        cls.model = ScalarFieldModel(D=2, N=1)
        cls.solved = [
            solve_scalar_field(
                FieldGrid.from_boundary(
                    lambda x: np.exp(x[0]) * np.sin(x[1]),
                    (0, 0), (1, 1), (nodes, nodes),
                ),
                cls.model,
            )
            for nodes in cls.LEVELS
        ]

    def test_continuity_order(self):
        for v_x in ([1.0, 0.0], [0.0, 1.0]):
            residuals = []
            for nodes, grid in zip(self.LEVELS, self.solved):
                current = energy_momentum_current(grid, self.model, v_x)
                # margin of an eighth of the square on every grid
                report = continuity_residual(
                    current, margin=(nodes - 1) // 8
                )
                residuals.append(report.max)
            for order in halving_orders(residuals):
                self.assertGreaterEqual(order, 1.8, v_x)

    def test_patch_flux_order(self):
        v = translation(self.model.algebra.vector([1.0, 0.0, 0.0]))
        fluxes = []
        for nodes, grid in zip(self.LEVELS, self.solved):
            quarter = (nodes - 1) // 4
            fluxes.append(
                abs(
                    grid_patch_flux(
                        grid, self.model, v, (quarter, quarter),
                        (3 * quarter, 3 * quarter),
                    )
                )
            )
        self.assertLess(fluxes[-1], fluxes[0])
        for order in halving_orders(fluxes):
            self.assertGreaterEqual(order, 1.8)


class TestPatchLoops(unittest.TestCase):
    def setUp(self):
        self.grid = FieldGrid.from_function(
            lambda x: x[0] + x[1], (0, 0), (1, 1), (5, 5)
        )

    def test_loop(self):
        loop = grid_patch_loop(self.grid, (1, 1), (3, 3))
        self.assertEqual(len(loop), 8)
        self.assertEqual(loop[0], (1, 1))
        self.assertEqual(loop[2], (3, 1))
        self.assertEqual(len(set(loop)), 8)
        with self.assertRaises(HamconDomainError):
            grid_patch_loop(self.grid, (3, 1), (1, 3))
        with self.assertRaises(HamconDomainError):
            grid_patch_loop(self.grid, (0, 0), (5, 4))

    def test_constant_charge_flux(self):
        # closed loops carry no flux of a constant charge
        model = ScalarFieldModel(D=2, N=1)
        algebra = model.algebra
        points = [
            algebra.vector(p)
            for p in ([0, 0, 0], [1, 0, 0.5], [1, 1, 1], [0, 1, 0.2])
        ]
        momenta = [algebra.e(1, 3)] * 4
        v = translation(algebra.vector([0.0, 0.0, 1.0]))
        self.assertAlmostEqual(
            flux_through_patch_boundary(points, momenta, v), 0.0
        )
        with self.assertRaises(HamconRuntimeError):
            flux_through_patch_boundary(points[:2], momenta[:2], v)
