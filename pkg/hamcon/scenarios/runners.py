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

import csv
import time
from pathlib import Path

import numpy as np

from ..errors import (
    HamconAlgebraError,
    HamconDomainError,
    HamconRuntimeError,
    HamconScenarioError,
    HamconSolverError,
)
from ..log import logr
from ..results import CheckResult
from ..models import ModelFactory
from ..dynamics import (
    Worldline,
    WorldlineSample,
    constraint_violation,
    field_bivector_violation,
    integrate_worldline,
    lagrangian_action_check,
    line_fit_deviation,
    mean_curvature_residual,
    project_to_constraint,
    relax_minimal_surface,
    solve_scalar_field,
    string_to_scalar_limit,
)
from ..noether import (
    charge_along_worldline,
    continuity_residual,
    energy_momentum_current,
    field_rotation_current,
    finite_symmetry_check,
    grid_patch_flux,
    grid_patch_loop,
    random_samples,
    spacetime_rotation_current,
    string_charge_consistency,
    symmetry_defect,
)
from ..hamilton_jacobi import (
    SolutionFactory,
    conserved_from_family,
    curl_of_momentum,
    hj_residual,
    motion_from_hj,
    probe_cloud,
    weyl_hj_residual,
)
from ..transforms import (
    bivector_from_spec,
    field_rotation,
    generator_from_spec,
    rotation,
    translation,
)
from .geometry import grid_from_spec, mesh_from_spec
from .report import RunReport

logger = logr(__name__)


def _format(value):
    if isinstance(value, str):
        return value
    return f"{value:.17g}"


def worldline_header(model):
    n = model.algebra.n
    return (
        ['s']
        + [f"q{i + 1}" for i in range(n)]
        + [f"P{blade:0{n}b}" for blade in range(model.algebra.blade_count)]
        + ['lambda']
    )


class ScenarioRunner:
    """Generic parent class of scenario runners. Specialized classes
    validate their model and geometry in prepare(), before anything is
    written, and run the computations and checks in execute()."""

    KIND = None
    MODEL_TYPE = None
    # check name: (default tolerance, comparison)
    CHECKS = {}

    def __init__(self, config):
        self.config = config
        self.geometry = config.geometry
        self.rng = np.random.default_rng(config.seed)
        self.model = ModelFactory.generate(self._model_spec())
        if self.MODEL_TYPE is not None and self.model.TYPE != self.MODEL_TYPE:
            raise HamconScenarioError(
                f"{self.KIND} scenarios require a {self.MODEL_TYPE} model"
            )
        unknown = set(config.checks) - set(self.CHECKS)
        if unknown:
            raise HamconScenarioError(
                f"unknown checks {', '.join(sorted(unknown))} for "
                f"{self.KIND} scenarios"
            )
        self.report = RunReport(config)
        self.outdir = None
        try:
            self.prepare()
        except (HamconAlgebraError, HamconDomainError) as err:
            raise HamconScenarioError(str(err))

    def _model_spec(self):
        spec = dict(self.config.model)
        if spec.get('type') == 'scalar_field':
            spec.setdefault(
                'orientation', self.config.conventions['orientation']
            )
        return spec

    def prepare(self):
        pass

    def execute(self):
        raise NotImplementedError

    def check(self, name, value, key=None):
        """Records the check of value against the tolerance of key, name
        being the default key."""
        key = name if key is None else key
        tolerance, comparison = self.CHECKS[key]
        tolerance = self.config.checks.get(key, tolerance)
        result = CheckResult(name, value, tolerance, comparison)
        self.report.checks.append(result)
        if result.passed:
            logger.info("%s", result)
        else:
            logger.warning("%s", result)
        return result

    def artifact(self, name) -> Path:
        self.report.artifacts.append(name)
        return self.outdir / name

    def write_rows(self, name, header, rows):
        """Writes a CSV artifact, floats being written with all their
        significant digits."""
        with open(self.artifact(name), 'w', newline='') as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for row in rows:
                writer.writerow([_format(value) for value in row])

    def run(self, outdir: Path) -> RunReport:
        """Runs the scenario, writing artifacts and the report in outdir.
        Solver and evaluation failures are recorded in the report."""
        self.outdir = Path(outdir)
        self.outdir.mkdir(parents=True, exist_ok=True)
        logger.info(
            "Running %s scenario %s with %s",
            self.KIND,
            self.config.name,
            self.model.label,
        )
        start = time.monotonic()
        try:
            self.execute()
        except HamconScenarioError:
            raise
        except (HamconSolverError, HamconRuntimeError) as err:
            self._fail(err)
        except Exception as err:
            logger.debug("Unexpected error traceback", exc_info=True)
            self._fail(
                HamconRuntimeError(
                    f"unexpected {type(err).__name__} in {self.KIND} "
                    f"scenario: {err}"
                )
            )
        finally:
            self.report.wall_clock = time.monotonic() - start
            self.report.write(self.outdir)
        return self.report

    def _fail(self, err):
        logger.error("%s scenario %s failed: %s", self.KIND,
                     self.config.name, err)
        self.report.set_error(err)
        self._dump_partial(getattr(err, 'diagnostics', None) or {})

    def _dump_partial(self, diagnostics):
        worldline = diagnostics.get('worldline')
        if isinstance(worldline, Worldline):
            self.write_rows(
                'partial-worldline.csv',
                worldline_header(self.model),
                worldline.rows(),
            )


class ParticleRunner(ScenarioRunner):
    """Free relativistic particles: integrated worldlines are checked to be
    straight lines conserving the Noether charges of random Euclidean
    generators, and the first one is reconstructed from the radial
    Hamilton-Jacobi solution centered behind its starting point."""

    KIND = 'particle'
    MODEL_TYPE = 'string'
    CHECKS = {
        'line_fit_deviation': (1e-8, 'le'),
        'constraint_drift': (1e-8, 'le'),
        'charge_spread': (1e-8, 'le'),
        'charge_consistency': (1e-8, 'le'),
        'hj_reconstruction': (1e-6, 'le'),
        'family_conservation': (1e-6, 'le'),
    }

    def prepare(self):
        if self.model.D != 1:
            raise HamconScenarioError("particle scenarios require D=1")
        self.trajectories = int(self.geometry.get('trajectories', 1))
        self.length = float(self.geometry.get('length', 10.0))
        self.step = self.geometry.get('step')
        self.generator_count = int(self.geometry.get('generators', 5))
        if self.trajectories < 1 or self.generator_count < 0:
            raise HamconScenarioError(
                "particle scenarios need at least one trajectory"
            )

    def _oriented(self, w: Worldline) -> Worldline:
        """Returns the worldline traversed in the direction selected by the
        λ sign convention."""
        if self.config.conventions['lambda_sign'] > 0:
            return w
        return Worldline(
            [WorldlineSample(s.q, s.P, -s.lam) for s in reversed(list(w))],
            w.step,
        )

    def execute(self):
        algebra = self.model.algebra
        sign = self.config.conventions['lambda_sign']
        generators = [
            rotation(algebra.random(self.rng, grades=(2,)))
            + translation(algebra.random(self.rng, grades=(1,)))
            for _ in range(self.generator_count)
        ]
        summary = []
        first = None
        for index in range(self.trajectories):
            q0 = self.model.random_point(self.rng)
            P0 = project_to_constraint(
                self.model, q0, self.model.random_momentum(self.rng)
            )
            w = integrate_worldline(
                self.model, q0, P0, self.length, self.step
            )
            oriented = self._oriented(w)
            spread = max(
                (charge_along_worldline(w, v).spread for v in generators),
                default=0.0,
            )
            consistency = max(
                (
                    string_charge_consistency(
                        oriented, v, self.model.tension, sign
                    )
                    for v in generators
                ),
                default=0.0,
            )
            summary.append(
                [
                    index,
                    line_fit_deviation(w.points()),
                    w.max_constraint(self.model),
                    spread,
                    consistency,
                ]
            )
            if first is None:
                first = w
                self.write_rows(
                    'worldline.csv',
                    worldline_header(self.model),
                    oriented.rows(),
                )
        self.write_rows(
            'trajectories.csv',
            [
                'trajectory',
                'line_fit_deviation',
                'constraint_drift',
                'charge_spread',
                'charge_consistency',
            ],
            summary,
        )
        table = np.array([row[1:] for row in summary])
        self.check('line_fit_deviation', table[:, 0].max())
        self.check('constraint_drift', table[:, 1].max())
        self.check('charge_spread', table[:, 2].max())
        self.check('charge_consistency', table[:, 3].max())
        self._hj_cross_check(first)

    def _hj_cross_check(self, w: Worldline):
        q0, P0 = w[0].q, w[0].P
        center = q0 - P0.normalized()
        sol = SolutionFactory.generate(
            {'name': 'radial', 'q0': center.vector_part()}, self.model
        )
        reconstructed = motion_from_hj(
            self.model, sol, q0, self.length, w.step
        )
        self.write_rows(
            'hj-reconstruction.csv',
            worldline_header(self.model),
            reconstructed.rows(),
        )
        self.check(
            'hj_reconstruction',
            float(
                np.max(
                    np.linalg.norm(reconstructed.points() - w.points(), axis=1)
                )
            ),
        )
        self.check(
            'family_conservation',
            max(
                conserved_from_family(sol, w, index)
                for index in range(self.model.algebra.n)
            ),
        )


class StringRunner(ScenarioRunner):
    """Nambu-Goto strings: the mesh is relaxed to a minimal surface and
    compared with the analytic area when known. A flat disk must be left
    untouched. The optional limit section sweeps the string to scalar field
    reduction of nearly flat graphs."""

    KIND = 'string'
    MODEL_TYPE = 'string'
    CHECKS = {
        'area_relative_error': (1e-2, 'le'),
        'max_curvature': (1e-3, 'le'),
        'fixed_point_displacement': (1e-12, 'le'),
        'limit_exponent': (3.5, 'ge'),
    }

    def prepare(self):
        if self.model.D != 2:
            raise HamconScenarioError("string scenarios require D=2")
        self.mesh, self.reference_area = mesh_from_spec(
            self.geometry, self.model.algebra.n
        )
        self.limit = self.geometry.get('limit')
        if self.limit is not None and not isinstance(self.limit, dict):
            raise HamconScenarioError("limit must be a mapping")

    def execute(self):
        relaxed, diagnostics = relax_minimal_surface(
            self.mesh, self.model.tension, tol=self.geometry.get('tol')
        )
        relaxed.dump(self.artifact('mesh.yml'))
        self.write_rows(
            'relaxation.csv',
            ['iteration', 'area'],
            enumerate(diagnostics.areas),
        )
        curvature, max_curvature = mean_curvature_residual(relaxed)
        self.write_rows(
            'curvature.csv',
            ['vertex']
            + [f"q{i + 1}" for i in range(self.model.algebra.n)]
            + ['mean_curvature'],
            (
                [index] + list(vertex) + [value]
                for index, (vertex, value) in enumerate(
                    zip(relaxed.vertices, curvature)
                )
            ),
        )
        self.report.diagnostics['relaxation'] = diagnostics.export()
        if self.reference_area is not None:
            self.check(
                'area_relative_error',
                abs(diagnostics.final_area - self.reference_area)
                / self.reference_area,
            )
        self.check('max_curvature', max_curvature)
        if self.geometry.get('mesh') == 'planar_disk':
            self.check(
                'fixed_point_displacement',
                float(np.max(np.abs(relaxed.vertices - self.mesh.vertices))),
            )
        if self.limit is not None:
            self._limit()

    def _limit(self):
        kwargs = {'tension': self.model.tension}
        if 'amplitudes' in self.limit:
            kwargs['amplitudes'] = [float(a) for a in self.limit['amplitudes']]
        if 'nodes' in self.limit:
            kwargs['nodes'] = int(self.limit['nodes'])
        report = string_to_scalar_limit(**kwargs)
        self.write_rows(
            'limit.csv',
            ['amplitude', 'string_action', 'field_action', 'difference'],
            zip(
                report.amplitudes,
                report.string_actions,
                report.field_actions,
                report.differences,
            ),
        )
        self.check('limit_exponent', report.exponent)


class FieldRunner(ScenarioRunner):
    """Scalar fields on a D=2 grid: the field equations are solved with
    boundary data taken from an exact solution, the momentum is recovered,
    and the Noether currents of the configured generators are checked for
    conservation, route agreement and vanishing flux through a patch."""

    KIND = 'field'
    MODEL_TYPE = 'scalar_field'
    CHECKS = {
        'oracle_error': (5e-3, 'le'),
        'constraint_violation': (1e-10, 'le'),
        'bivector_violation': (1e-14, 'le'),
        'continuity_residual': (5e-2, 'le'),
        'route_agreement': (1e-10, 'le'),
        'patch_flux': (1e-2, 'le'),
        'action_relative_difference': (1e-2, 'le'),
    }

    def prepare(self):
        self.grid, self.exact = grid_from_spec(self.geometry, self.model)
        self.currents = [
            self._current_spec(spec)
            for spec in self.geometry.get('currents', [])
        ]
        self.patch = self.geometry.get('patch')
        if self.patch is not None:
            grid_patch_loop(self.grid, *self.patch)

    def _lift(self, values):
        """Returns the configuration space vector of spacetime components
        values."""
        return self.model.algebra.vector(
            np.concatenate([values, np.zeros(self.model.N)])
        )

    def _current_spec(self, spec):
        """Returns the label, the current builder and the configuration
        space generator of a current definition."""
        algebra = self.model.algebra
        D = self.model.D
        kind = spec.get('kind') if isinstance(spec, dict) else None
        if kind == 'translate':
            v0 = np.asarray(spec.get('v0', []), dtype=float)
            if v0.shape != (D,):
                raise HamconScenarioError(
                    f"current translation needs {D} components"
                )
            vector = self._lift(v0)
            return (
                'translate',
                lambda grid, route: energy_momentum_current(
                    grid, self.model, v0, route
                ),
                translation(vector),
            )
        if kind == 'rotate_x':
            B = bivector_from_spec(algebra, spec)
            x0 = np.asarray(spec.get('x0', [0.0] * D), dtype=float)
            if x0.shape != (D,):
                raise HamconScenarioError(
                    f"current rotation center needs {D} components"
                )
            center = self._lift(x0)
            # validates B lies in the spacetime subspace
            generator_from_spec(algebra, {**spec, 'x0': None}, D)
            return (
                'rotate_x',
                lambda grid, route: spacetime_rotation_current(
                    grid, self.model, B, x0, route
                ),
                rotation(B, center),
            )
        if kind == 'rotate_y':
            B = bivector_from_spec(algebra, spec)
            return (
                'rotate_y',
                lambda grid, route: field_rotation_current(
                    grid, self.model, B, route
                ),
                field_rotation(B, D),
            )
        raise HamconScenarioError(
            f"unknown current kind {kind}, expected one of rotate_x, "
            "rotate_y, translate"
        )

    def execute(self):
        solved = solve_scalar_field(
            self.grid, self.model, tol=self.geometry.get('tol')
        )
        self.report.diagnostics['solver'] = dict(solved.diagnostics)
        solved.dump_csv(self.artifact('field.csv'), self.model)
        self.check(
            'oracle_error', float(np.max(np.abs(solved.phi - self.exact.phi)))
        )
        self.check(
            'constraint_violation', constraint_violation(solved, self.model)
        )
        self.check(
            'bivector_violation', field_bivector_violation(solved, self.model)
        )
        for index, (label, build, generator) in enumerate(self.currents):
            current = build(solved, 'lagrangian')
            pullback = build(solved, 'momentum')
            current.dump_csv(self.artifact(f"current-{index}-{label}.csv"))
            self.check(
                f"continuity_residual[{index}:{label}]",
                continuity_residual(current).max,
                'continuity_residual',
            )
            self.check(
                f"route_agreement[{index}:{label}]",
                float(np.max(np.abs(current.j - pullback.j))),
                'route_agreement',
            )
            if self.patch is not None:
                self.check(
                    f"patch_flux[{index}:{label}]",
                    abs(
                        grid_patch_flux(
                            solved, self.model, generator, *self.patch
                        )
                    ),
                    'patch_flux',
                )
        hamiltonian, lagrangian = lagrangian_action_check(solved, self.model)
        self.report.diagnostics['actions'] = {
            'hamiltonian': hamiltonian,
            'lagrangian': lagrangian,
        }
        self.check(
            'action_relative_difference',
            abs(hamiltonian - lagrangian) / max(abs(lagrangian), 1e-300),
        )


class SymmetryRunner(ScenarioRunner):
    """Infinitesimal and finite symmetry checks of generators on random
    constrained samples. Generators expected to break the symmetry must
    show defects above the broken_defect threshold."""

    KIND = 'check-symmetry'
    CHECKS = {
        'symmetric_defect': (1e-8, 'le'),
        'broken_defect': (1e-3, 'ge'),
    }

    def prepare(self):
        self.samples = int(self.geometry.get('samples', 50))
        if self.samples < 1:
            raise HamconScenarioError("at least one sample is required")
        self.generators = []
        for spec in self.geometry.get('generators', []):
            if not isinstance(spec, dict):
                raise HamconScenarioError(f"invalid generator {spec}")
            spec = dict(spec)
            expect = spec.pop('expect', 'symmetric')
            if expect not in ('symmetric', 'broken'):
                raise HamconScenarioError(
                    f"generator expectation must be symmetric or broken, "
                    f"not {expect}"
                )
            v, f = generator_from_spec(
                self.model.algebra, spec, self.model.D
            )
            self.generators.append((v, f, expect))
        if not self.generators:
            raise HamconScenarioError("no generator to check")

    def execute(self):
        samples = random_samples(self.model, self.samples, self.rng)
        rows = []
        for index, (v, f, expect) in enumerate(self.generators):
            infinitesimal = max(
                abs(symmetry_defect(self.model, v, q, P)) for q, P in samples
            )
            finite = finite_symmetry_check(self.model, f, samples).max_defect
            rows.append([index, v.label, expect, infinitesimal, finite])
            key = f"{expect}_defect"
            self.check(f"{index}:{v.label}:infinitesimal", infinitesimal, key)
            self.check(f"{index}:{v.label}:finite", finite, key)
        self.write_rows(
            'symmetry.csv',
            ['generator', 'label', 'expect', 'infinitesimal', 'finite'],
            rows,
        )


class HJRunner(ScenarioRunner):
    """Verification of a named Hamilton-Jacobi solution on a random probe
    cloud and, for D=1 models, of the motion reconstructed from it."""

    KIND = 'hj-verify'
    CHECKS = {
        'hj_residual': (1e-6, 'le'),
        'curl_nilpotency': (1e-6, 'le'),
        'line_fit_deviation': (1e-6, 'le'),
        'tangent_constancy': (1e-8, 'le'),
        'family_conservation': (1e-6, 'le'),
        'charge_spread': (1e-6, 'le'),
    }

    def prepare(self):
        self.solution = SolutionFactory.generate(
            self.geometry.get('solution', {}), self.model
        )
        if self.solution.D != self.model.D:
            raise HamconScenarioError(
                f"solution {self.solution.label} does not match "
                f"{self.model.label}"
            )
        n = self.model.algebra.n
        probe = self.geometry.get('probe', {})
        self.lower = np.asarray(probe.get('lower', [-1.0] * n), dtype=float)
        self.upper = np.asarray(probe.get('upper', [1.0] * n), dtype=float)
        if self.lower.shape != (n,) or self.upper.shape != (n,):
            raise HamconScenarioError(f"probe box needs {n} components")
        self.count = int(probe.get('count', 1000))
        self.margin = float(probe.get('margin', 0.0))
        self.reconstruct = self.geometry.get('reconstruct')
        if self.reconstruct is not None:
            if self.model.D != 1:
                raise HamconScenarioError(
                    "motion reconstruction is only defined for D=1"
                )
            self.start = self.model.algebra.vector(
                self.reconstruct.get('start')
            )

    def _residual(self, q):
        if self.model.TYPE == 'scalar_field':
            return weyl_hj_residual(self.model, self.solution, q)
        return hj_residual(self.model, self.solution, q)

    def execute(self):
        points = probe_cloud(
            self.solution,
            self.lower,
            self.upper,
            self.count,
            self.rng,
            self.margin,
        )
        residuals = [self._residual(q) for q in points]
        self.write_rows(
            'probes.csv',
            [f"q{i + 1}" for i in range(self.model.algebra.n)] + ['residual'],
            (
                list(q.vector_part()) + [residual]
                for q, residual in zip(points, residuals)
            ),
        )
        self.check('hj_residual', max(abs(value) for value in residuals))
        if self.model.TYPE == 'string':
            self.check(
                'curl_nilpotency',
                max(curl_of_momentum(self.solution, q) for q in points[:50]),
            )
        if self.reconstruct is not None:
            self._reconstruction()

    def _reconstruction(self):
        w = motion_from_hj(
            self.model,
            self.solution,
            self.start,
            float(self.reconstruct.get('length', 1.0)),
            self.reconstruct.get('step'),
        )
        self.write_rows(
            'reconstruction.csv', worldline_header(self.model), w.rows()
        )
        points = w.points()
        self.check('line_fit_deviation', line_fit_deviation(points))
        if len(points) > 1:
            directions = np.diff(points, axis=0)
            directions /= np.linalg.norm(directions, axis=1)[:, np.newaxis]
            constancy = float(
                np.max(np.linalg.norm(directions - directions[0], axis=1))
            )
        else:
            constancy = 0.0
        self.check('tangent_constancy', constancy)
        self.check(
            'family_conservation',
            max(
                (
                    conserved_from_family(self.solution, w, index)
                    for index in range(len(self.solution.alpha))
                ),
                default=0.0,
            ),
        )
        self.check(
            'charge_spread',
            max(
                charge_along_worldline(w, translation(e)).spread
                for e in self.model.algebra.basis_vectors()
            ),
        )


class RunnerFactory(object):

    _runners = {
        'particle': ParticleRunner,
        'string': StringRunner,
        'field': FieldRunner,
        'check-symmetry': SymmetryRunner,
        'hj-verify': HJRunner,
    }

    @staticmethod
    def generate(config) -> ScenarioRunner:
        """Generate the ScenarioRunner of a validated configuration."""
        if config.scenario not in RunnerFactory._runners:
            raise HamconScenarioError(
                f"scenario {config.scenario} unsupported by runners"
            )
        return RunnerFactory._runners[config.scenario](config)


def run_scenario(config, outdir: Path) -> RunReport:
    """Runs the scenario described by the configuration and returns its
    report, also written in outdir with the artifacts."""
    return RunnerFactory.generate(config).run(outdir)
