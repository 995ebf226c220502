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

import io
import logging
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

import yaml

from hamcon.cli import (
    EXIT_CHECKS_FAILED,
    EXIT_CONFIG_ERROR,
    EXIT_PASS,
    EXIT_SOLVER_ERROR,
)
from hamcon.cli.hamconctl import ENV_OUT, Hamconctl
from hamcon.conf import ENV_CONF, RuntimeConf
from hamcon.scenarios import REPORT_FILE
from hamcon.scenarios.runners import StringRunner
from hamcon.version import __version__


class TestHamconctl(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.outdir = Path(self.tmpdir.name, 'out')
        self.environ = mock.patch.dict(os.environ)
        self.environ.start()
        os.environ.pop(ENV_OUT, None)
        os.environ.pop(ENV_CONF, None)

    def tearDown(self):
        self.environ.stop()
        self.tmpdir.cleanup()
        RuntimeConf().reset()
        logging.getLogger().handlers.clear()

    def _run(self, *argv):
        """Runs hamconctl and returns its exit code and standard output."""
        stdout = io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                Hamconctl(list(argv))
        return cm.exception.code, stdout.getvalue()

    def _report(self):
        with open(self.outdir / REPORT_FILE) as fh:
            return yaml.safe_load(fh)

    def test_list_presets(self):
        code, output = self._run('--list-presets')
        self.assertEqual(code, EXIT_PASS)
        self.assertIn('catenoid', output)
        self.assertIn('Hamilton-Jacobi solutions:', output)

    def test_version(self):
        code, output = self._run('--version')
        self.assertEqual(code, 0)
        self.assertIn(__version__, output)

    def test_preset(self):
        code, output = self._run('-o', str(self.outdir), '-p', 'flat-disk')
        self.assertEqual(code, EXIT_PASS)
        self.assertIn('status: pass', output)
        self.assertEqual(self._report()['status'], 'pass')

    def test_subcommand(self):
        code, _ = self._run(
            '-o', str(self.outdir), '--seed', '7', '-p', 'weyl-plane-wave',
            'hj-verify',
        )
        self.assertEqual(code, EXIT_PASS)
        content = self._report()
        self.assertEqual(content['seed'], 7)
        self.assertEqual(content['scenario'], 'hj-verify')

    def test_output_environment(self):
        os.environ[ENV_OUT] = str(self.outdir)
        code, _ = self._run('-p', 'weyl-plane-wave')
        self.assertEqual(code, EXIT_PASS)
        self.assertTrue((self.outdir / REPORT_FILE).exists())

    def test_config_errors(self):
        for argv in (
            [],
            ['-o', str(self.outdir), 'run'],
            ['-o', str(self.outdir), '-p', 'mobius'],
            ['-o', str(self.outdir), '-p', 'catenoid', 'particle'],
            ['-o', str(self.outdir), '-c', str(self.outdir / 'none.yml')],
            ['--conf', str(Path(self.tmpdir.name, 'none.ini')),
             '--list-presets'],
        ):
            code, _ = self._run(*argv)
            self.assertEqual(code, EXIT_CONFIG_ERROR, argv)
        self.assertFalse(self.outdir.exists())

    def test_failed_checks(self):
        config = Path(self.tmpdir.name, 'scenario.yml')
        config.write_text(
            yaml.safe_dump(
                {
                    'preset': 'particle-symmetry',
                    'geometry': {'samples': 5},
                    'checks': {'broken_defect': 1e6},
                }
            )
        )
        code, output = self._run(
            '-o', str(self.outdir), '-c', str(config), 'check-symmetry'
        )
        self.assertEqual(code, EXIT_CHECKS_FAILED)
        self.assertIn('status: fail', output)

    def test_solver_error(self):
        conf = Path(self.tmpdir.name, 'hamcon.ini')
        conf.write_text('[field]\nmax_iters = 2\n')
        code, output = self._run(
            '--conf', str(conf), '-o', str(self.outdir), '-p', 'mass-field'
        )
        self.assertEqual(code, EXIT_SOLVER_ERROR)
        self.assertIn('status: error', output)
        self.assertEqual(self._report()['status'], 'error')
        self.assertEqual(RuntimeConf().field.max_iters, 2)

    def test_unexpected_error(self):
        with mock.patch.object(
            StringRunner, 'execute', side_effect=ValueError('bad shape')
        ):
            code, output = self._run('-o', str(self.outdir), '-p', 'flat-disk')
        self.assertEqual(code, EXIT_SOLVER_ERROR)
        self.assertIn('status: error', output)
        report = self._report()
        self.assertEqual(report['status'], 'error')
        self.assertIn('ValueError', report['error'])

    def test_deterministic_output(self):
        config = Path(self.tmpdir.name, 'scenario.yml')
        config.write_text(
            yaml.safe_dump(
                {'preset': 'straight-line', 'geometry': {'trajectories': 3}}
            )
        )
        outdirs = [Path(self.tmpdir.name, name) for name in ('a', 'b')]
        for outdir in outdirs:
            code, _ = self._run('-o', str(outdir), '-c', str(config))
            self.assertEqual(code, EXIT_PASS)
        artifacts = sorted(path.name for path in outdirs[0].glob('*.csv'))
        self.assertIn('trajectories.csv', artifacts)
        self.assertEqual(
            artifacts, sorted(path.name for path in outdirs[1].glob('*.csv'))
        )
        for name in artifacts:
            self.assertEqual(
                (outdirs[0] / name).read_bytes(),
                (outdirs[1] / name).read_bytes(),
                name,
            )
