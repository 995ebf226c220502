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

import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from hamcon.conf import ENV_CONF, RuntimeConf
from hamcon.errors import HamconRuntimeError, HamconSystemConfigurationError
from hamcon.templates import Templeter


class TestRuntimeConf(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.TemporaryDirectory()
        self.path = Path(self.test_dir.name, 'hamcon.ini')

    def tearDown(self):
        self.test_dir.cleanup()
        RuntimeConf().reset()

    def test_defaults(self):
        conf = RuntimeConf()
        self.assertIs(conf, RuntimeConf())
        self.assertEqual(conf.numerics.fd_step, 1e-5)
        self.assertEqual(conf.dynamics.projection_max_iters, 30)
        self.assertEqual(conf.field.max_iters, 20000)
        self.assertEqual(conf.output.dir, Path('hamcon-out'))

    def test_site_file(self):
        self.path.write_text('[relaxation]\ntol = 1e-8\n')
        conf = RuntimeConf()
        conf.load(self.path)
        self.assertEqual(conf.relaxation.tol, 1e-8)
        # other settings keep their vendor defaults
        self.assertEqual(conf.relaxation.max_iters, 50000)
        conf.reset()
        self.assertEqual(conf.relaxation.tol, 1e-6)

    def test_environment(self):
        self.path.write_text('[output]\ndir = /tmp/results\n')
        with mock.patch.dict(os.environ, {ENV_CONF: str(self.path)}):
            RuntimeConf().load()
        self.assertEqual(RuntimeConf().output.dir, Path('/tmp/results'))
        with mock.patch.dict(
            os.environ, {ENV_CONF: str(self.path.with_name('none.ini'))}
        ):
            with self.assertRaises(HamconSystemConfigurationError):
                RuntimeConf().load()

    def test_invalid(self):
        self.path.write_text('[field]\nmax_iters = many\n')
        with self.assertRaises(HamconSystemConfigurationError):
            RuntimeConf().load(self.path)
        self.path.write_text('[relaxation]\nmemory = 0\n')
        with self.assertRaises(HamconSystemConfigurationError):
            RuntimeConf().load(self.path)
        with self.assertRaises(HamconSystemConfigurationError):
            RuntimeConf().load(self.path.with_name('none.ini'))


class TestTempleter(unittest.TestCase):
    def test_filters(self):
        templeter = Templeter()
        self.assertEqual(
            templeter.srender("{{ value|sci }}", value=0.000123456),
            '1.235e-04',
        )
        self.assertEqual(
            templeter.srender("{{ a|verdict }} {{ b|verdict }}", a=True,
                              b=False),
            'PASS FAIL',
        )

    def test_syntax_error(self):
        with self.assertRaises(HamconRuntimeError):
            Templeter().srender("{% for %}")
