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

from pathlib import Path
from typing import List

from ..exports import ExportableType, ExportableField, export_value
from ..log import logr
from ..results import CheckResult
from ..templates import Templeter
from ..version import __version__

logger = logr(__name__)

TEMPLATES_DIR = Path(__file__).parent / 'templates'

REPORT_FILE = 'report.yml'
SUMMARY_FILE = 'summary.txt'


class RunReport(ExportableType):
    """Outcome of a scenario run. Status is `pass` when every check passes,
    `fail` when some check fails and `error` when a solver or evaluation
    failure interrupted the run, in which case checks and artifacts are the
    ones collected before the failure."""

    EXFIELDS = [
        ExportableField('version'),
        ExportableField('name'),
        ExportableField('scenario'),
        ExportableField('status'),
        ExportableField('seed', int),
        ExportableField('conventions', dict),
        ExportableField('config', dict),
        ExportableField('checks', List[CheckResult]),
        ExportableField('artifacts', list),
        ExportableField('error'),
        ExportableField('diagnostics', dict),
        ExportableField('wall_clock', float),
    ]

    def __init__(self, config):
        self.version = __version__
        self.name = config.name
        self.scenario = config.scenario
        self.seed = config.seed
        self.conventions = config.conventions
        self.config = config.export()
        self.checks = []
        self.artifacts = []
        self.error = None
        self.diagnostics = {}
        self.wall_clock = 0.0

    @property
    def passed(self):
        return self.error is None and all(
            check.passed for check in self.checks
        )

    @property
    def status(self):
        if self.error is not None:
            return 'error'
        return 'pass' if self.passed else 'fail'

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def set_error(self, err):
        self.error = str(err)
        diagnostics = getattr(err, 'diagnostics', None) or {}
        for key, value in diagnostics.items():
            try:
                self.diagnostics[key] = export_value(value)
            except TypeError:
                self.diagnostics[key] = repr(value)

    def summary(self) -> str:
        return Templeter().frender(
            TEMPLATES_DIR / 'summary.txt.j2', report=self
        )

    def write(self, outdir: Path):
        """Writes the YAML report and the text summary in outdir."""
        with open(outdir / REPORT_FILE, 'w') as fh:
            fh.write(self.yaml())
        with open(outdir / SUMMARY_FILE, 'w') as fh:
            fh.write(self.summary())
        logger.info(
            "Scenario %s report written in %s (status: %s)",
            self.name,
            outdir,
            self.status,
        )
