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

from .exports import ExportableType, ExportableField


class CheckResult(ExportableType):
    """Outcome of a numerical acceptance check, comparing a measured value
    to a tolerance. With comparison `le` the check passes when value ≤
    tolerance, with `ge` when value ≥ tolerance."""

    EXFIELDS = [
        ExportableField('name'),
        ExportableField('value', float),
        ExportableField('tolerance', float),
        ExportableField('comparison'),
        ExportableField('passed', bool),
    ]

    def __init__(self, name, value, tolerance, comparison='le'):
        self.name = name
        self.value = float(value)
        self.tolerance = float(tolerance)
        self.comparison = comparison

    def __repr__(self):
        return (
            f"CheckResult({self.name}: {self.value:.3e} "
            f"{'≤' if self.comparison == 'le' else '≥'} "
            f"{self.tolerance:.3e} {'pass' if self.passed else 'FAIL'})"
        )

    @property
    def passed(self):
        if math.isnan(self.value):
            return False
        if self.comparison == 'le':
            return self.value <= self.tolerance
        return self.value >= self.tolerance
