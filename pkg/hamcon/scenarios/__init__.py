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

from .config import ScenarioConfig, SCENARIO_KINDS, deep_merge  # noqa: F401
from .presets import PresetRegistry  # noqa: F401
from .report import RunReport, REPORT_FILE, SUMMARY_FILE  # noqa: F401
from .runners import RunnerFactory, ScenarioRunner, run_scenario  # noqa: F401
from .listing import list_presets  # noqa: F401
