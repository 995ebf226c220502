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

import copy
from pathlib import Path

import yaml

from ..errors import HamconScenarioError, HamconSystemConfigurationError
from ..log import logr
from ..utils import Singleton

logger = logr(__name__)

PRESETS_DIR = Path(__file__).parent / 'presets'


class PresetRegistry(metaclass=Singleton):
    """Built-in scenarios, one YAML file per preset named after the file
    stem."""

    def __init__(self, path: Path = PRESETS_DIR):
        self.path = path
        self._presets = {}
        for preset in sorted(path.glob('*.yml')):
            try:
                with open(preset) as fh:
                    content = yaml.safe_load(fh)
            except yaml.YAMLError as err:
                raise HamconSystemConfigurationError(
                    f"invalid built-in preset {preset}: {err}"
                )
            logger.debug("Registering scenario preset %s", preset.stem)
            self._presets[preset.stem] = content

    def names(self):
        return sorted(self._presets)

    def description(self, name):
        return self.get(name).get('description', '')

    def scenario(self, name):
        return self.get(name)['scenario']

    def get(self, name) -> dict:
        if name not in self._presets:
            raise HamconScenarioError(
                f"unknown preset {name}, expected one of "
                f"{', '.join(self.names())}"
            )
        return copy.deepcopy(self._presets[name])
