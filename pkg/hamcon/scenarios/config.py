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
import numbers
from pathlib import Path

import yaml

from ..errors import HamconScenarioError
from ..exports import ExportableType, ExportableField
from ..log import logr
from .presets import PresetRegistry

logger = logr(__name__)

SCENARIO_KINDS = ['particle', 'string', 'field', 'check-symmetry', 'hj-verify']

SECTIONS = [
    'scenario',
    'name',
    'description',
    'preset',
    'seed',
    'model',
    'geometry',
    'checks',
    'output',
    'conventions',
]


def deep_merge(base: dict, override: dict) -> dict:
    """Returns a copy of base recursively updated with override, nested
    mappings being merged key by key."""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _positive(value, what):
    if (
        isinstance(value, bool)
        or not isinstance(value, numbers.Real)
        or not value > 0
    ):
        raise HamconScenarioError(f"{what} must be a positive number")
    return float(value)


class ScenarioConfig(ExportableType):
    """Validated scenario definition. Tolerances of the checks are positive
    numbers, grid resolutions have at least 4 nodes per edge, and the
    orientation and λ sign conventions are ±1."""

    EXFIELDS = [
        ExportableField('name'),
        ExportableField('scenario'),
        ExportableField('preset'),
        ExportableField('description'),
        ExportableField('seed', int),
        ExportableField('model', dict),
        ExportableField('geometry', dict),
        ExportableField('checks', dict),
        ExportableField('output', dict),
        ExportableField('conventions', dict),
    ]

    def __init__(self, content: dict, preset=None):
        self.preset = preset
        self.scenario = content['scenario']
        self.name = str(content.get('name', preset or self.scenario))
        self.description = content.get('description')
        self.seed = content.get('seed', 0)
        self.model = content.get('model', {})
        self.geometry = content.get('geometry', {})
        self.checks = content.get('checks', {})
        self.output = content.get('output', {})
        self.conventions = {
            'orientation': 1,
            'lambda_sign': 1,
            **content.get('conventions', {}),
        }
        self._validate()

    def _validate(self):
        if self.scenario not in SCENARIO_KINDS:
            raise HamconScenarioError(
                f"unknown scenario {self.scenario}, expected one of "
                f"{', '.join(SCENARIO_KINDS)}"
            )
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise HamconScenarioError("seed must be an integer")
        for section in ('model', 'geometry', 'checks', 'output'):
            if not isinstance(getattr(self, section), dict):
                raise HamconScenarioError(f"{section} must be a mapping")
        if 'type' not in self.model:
            raise HamconScenarioError("model type is missing")
        for name, tolerance in self.checks.items():
            self.checks[name] = _positive(tolerance, f"tolerance of {name}")
        for name, value in self.conventions.items():
            if name not in ('orientation', 'lambda_sign'):
                raise HamconScenarioError(f"unknown convention {name}")
            if value not in (1, -1):
                raise HamconScenarioError(f"{name} convention must be ±1")
        nodes = self.geometry.get('nodes')
        if nodes is not None:
            if isinstance(nodes, int):
                nodes = [nodes]
            if not isinstance(nodes, list) or any(
                isinstance(count, bool)
                or not isinstance(count, int)
                or count < 4
                for count in nodes
            ):
                raise HamconScenarioError(
                    f"grid resolution must be at least 4 nodes per edge, "
                    f"not {self.geometry['nodes']}"
                )
        for key in ('length', 'step', 'tol'):
            if key in self.geometry:
                _positive(self.geometry[key], f"geometry {key}")

    @classmethod
    def from_dict(cls, content, presets=None):
        """Builds the configuration from a mapping, merging it over the
        preset it names, if any."""
        if not isinstance(content, dict):
            raise HamconScenarioError(
                "scenario configuration must be a mapping"
            )
        unknown = set(content) - set(SECTIONS)
        if unknown:
            raise HamconScenarioError(
                f"unknown configuration keys {', '.join(sorted(unknown))}"
            )
        preset = content.get('preset')
        if preset is not None:
            if presets is None:
                presets = PresetRegistry()
            content = deep_merge(presets.get(preset), content)
            del content['preset']
        if 'scenario' not in content:
            raise HamconScenarioError("scenario kind is missing")
        return cls(content, preset)

    @classmethod
    def load(cls, path: Path, presets=None):
        """Loads a YAML scenario configuration file."""
        logger.debug("Loading scenario configuration file %s", path)
        try:
            with open(path) as fh:
                content = yaml.safe_load(fh)
        except OSError as err:
            raise HamconScenarioError(
                f"unable to read scenario configuration {path}: {err}"
            )
        except yaml.YAMLError as err:
            raise HamconScenarioError(
                f"invalid YAML in scenario configuration {path}: {err}"
            )
        return cls.from_dict(content, presets)
