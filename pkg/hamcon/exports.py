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

import numpy as np
import yaml


def export_value(value):
    """Convert value to plain Python types suitable for YAML dumping. Numpy
    scalars and arrays are converted to floats and nested lists, objects
    providing an export() method (exportable types, multivectors) are
    exported recursively."""
    if value is None or isinstance(value, (bool, str, int)):
        return value
    if isinstance(value, float):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return export_value(value.tolist())
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, 'export'):
        return value.export()
    if isinstance(value, dict):
        return {str(key): export_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [export_value(item) for item in value]
    raise TypeError(f"Unable to export value of type {type(value)}")


class ExportableType:
    def export(self):
        """Export object as a dict of fields."""
        return {field.name: field.export(self) for field in self.EXFIELDS}

    def yaml(self) -> str:
        return yaml.safe_dump(
            self.export(), sort_keys=False, default_flow_style=None
        )


class ExportableField:
    def __init__(self, name, native_type=str):
        self.name = name
        self.native_type = native_type

    def export(self, obj):
        """Convert field to plain type."""
        value = getattr(obj, self.name)
        if value is None:
            return value
        # If the native type is a List[ExportableType], return a comprehensive
        # list of contained items recursive exports.
        if isinstance(
            self.native_type, type(List[ExportableType])
        ) and issubclass(self.native_type.__args__[0], ExportableType):
            return [_value.export() for _value in value]
        return export_value(value)
