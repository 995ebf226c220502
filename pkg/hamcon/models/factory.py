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

from ..errors import HamconAlgebraError, HamconScenarioError
from .string import StringModel
from .scalar import ScalarFieldModel


class ModelFactory(object):

    _types = {
        'string': StringModel,
        'scalar_field': ScalarFieldModel,
    }

    _descriptions = {
        'string': "relativistic particle / Nambu-Goto string, "
        "H = ½(|P|² − Λ²)",
        'scalar_field': "N-component scalar field, "
        "H = P·I_x + ½Σ|I_x·(P·e_a)|² + V(y)",
    }

    @staticmethod
    def names():
        return sorted(ModelFactory._types)

    @staticmethod
    def description(name):
        return ModelFactory._descriptions[name]

    @staticmethod
    def generate(spec):
        """Generate a HamiltonianModel from a configuration mapping."""
        if not isinstance(spec, dict):
            raise HamconScenarioError(f"invalid model definition {spec}")
        spec = dict(spec)
        type = spec.pop('type', None)
        if type not in ModelFactory._types:
            raise HamconScenarioError(
                f"unknown model type {type}, expected one of "
                f"{', '.join(ModelFactory.names())}"
            )
        try:
            return ModelFactory._types[type](**spec)
        except (TypeError, HamconAlgebraError) as err:
            raise HamconScenarioError(f"invalid {type} model: {err}")
