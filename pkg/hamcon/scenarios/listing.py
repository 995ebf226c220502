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

from ..models import ModelFactory, PotentialFactory
from ..hamilton_jacobi import SolutionFactory
from ..templates import Templeter
from ..transforms import GENERATOR_KINDS
from .geometry import BOUNDARIES, MESHES
from .presets import PresetRegistry
from .report import TEMPLATES_DIR


def list_presets() -> str:
    """Renders the sorted listing of built-in scenarios and of the models,
    potentials, generators, meshes, boundary data and Hamilton-Jacobi
    solutions they can refer to."""
    presets = PresetRegistry()
    return Templeter().frender(
        TEMPLATES_DIR / 'presets.txt.j2',
        presets=[
            (name, presets.scenario(name), presets.description(name))
            for name in presets.names()
        ],
        models=[
            (name, ModelFactory.description(name))
            for name in ModelFactory.names()
        ],
        potentials=[
            (name, PotentialFactory.description(name))
            for name in PotentialFactory.names()
        ],
        generators=sorted(GENERATOR_KINDS.items()),
        meshes=sorted(MESHES.items()),
        boundaries=sorted(
            (name, definition[0]) for name, definition in BOUNDARIES.items()
        ),
        solutions=[
            (name, SolutionFactory.description(name))
            for name in SolutionFactory.names()
        ],
    )
