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

from .maps import (  # noqa: F401
    VectorField,
    Diffeo,
    outermorphism_matrix,
    differential,
    outermorphism,
    adjoint,
    adjoint_inverse,
    infinitesimal_outermorphism,
    infinitesimal_adjoint,
    graph_outermorphism,
    graph_adjoint,
    graph_matrix,
)
from .rotors import Rotor, rotor_exp, rotor_apply  # noqa: F401
from .flows import lie_flow, lie_series  # noqa: F401
from .catalog import (  # noqa: F401
    translation,
    rotation,
    field_rotation,
    anisotropic_scaling,
    translate_diffeo,
    rotate_diffeo,
    scaling_diffeo,
    bivector_from_spec,
    generator_from_spec,
    GENERATOR_KINDS,
)
