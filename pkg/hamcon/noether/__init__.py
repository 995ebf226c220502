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

from .symmetry import (  # noqa: F401
    symmetry_defect,
    finite_symmetry_check,
    random_samples,
    SymmetryReport,
)
from .charges import (  # noqa: F401
    NoetherCharge,
    ChargeSeries,
    charge_along_worldline,
    string_charge_consistency,
)
from .currents import (  # noqa: F401
    SpacetimeCurrent,
    ContinuityReport,
    lagrangian_density,
    energy_momentum_current,
    momentum_route_current,
    spacetime_rotation_current,
    field_rotation_current,
    rotation_currents,
    continuity_residual,
    grid_patch_loop,
    mesh_patch_loop,
    flux_through_patch_boundary,
    grid_patch_flux,
    circle_flux,
)
