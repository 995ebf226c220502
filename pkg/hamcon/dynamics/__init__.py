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

from .projection import project_to_constraint  # noqa: F401
from .worldline import (  # noqa: F401
    Worldline,
    WorldlineSample,
    integrate_worldline,
    line_fit_deviation,
)
from .surface import (  # noqa: F401
    SurfaceMesh,
    RelaxationDiagnostics,
    planar_disk_mesh,
    catenoid_mesh,
    catenoid_area,
    sphere_cap_mesh,
    helicoid_patch_mesh,
    graph_patch_mesh,
    mean_curvature_residual,
    relax_minimal_surface,
)
from .field import (  # noqa: F401
    FieldGrid,
    field_residual,
    solve_scalar_field,
    recover_momentum,
    constraint_violation,
    field_bivector_violation,
    lagrangian_action_check,
)
from .limit import string_to_scalar_limit, LimitReport  # noqa: F401
