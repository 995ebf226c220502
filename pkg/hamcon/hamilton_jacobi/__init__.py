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

from .solutions import (  # noqa: F401
    HJSolution,
    SolutionFactory,
    SINGULAR_RADIUS,
    radial_string,
    plane_wave_string,
    weyl_plane_wave,
    probe_cloud,
)
from .residuals import (  # noqa: F401
    momentum_from_hj,
    hj_residual,
    curl_of_momentum,
    weyl_hj_residual,
    conserved_from_family,
)
from .reconstruction import motion_from_hj  # noqa: F401
