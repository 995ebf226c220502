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

from .algebra import Algebra, blade_grade, reorder_sign  # noqa: F401
from .multivector import (  # noqa: F401
    Multivector,
    geometric_product,
    inner_product,
    outer_product,
    reverse,
    grade_project,
    magnitude,
)
from .calculus import (  # noqa: F401
    ScalarMvFunction,
    DirectionalSamples,
    mv_derivative,
    vector_derivative,
)
