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

import math
from typing import Optional

import numpy as np

from ..conf import RuntimeConf
from ..errors import HamconNumericalError
from ..ga import Multivector
from .maps import VectorField


def lie_flow(
    v: VectorField,
    q: Multivector,
    tau: float,
    steps: Optional[int] = None,
) -> Multivector:
    """Integrates dq/dτ = v(q) from q over parameter τ with the classical
    fourth order Runge-Kutta method. By default, the number of steps is
    ⌈|τ|/lie_step⌉."""
    if tau == 0.0:
        return q
    if steps is None:
        steps = math.ceil(abs(tau) / RuntimeConf().transforms.lie_step)
    steps = max(1, int(steps))
    dt = tau / steps
    for _ in range(steps):
        k1 = v(q)
        k2 = v(q + (dt / 2) * k1)
        k3 = v(q + (dt / 2) * k2)
        k4 = v(q + dt * k3)
        q = q + (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(q.coeffs)):
            raise HamconNumericalError(f"non-finite flow of {v.label}")
    return q


def lie_series(
    v: VectorField, q: Multivector, tau: float, order: int
) -> Multivector:
    """Partial sum q + τv + τ²/2 (v·∂_q)v + … up to τ^order of the Lie series
    of v at q. The terms are J^{k-1} v(q) with J the Jacobian of v at q,
    which is exact for affine fields."""
    J = v.jacobian(q)
    term = v(q).vector_part()
    result = q.vector_part().copy()
    factor = 1.0
    for k in range(1, order + 1):
        factor *= tau / k
        result = result + factor * term
        term = J @ term
    return q.algebra.vector(result)
