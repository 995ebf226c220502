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

from ..conf import RuntimeConf
from ..errors import HamconIntegratorError, HamconRuntimeError
from ..dynamics import Worldline, WorldlineSample
from ..ga import Multivector
from ..log import logr
from ..models import HamiltonianModel
from .residuals import momentum_from_hj
from .solutions import HJSolution

logger = logr(__name__)


def _tangent(model, sol, q, alpha):
    P = momentum_from_hj(sol, q, alpha=alpha)
    gradient = model.dH_dP(q, P)
    speed = gradient.magnitude()
    if speed == 0.0:
        raise HamconIntegratorError(
            f"momentum derivative vanishes at {q.vector_part().tolist()}, "
            f"{sol.label} defines no direction there"
        )
    return gradient / speed, P, speed


def motion_from_hj(
    model: HamiltonianModel,
    sol: HJSolution,
    q_start: Multivector,
    length: float,
    h: Optional[float] = None,
    alpha=None,
) -> Worldline:
    """Reconstructs the D=1 motion through q_start tangent to the direction
    field ∂_P H(q, ∂_q∧S(q)), followed at unit speed with fourth order
    Runge-Kutta steps. Samples carry the momentum ∂_q∧S and the multiplier
    λ = h/|∂_P H|."""
    if model.D != 1:
        raise HamconRuntimeError(
            "motion reconstruction from S is only defined for D=1"
        )
    h = RuntimeConf().dynamics.worldline_step if h is None else h
    if length < 0 or h <= 0:
        raise HamconIntegratorError(
            f"invalid reconstruction length {length} or step {h}"
        )
    steps = math.ceil(length / h - 1e-12) if length > 0 else 0
    dt = length / steps if steps else h
    q = q_start
    _, P, speed = _tangent(model, sol, q, alpha)
    samples = [WorldlineSample(q, P, dt / speed)]
    for _ in range(steps):
        k1, _, _ = _tangent(model, sol, q, alpha)
        k2, _, _ = _tangent(model, sol, q + (dt / 2) * k1, alpha)
        k3, _, _ = _tangent(model, sol, q + (dt / 2) * k2, alpha)
        k4, _, _ = _tangent(model, sol, q + dt * k3, alpha)
        q = q + (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        _, P, speed = _tangent(model, sol, q, alpha)
        samples.append(WorldlineSample(q, P, dt / speed))
    logger.debug(
        "Reconstructed %d steps of %g from %s", steps, dt, sol.label
    )
    return Worldline(samples, dt)
