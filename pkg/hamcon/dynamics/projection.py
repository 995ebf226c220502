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

from typing import Optional

from ..conf import RuntimeConf
from ..errors import HamconProjectionError
from ..ga import Multivector
from ..log import logr
from ..models import HamiltonianModel

logger = logr(__name__)


def project_to_constraint(
    model: HamiltonianModel,
    q: Multivector,
    P: Multivector,
    tol: Optional[float] = None,
    max_iters: Optional[int] = None,
) -> Multivector:
    """Returns P' = P − μ d with d = reverse(∂_P H(q, P)) and μ such that
    H(q, P') = 0. Models with a closed form projection use it, the others
    are corrected by one dimensional Newton iterations on μ."""
    conf = RuntimeConf().dynamics
    tol = conf.projection_tol if tol is None else tol
    max_iters = conf.projection_max_iters if max_iters is None else max_iters
    value = model.eval(q, P)
    if abs(value) <= tol:
        return P
    direction = model.dH_dP(q, P).reverse()
    if direction.is_zero():
        raise HamconProjectionError(
            f"momentum derivative of {model.label} vanishes, unable to "
            "project on the constraint"
        )
    projected = model.closed_form_projection(q, P)
    if projected is not None:
        return projected
    mu = 0.0
    current = P
    for iteration in range(max_iters):
        slope = -model.dH_dP(q, current).scalar_product(direction)
        if slope == 0.0:
            break
        mu -= value / slope
        current = P - mu * direction
        value = model.eval(q, current)
        if abs(value) <= tol:
            logger.debug(
                "Projection converged in %d iterations (|H|=%.3e)",
                iteration + 1,
                abs(value),
            )
            return current
    raise HamconProjectionError(
        f"projection on the constraint of {model.label} did not converge in "
        f"{max_iters} iterations (|H|={abs(value):.3e})",
        diagnostics={'constraint': abs(value), 'mu': mu},
    )
