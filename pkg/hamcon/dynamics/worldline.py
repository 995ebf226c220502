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
from typing import List, Optional

import numpy as np

from ..conf import RuntimeConf
from ..errors import HamconIntegratorError, HamconSolverError
from ..exports import ExportableType, ExportableField
from ..ga import Multivector
from ..log import logr
from ..models import HamiltonianModel
from .projection import project_to_constraint

logger = logr(__name__)


class WorldlineSample(ExportableType):
    EXFIELDS = [
        ExportableField('q', Multivector),
        ExportableField('P', Multivector),
        ExportableField('lam', float),
    ]

    def __init__(self, q: Multivector, P: Multivector, lam: float):
        self.q = q
        self.P = P
        self.lam = lam


class Worldline:
    """Discrete one dimensional motion, an ordered list of samples
    (q, P, λ) along a unit speed parameter with step h."""

    def __init__(self, samples: List[WorldlineSample], step: float):
        self.samples = samples
        self.step = step

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    def __getitem__(self, index):
        return self.samples[index]

    def points(self) -> np.ndarray:
        return np.array([sample.q.vector_part() for sample in self.samples])

    def elements(self):
        """Yields the midpoint and line element dΓ = q_{k+1} − q_k of every
        segment."""
        for first, second in zip(self.samples, self.samples[1:]):
            yield 0.5 * (first.q + second.q), second.q - first.q

    def length(self) -> float:
        return float(
            sum(dGamma.magnitude() for _, dGamma in self.elements())
        )

    def max_constraint(self, model: HamiltonianModel) -> float:
        return max(
            abs(model.eval(sample.q, sample.P)) for sample in self.samples
        )

    def tangent_residual(self, model: HamiltonianModel) -> float:
        """Returns max_k ‖(q_{k+1} − q_k) − λ_k ∂_P H(q_k, P_k)‖."""
        residual = 0.0
        for first, second in zip(self.samples, self.samples[1:]):
            predicted = first.lam * model.dH_dP(first.q, first.P)
            residual = max(
                residual, (second.q - first.q - predicted).magnitude()
            )
        return residual

    def rows(self):
        """Yields the CSV table rows of the worldline: parameter, point
        components, momentum blade coefficients and multiplier."""
        for index, sample in enumerate(self.samples):
            yield (
                [index * self.step]
                + list(sample.q.vector_part())
                + list(sample.P.coeffs)
                + [sample.lam]
            )


def line_fit_deviation(points: np.ndarray) -> float:
    """Returns the largest distance of points to their least-squares
    line."""
    points = np.asarray(points, dtype=float)
    if len(points) < 3:
        return 0.0
    centered = points - points.mean(axis=0)
    _, _, vh = np.linalg.svd(centered, full_matrices=False)
    direction = vh[0]
    offsets = centered - np.outer(centered @ direction, direction)
    return float(np.max(np.linalg.norm(offsets, axis=1)))


def _unit_speed_rates(model, q, P):
    gradient = model.dH_dP(q, P)
    speed = gradient.magnitude()
    if speed == 0.0:
        raise HamconIntegratorError(
            f"momentum derivative of {model.label} vanishes, unit speed "
            "gauge is degenerate"
        )
    return gradient / speed, -model.dH_dq_explicit(q, P) / speed, speed


def integrate_worldline(
    model: HamiltonianModel,
    q0: Multivector,
    P0: Multivector,
    length: float,
    h: Optional[float] = None,
) -> Worldline:
    """Integrates the canonical equations of a D=1 model from (q₀, P₀) over
    the given parameter length, with the multiplier fixed so that the motion
    has unit speed: q' = ∂_P H/|∂_P H|, P' = −∂̇_q H/|∂_P H|. Classical
    fourth order Runge-Kutta steps are followed by a projection of P on the
    constraint surface. The multiplier of every sample is λ = h/|∂_P H|."""
    conf = RuntimeConf().dynamics
    h = conf.worldline_step if h is None else h
    if model.D != 1:
        raise HamconIntegratorError(
            f"worldline integration requires D=1, {model.label} has "
            f"D={model.D}"
        )
    if length < 0 or h <= 0:
        raise HamconIntegratorError(
            f"invalid worldline length {length} or step {h}"
        )
    if abs(model.eval(q0, P0)) > conf.initial_constraint_tol:
        raise HamconIntegratorError(
            f"initial data violates the constraint (|H|="
            f"{abs(model.eval(q0, P0)):.3e}), project it first"
        )
    steps = math.ceil(length / h - 1e-12) if length > 0 else 0
    dt = length / steps if steps else h
    _, _, speed = _unit_speed_rates(model, q0, P0)
    samples = [WorldlineSample(q0, P0, dt / speed)]
    q, P = q0, P0
    for step in range(steps):
        k1q, k1p, _ = _unit_speed_rates(model, q, P)
        k2q, k2p, _ = _unit_speed_rates(
            model, q + (dt / 2) * k1q, P + (dt / 2) * k1p
        )
        k3q, k3p, _ = _unit_speed_rates(
            model, q + (dt / 2) * k2q, P + (dt / 2) * k2p
        )
        k4q, k4p, _ = _unit_speed_rates(model, q + dt * k3q, P + dt * k3p)
        q = q + (dt / 6) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q)
        P = P + (dt / 6) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        try:
            P = project_to_constraint(model, q, P)
        except HamconSolverError as err:
            raise HamconIntegratorError(
                f"projection failed at step {step}: {err}",
                diagnostics={'worldline': Worldline(samples, dt)},
            )
        drift = abs(model.eval(q, P))
        if not np.isfinite(drift) or drift > conf.drift_tol:
            raise HamconIntegratorError(
                f"constraint drift {drift:.3e} after projection at step "
                f"{step}",
                diagnostics={'worldline': Worldline(samples, dt)},
            )
        _, _, speed = _unit_speed_rates(model, q, P)
        samples.append(WorldlineSample(q, P, dt / speed))
    logger.debug(
        "Integrated worldline of %s with %d steps of %g", model.label,
        steps, dt,
    )
    return Worldline(samples, dt)
