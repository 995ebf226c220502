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

import numpy as np

from ..conf import RuntimeConf
from ..errors import HamconRuntimeError
from ..exports import ExportableType, ExportableField
from ..ga import mv_derivative, vector_derivative
from ..log import logr
from .base import HamiltonianModel
from .scalar import ScalarFieldModel

logger = logr(__name__)


def eval_action(motion, P_field, lam_field, model: HamiltonianModel) -> float:
    """Augmented action Σ [P·dΓ − λ H(q, P)] over the elements of a discrete
    motion, with P and λ sampled at the element midpoints."""
    elements = list(motion.elements())
    P_field = list(P_field)
    lam_field = list(np.atleast_1d(np.asarray(lam_field, dtype=float)))
    if len(P_field) != len(elements) or len(lam_field) != len(elements):
        raise HamconRuntimeError(
            f"sampling mismatch: {len(elements)} elements, {len(P_field)} "
            f"momenta and {len(lam_field)} multipliers"
        )
    action = 0.0
    for (q, dGamma), P, lam in zip(elements, P_field, lam_field):
        action += (P | dGamma).scalar_part() - lam * model.eval(q, P)
    return action


class DerivativeReport(ExportableType):
    EXFIELDS = [
        ExportableField('model'),
        ExportableField('trials', int),
        ExportableField('max_error_dP', float),
        ExportableField('max_error_dq', float),
        ExportableField('worst_blade', int),
        ExportableField('tolerance', float),
        ExportableField('passed', bool),
    ]

    def __init__(self, model, trials, max_error_dP, max_error_dq,
                 worst_blade, tolerance):
        self.model = model
        self.trials = trials
        self.max_error_dP = max_error_dP
        self.max_error_dq = max_error_dq
        self.worst_blade = worst_blade
        self.tolerance = tolerance

    @property
    def max_error(self):
        return max(self.max_error_dP, self.max_error_dq)

    @property
    def passed(self):
        return self.max_error <= self.tolerance


def check_model_derivatives(model: HamiltonianModel, trials: int = 100,
                            tol: Optional[float] = None,
                            rng=None) -> DerivativeReport:
    """Compares the analytic derivatives of model with finite differences on
    random points and momenta. Errors are relative to max(1, |FD value|).
    The report flags the blade of the largest momentum derivative
    deviation."""
    rng = np.random.default_rng(0) if rng is None else rng
    tol = RuntimeConf().numerics.derivative_tol if tol is None else tol
    max_dP = 0.0
    max_dq = 0.0
    worst_blade = -1
    for _ in range(trials):
        q = model.random_point(rng)
        P = model.random_momentum(rng)
        fd_dP = mv_derivative(
            lambda value: model.eval(q, value), P, grades=(model.D,)
        )
        diff = model.dH_dP(q, P).coeffs - fd_dP.coeffs
        error = np.linalg.norm(diff) / max(1.0, fd_dP.magnitude())
        if error > max_dP:
            max_dP = error
            worst_blade = int(np.argmax(np.abs(diff)))
        fd_dq = vector_derivative(lambda point: model.eval(point, P), q)
        gradient = fd_dq.gradient()
        error = (model.dH_dq_explicit(q, P) - gradient).magnitude() / max(
            1.0, gradient.magnitude()
        )
        max_dq = max(max_dq, error)
    report = DerivativeReport(
        model.label, trials, max_dP, max_dq, worst_blade, tol
    )
    if not report.passed:
        logger.warning(
            "Analytic derivatives of %s deviate from finite differences: "
            "%.3e (worst momentum blade %d)",
            model.label,
            report.max_error,
            worst_blade,
        )
    return report


class DWConditionsReport(ExportableType):
    EXFIELDS = [
        ExportableField('model'),
        ExportableField('trials', int),
        ExportableField('pseudoscalar_violation', float),
        ExportableField('field_bivector_violation', float),
    ]

    def __init__(self, model, trials, pseudoscalar_violation,
                 field_bivector_violation):
        self.model = model
        self.trials = trials
        self.pseudoscalar_violation = pseudoscalar_violation
        self.field_bivector_violation = field_bivector_violation

    @property
    def max_violation(self):
        return max(self.pseudoscalar_violation, self.field_bivector_violation)


def dw_conditions_check(model: ScalarFieldModel, trials: int = 100,
                        rng=None) -> DWConditionsReport:
    """Verifies on random momenta that the De Donder-Weyl part of the
    constraint does not depend on the pure spacetime and field bivector
    components of P: I_x·∂_P H_DW = 0 and (e_b∧e_a)·∂_P H_DW = 0."""
    rng = np.random.default_rng(0) if rng is None else rng
    pseudoscalar = 0.0
    bivector = 0.0
    pairs = [
        (model.field_basis[b] ^ model.field_basis[a])
        for a in range(model.N)
        for b in range(model.N)
        if a != b
    ]
    for _ in range(trials):
        q = model.random_point(rng)
        P = model.random_momentum(rng)
        derivative = mv_derivative(
            lambda value: model.dw_part(q, value), P, grades=(model.D,)
        )
        pseudoscalar = max(
            pseudoscalar, (model.I_x | derivative).magnitude()
        )
        for B in pairs:
            bivector = max(bivector, (B | derivative).magnitude())
    return DWConditionsReport(model.label, trials, pseudoscalar, bivector)
