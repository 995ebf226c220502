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
from ..errors import HamconAlgebraError, HamconRuntimeError
from ..ga import Multivector, vector_derivative
from ..dynamics import Worldline
from ..models import HamiltonianModel, ScalarFieldModel
from ..utils import fd_step
from .solutions import HJSolution


def _step(q: Multivector, h: Optional[float]) -> float:
    if h is None:
        return fd_step(q.magnitude(), RuntimeConf().numerics.fd_step)
    return h


def momentum_from_hj(sol: HJSolution, q: Multivector, h=None,
                     alpha=None) -> Multivector:
    """Returns P(q) = ∂_q∧S(q; α) by central differences."""
    h = _step(q, h)
    sol.check_stencil(q, h)
    return vector_derivative(sol.at(alpha), q, h).curl()


def hj_residual(model: HamiltonianModel, sol: HJSolution, q: Multivector,
                h=None, alpha=None) -> float:
    """Returns H(q, ∂_q∧S(q)), zero wherever S solves the local
    Hamilton-Jacobi equation of the model."""
    if sol.D != model.D or sol.algebra != model.algebra:
        raise HamconAlgebraError(
            f"solution {sol.label} does not match model {model.label}"
        )
    return model.eval(q, momentum_from_hj(sol, q, h, alpha))


def curl_of_momentum(sol: HJSolution, q: Multivector, h=None,
                     alpha=None) -> float:
    """Returns the largest coefficient of ∂_q∧P for P = ∂_q∧S, nested
    central differences of a common step so that they commute."""
    if h is None:
        h = fd_step(q.magnitude(), 1e-4)
    sol.check_stencil(q, 2 * h)
    curl = vector_derivative(
        lambda point: momentum_from_hj(sol, point, h, alpha), q, h
    ).curl()
    return float(np.max(np.abs(curl.coeffs)))


def weyl_hj_residual(model: ScalarFieldModel, s, q: Multivector,
                     h=None) -> float:
    """Returns ∂_x·s + H_DW(q, (∂_y s) I_x⁻¹) for the spacetime vector field
    s of q, with ∂_y s = Σ_a e_a (e_a·∂_q) s the field space derivative."""
    h = _step(q, h)
    if isinstance(s, HJSolution):
        s.check_stencil(q, h)
    samples = vector_derivative(s, q, h)
    basis = model.algebra.basis_vectors()
    divergence = sum(
        (basis[i] | samples[i]).scalar_part() for i in range(model.D)
    )
    field_derivative = sum(
        (e * samples[model.D + a] for a, e in enumerate(model.field_basis)),
        model.algebra.zero(),
    )
    P = field_derivative * model.I_x.reverse()
    return divergence + model.dw_part(q, P)


def conserved_from_family(sol: HJSolution, w: Worldline, index: int,
                          h=None) -> float:
    """Returns the largest coefficient range of ∂S/∂α_index along the
    samples of the worldline, zero when the worldline is a characteristic
    of the solution family."""
    alpha = sol.parameters()
    if not 0 <= index < alpha.size:
        raise HamconRuntimeError(
            f"solution {sol.label} has no parameter {index}"
        )
    if h is None:
        h = fd_step(alpha[index], RuntimeConf().numerics.fd_step)
    step = np.zeros(alpha.size)
    step[index] = h
    values = np.array(
        [
            ((sol(sample.q, alpha + step) - sol(sample.q, alpha - step))
             / (2 * h)).coeffs
            for sample in w
        ]
    )
    if len(values) < 2:
        return 0.0
    return float(np.max(values.max(axis=0) - values.min(axis=0)))
