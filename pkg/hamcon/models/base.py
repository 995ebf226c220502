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

import numpy as np

from ..errors import HamconAlgebraError
from ..ga import Algebra, Multivector


class HamiltonianModel:
    """Generic parent class of Hamiltonian constraints H(q, P) = 0 with
    q a point of the D+N dimensional configuration space and P a grade-D
    momentum. Specialized classes provide the constraint and its analytic
    derivatives."""

    TYPE = None

    def __init__(self, D: int, N: int):
        if D < 1 or N < 0:
            raise HamconAlgebraError(
                f"invalid motion dimension D={D} or field dimension N={N}"
            )
        self.D = D
        self.N = N
        self.algebra = Algebra(D + N)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.label})"

    @property
    def label(self):
        return self.TYPE

    def _check(self, q: Multivector, P: Multivector):
        if q.algebra != self.algebra or P.algebra != self.algebra:
            raise HamconAlgebraError(
                f"point or momentum outside of model {self.algebra}"
            )

    def eval(self, q: Multivector, P: Multivector) -> float:
        raise NotImplementedError

    def dH_dq_explicit(self, q: Multivector, P: Multivector) -> Multivector:
        """Vector derivative ∂̇_q H(q̇, P) acting on the explicit position
        dependence only."""
        raise NotImplementedError

    def dH_dP(self, q: Multivector, P: Multivector) -> Multivector:
        raise NotImplementedError

    def closed_form_projection(self, q: Multivector, P: Multivector):
        """Returns the projection of P on the constraint surface when a
        closed form exists, None otherwise."""
        return None

    def random_point(self, rng, scale=1.0) -> Multivector:
        return self.algebra.random(rng, grades=(1,), scale=scale)

    def random_momentum(self, rng, scale=1.0) -> Multivector:
        return self.algebra.random(rng, grades=(self.D,), scale=scale)

    def params(self):
        return {}

    def export(self):
        return {'type': self.TYPE, 'D': self.D, 'N': self.N, **self.params()}


def field_values(model: HamiltonianModel, q: Multivector) -> np.ndarray:
    """Returns the field components φ_a of point q, the coordinates beyond
    the first D."""
    return q.vector_part()[model.D:]
