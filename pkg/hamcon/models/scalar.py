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
from ..ga import Multivector
from .base import HamiltonianModel, field_values
from .potentials import PotentialFactory, ZeroPotential


class ScalarFieldModel(HamiltonianModel):
    """N-component scalar field over a D-dimensional spacetime, with the
    constraint H = P·I_x + H_DW(q, P), where
    H_DW = ½ Σ_a |I_x·(P·e_a)|² + V(y) is the De Donder-Weyl part.

    Spacetime is spanned by the first D generators with pseudoscalar
    I_x = σ e_1∧…∧e_D, σ being the orientation sign, and the field basis is
    e_a = e_{D+a}."""

    TYPE = 'scalar_field'

    def __init__(self, D: int = 2, N: int = 1, potential=None,
                 orientation: float = 1.0):
        if D < 2:
            raise HamconAlgebraError(
                f"scalar field spacetime dimension must be ≥ 2, not {D}"
            )
        if N < 1:
            raise HamconAlgebraError(
                f"scalar field needs at least one component, not {N}"
            )
        if orientation not in (1, -1, 1.0, -1.0):
            raise HamconAlgebraError(
                f"orientation sign must be ±1, not {orientation}"
            )
        super().__init__(D, N)
        self.potential = (
            ZeroPotential()
            if potential is None
            else PotentialFactory.generate(potential)
        )
        self.orientation = float(orientation)
        self.I_x = self.algebra.pseudoscalar(
            range(1, D + 1), sign=self.orientation
        )
        self.field_basis = [self.algebra.e(D + a) for a in range(1, N + 1)]
        # I_x·I_x, the scalar relating P·I_x to the I_x coefficient of P
        self.I_x_square = (self.I_x | self.I_x).scalar_part()
        grades = self.algebra.grades
        field_mask = ((1 << self.algebra.n) - 1) ^ ((1 << D) - 1)
        field_bits = np.array(
            [bin(i & field_mask).count('1') for i in range(grades.size)]
        )
        self.mixed_mask = (grades == D) & (field_bits == 1)

    @property
    def label(self):
        return (
            f"scalar_field(D={self.D}, N={self.N}, V={self.potential.label})"
        )

    def params(self):
        return {
            'potential': self.potential.label,
            'orientation': self.orientation,
        }

    def potential_value(self, q: Multivector) -> float:
        return float(self.potential.value(field_values(self, q)))

    def mixed_part(self, P: Multivector) -> Multivector:
        """Returns the components of P holding exactly one field generator,
        the ones encoding the field gradients."""
        return Multivector(
            self.algebra, np.where(self.mixed_mask, P.coeffs, 0.0)
        )

    def gradient_term(self, P: Multivector) -> float:
        """Returns ½ Σ_a |I_x·(P·e_a)|²."""
        return 0.5 * sum(
            (self.I_x | (P | e)).magnitude() ** 2 for e in self.field_basis
        )

    def dw_part(self, q: Multivector, P: Multivector) -> float:
        self._check(q, P)
        return self.gradient_term(P) + self.potential_value(q)

    def eval(self, q: Multivector, P: Multivector) -> float:
        return (P | self.I_x).scalar_part() + self.dw_part(q, P)

    def dH_dq_explicit(self, q: Multivector, P: Multivector) -> Multivector:
        gradient = self.potential.gradient(field_values(self, q))
        return sum(
            (g * e for g, e in zip(gradient, self.field_basis)),
            self.algebra.zero(),
        )

    def dH_dP(self, q: Multivector, P: Multivector) -> Multivector:
        return self.I_x + self.mixed_part(P).reverse()

    def field_gradients(self, P: Multivector) -> np.ndarray:
        """Returns the field gradients ∂_x φ_a = I_x (P·e_a) encoded by P, as
        an array of shape (N, D)."""
        gradients = np.zeros((self.N, self.D))
        for a, e in enumerate(self.field_basis):
            gradients[a] = (self.I_x * (P | e)).vector_part()[: self.D]
        return gradients

    def closed_form_projection(self, q: Multivector, P: Multivector):
        # H is affine in the I_x coefficient of P
        return P - (self.eval(q, P) / self.I_x_square) * self.I_x
