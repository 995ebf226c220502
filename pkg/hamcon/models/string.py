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

from ..errors import HamconAlgebraError
from ..ga import Multivector
from .base import HamiltonianModel


class StringModel(HamiltonianModel):
    """Relativistic particle (D=1) and Nambu-Goto string (D=2) constraint
    H = ½(|P|² − Λ²)."""

    TYPE = 'string'

    def __init__(self, tension: float, D: int = 1, n: int = 3):
        if tension <= 0:
            raise HamconAlgebraError(
                f"string tension must be positive, not {tension}"
            )
        if n < D:
            raise HamconAlgebraError(
                f"configuration space dimension {n} lower than D={D}"
            )
        super().__init__(D, n - D)
        self.tension = float(tension)

    @property
    def label(self):
        return f"string(Λ={self.tension:g}, D={self.D}, n={self.algebra.n})"

    def params(self):
        return {'tension': self.tension}

    def eval(self, q: Multivector, P: Multivector) -> float:
        self._check(q, P)
        return 0.5 * (P.magnitude() ** 2 - self.tension**2)

    def dH_dq_explicit(self, q: Multivector, P: Multivector) -> Multivector:
        return self.algebra.zero()

    def dH_dP(self, q: Multivector, P: Multivector) -> Multivector:
        return P.reverse()

    def closed_form_projection(self, q: Multivector, P: Multivector):
        return (self.tension / P.magnitude()) * P
