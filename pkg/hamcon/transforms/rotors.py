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

import numpy as np

from ..errors import HamconAlgebraError
from ..ga import Multivector
from .maps import Diffeo

# Taylor terms of the series exponential after scaling
SERIES_TERMS = 24


def _series_exp(X: Multivector) -> Multivector:
    """Exponential of a general multivector by scaling and squaring of the
    truncated Taylor series."""
    norm = X.magnitude()
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    Y = X / (2 ** squarings)
    term = X.algebra.scalar(1.0)
    result = term
    for k in range(1, SERIES_TERMS):
        term = (term * Y) / k
        result = result + term
    for _ in range(squarings):
        result = result * result
    return result


class Rotor:
    """Rotor R = exp(-B/2) generated by bivector B, acting by conjugation
    A ↦ R A R̃."""

    def __init__(self, B: Multivector, R: Multivector):
        self.B = B
        self.R = R

    def __repr__(self):
        return f"Rotor({self.R!r})"

    def apply(self, A: Multivector) -> Multivector:
        return self.R * A * self.R.reverse()

    def inverse(self):
        return Rotor(-self.B, self.R.reverse())

    def matrix(self) -> np.ndarray:
        """Matrix of the rotation on vectors, column i being R e_i R̃."""
        basis = self.B.algebra.basis_vectors()
        return np.column_stack([self.apply(e).vector_part() for e in basis])

    def unitarity_error(self) -> float:
        return (self.R * self.R.reverse() - 1.0).magnitude()

    def as_diffeo(self, center: Multivector = None, label: str = 'rotor'):
        """Returns the diffeomorphism q ↦ x₀ + R (q − x₀) R̃."""
        algebra = self.B.algebra
        center = algebra.zero() if center is None else center
        inverse = self.inverse()
        matrix = self.matrix()
        return Diffeo(
            lambda q: center + self.apply(q - center),
            inverse=lambda p: center + inverse.apply(p - center),
            label=label,
            jacobian=lambda q: matrix,
        )


def rotor_exp(B: Multivector) -> Rotor:
    """Returns the rotor exp(-B/2). The closed form
    cos(|B|/2) − sin(|B|/2) B/|B| is used when B is simple, the series
    exponential otherwise."""
    if not B.grade(2).allclose(B, atol=1e-14):
        raise HamconAlgebraError("rotor generator must be a bivector")
    algebra = B.algebra
    norm = B.magnitude()
    if norm == 0.0:
        return Rotor(B, algebra.scalar(1.0))
    if (B ^ B).magnitude() <= 1e-12 * norm**2:
        R = math.cos(norm / 2) - math.sin(norm / 2) * (B / norm)
        return Rotor(B, R)
    return Rotor(B, _series_exp(-0.5 * B))


def rotor_apply(rotor: Rotor, A: Multivector) -> Multivector:
    return rotor.apply(A)
