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

import numbers
from typing import Callable, Iterable, Optional

import numpy as np

from ..conf import RuntimeConf
from ..errors import HamconNumericalError
from ..utils import fd_step
from .multivector import Multivector


class ScalarMvFunction:
    """Real valued function of a multivector argument with its declared
    support grades."""

    def __init__(
        self, func: Callable[[Multivector], float], grades: Iterable[int]
    ):
        self.func = func
        self.grades = tuple(sorted(set(grades)))

    def __call__(self, value: Multivector) -> float:
        return float(self.func(value))


def _finite(value, what):
    if not np.all(np.isfinite(value)):
        raise HamconNumericalError(f"non-finite {what} evaluation")
    return value


def mv_derivative(F, P: Multivector, grades=None, h: Optional[float] = None):
    """Multivector derivative of real function F at P, restricted to the
    given grades (the declared support of F when it is a ScalarMvFunction,
    all grades otherwise).

    Each blade coefficient is a central difference along that blade,
    weighted by the inverse of the blade. In the orthonormal Euclidean basis
    the inverse of a blade is its reverse, so the weight is the reversion
    sign."""
    algebra = P.algebra
    if grades is None:
        grades = getattr(F, 'grades', range(algebra.n + 1))
    if h is None:
        h = fd_step(P.magnitude(), RuntimeConf().numerics.fd_step)
    coeffs = np.zeros(algebra.blade_count)
    for index in np.flatnonzero(algebra.grade_mask(grades)):
        step = algebra.blade(int(index), h)
        forward = _finite(float(F(P + step)), 'function')
        backward = _finite(float(F(P - step)), 'function')
        coeffs[index] = (
            algebra.tables.reverse[index] * (forward - backward) / (2 * h)
        )
    return Multivector(algebra, coeffs)


class DirectionalSamples:
    """Directional derivatives a_i·∂_q G along the basis vectors e_i of the
    configuration space. Assembles the vector derivative and its inner,
    outer and overdot combinations."""

    def __init__(self, algebra, samples):
        self.algebra = algebra
        self.samples = samples

    def __getitem__(self, i):
        return self.samples[i]

    def __len__(self):
        return len(self.samples)

    def gradient(self):
        """Full vector derivative Σ e_i (e_i·∂_q G)."""
        return sum(
            (e * s for e, s in zip(self.algebra.basis_vectors(), self.samples)),
            self.algebra.zero(),
        )

    def divergence(self):
        """Returns ∂_q·G."""
        return sum(
            (e | s for e, s in zip(self.algebra.basis_vectors(), self.samples)),
            self.algebra.zero(),
        )

    def curl(self):
        """Returns ∂_q∧G."""
        return sum(
            (e ^ s for e, s in zip(self.algebra.basis_vectors(), self.samples)),
            self.algebra.zero(),
        )

    def overdot(self, A: Multivector):
        """Returns ∂̇_q∧(v̇·A) = Σ e_i∧((e_i·∂_q v)·A) for G = v a vector
        field, the differentiation acting on v only."""
        return sum(
            (
                e ^ (s | A)
                for e, s in zip(self.algebra.basis_vectors(), self.samples)
            ),
            self.algebra.zero(),
        )

    def jacobian(self):
        """Matrix J with J[j, i] = e_j·(e_i·∂_q G) for a vector valued G."""
        return np.column_stack([s.vector_part() for s in self.samples])


def _as_multivector(algebra, value):
    if isinstance(value, numbers.Real):
        return algebra.scalar(float(value))
    return value


def vector_derivative(G, q: Multivector, h: Optional[float] = None):
    """Central differences of G along every basis direction at point q."""
    algebra = q.algebra
    if h is None:
        h = fd_step(q.magnitude(), RuntimeConf().numerics.fd_step)
    samples = []
    for e in algebra.basis_vectors():
        forward = _as_multivector(algebra, G(q + h * e))
        backward = _as_multivector(algebra, G(q - h * e))
        sample = (forward - backward) / (2 * h)
        _finite(sample.coeffs, 'sample')
        samples.append(sample)
    return DirectionalSamples(algebra, samples)
