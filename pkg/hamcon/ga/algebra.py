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

from functools import lru_cache

import numpy as np

from ..errors import HamconAlgebraError
from ..log import logr
from .multivector import Multivector

logger = logr(__name__)

MAX_DIMENSION = 8


def blade_grade(index):
    """Returns the grade of the basis blade identified by bitset index."""
    return bin(index).count('1')


def reorder_sign(a, b):
    """Returns the sign obtained by reordering the generators of the product
    of basis blades a and b into canonical ascending order."""
    a >>= 1
    swaps = 0
    while a:
        swaps += blade_grade(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


class ProductTables:
    """Precomputed index and sign tables of the products of a Euclidean
    algebra. For result blade k and left blade a, the right blade is a ^ k so
    the product of coefficient arrays A and B is A @ (sign * B[xor])."""

    def __init__(self, n):
        count = 1 << n
        idx = np.arange(count)
        self.popcount = np.array([blade_grade(i) for i in idx], dtype=int)
        a = idx[:, np.newaxis]
        k = idx[np.newaxis, :]
        b = a ^ k
        self.xor = b
        swaps = np.zeros((count, count), dtype=int)
        for shift in range(1, n):
            swaps += self.popcount[(a >> shift) & b]
        # contraction of repeated generators contributes +1 in Euclidean
        # signature, so only reordering swaps matter.
        self.gp = np.where(swaps & 1, -1.0, 1.0)
        grade_a = self.popcount[a] + np.zeros_like(b)
        grade_b = self.popcount[b]
        grade_k = self.popcount[k] + np.zeros_like(b)
        self.op = np.where((a & b) == 0, self.gp, 0.0)
        self.ip = np.where(
            (grade_k == np.abs(grade_a - grade_b))
            & (grade_a > 0)
            & (grade_b > 0),
            self.gp,
            0.0,
        )
        self.reverse = np.array(
            [
                -1.0 if (g * (g - 1) // 2) & 1 else 1.0
                for g in self.popcount
            ]
        )


@lru_cache(maxsize=None)
def product_tables(n):
    logger.debug("Computing product tables of Cl(%d)", n)
    return ProductTables(n)


class Algebra:
    """Euclidean geometric algebra Cl(n) over n orthonormal generators.

    Basis blades are identified by the bitset of their generators, generator
    e_i (1-based label) having bit i-1. Coefficient arrays of multivectors
    are dense over the 2^n blades in ascending bitset order."""

    def __init__(self, n: int):
        if not isinstance(n, (int, np.integer)) or not (
            1 <= n <= MAX_DIMENSION
        ):
            raise HamconAlgebraError(
                f"algebra dimension must be an integer in [1, "
                f"{MAX_DIMENSION}], not {n}"
            )
        self.n = int(n)
        self.blade_count = 1 << self.n
        self.tables = product_tables(self.n)

    def __repr__(self):
        return f"Algebra(n={self.n})"

    def __eq__(self, other):
        return isinstance(other, Algebra) and other.n == self.n

    def __hash__(self):
        return hash(('Algebra', self.n))

    @property
    def grades(self):
        return self.tables.popcount

    def blades_of_grade(self, r):
        """Returns the sorted bitsets of all basis blades of grade r."""
        return [int(i) for i in np.flatnonzero(self.grades == r)]

    def grade_mask(self, grades):
        return np.isin(self.grades, list(grades))

    def zero(self):
        return Multivector(self, np.zeros(self.blade_count))

    def scalar(self, value):
        coeffs = np.zeros(self.blade_count)
        coeffs[0] = value
        return Multivector(self, coeffs)

    def blade(self, index, value=1.0):
        """Returns value times the basis blade identified by bitset index."""
        if not 0 <= index < self.blade_count:
            raise HamconAlgebraError(
                f"blade index {index} out of range for {self}"
            )
        coeffs = np.zeros(self.blade_count)
        coeffs[index] = value
        return Multivector(self, coeffs)

    def vector(self, values):
        """Returns the grade-1 multivector of the given n components."""
        values = np.asarray(values, dtype=float)
        if values.shape != (self.n,):
            raise HamconAlgebraError(
                f"vector of {self} needs {self.n} components, got shape "
                f"{values.shape}"
            )
        coeffs = np.zeros(self.blade_count)
        coeffs[[1 << i for i in range(self.n)]] = values
        return Multivector(self, coeffs)

    def basis_vectors(self):
        return [self.blade(1 << i) for i in range(self.n)]

    def e(self, *labels):
        """Returns the geometric product of generators e_label in the given
        order, labels being 1-based. Without labels, returns the unit
        scalar."""
        result = self.scalar(1.0)
        for label in labels:
            if not 1 <= label <= self.n:
                raise HamconAlgebraError(
                    f"generator label {label} out of range for {self}"
                )
            result = result * self.blade(1 << (label - 1))
        return result

    def pseudoscalar(self, labels=None, sign=1.0):
        """Returns the unit blade wedging the given generators in ascending
        order, multiplied by sign. Without labels, returns the pseudoscalar
        of the whole algebra."""
        if labels is None:
            labels = range(1, self.n + 1)
        return sign * self.e(*sorted(labels))

    def from_export(self, pairs):
        """Build a multivector from a list of [bitset, coefficient] pairs."""
        coeffs = np.zeros(self.blade_count)
        for index, value in pairs:
            if not 0 <= int(index) < self.blade_count:
                raise HamconAlgebraError(
                    f"blade index {index} out of range for {self}"
                )
            coeffs[int(index)] += float(value)
        return Multivector(self, coeffs)

    def random(self, rng, grades=None, scale=1.0):
        """Returns a multivector with standard normal coefficients on the
        requested grades (all grades by default) drawn from numpy random
        generator rng."""
        coeffs = scale * rng.standard_normal(self.blade_count)
        if grades is not None:
            coeffs = np.where(self.grade_mask(grades), coeffs, 0.0)
        return Multivector(self, coeffs)
