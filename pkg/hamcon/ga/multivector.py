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

import numpy as np

from ..errors import HamconAlgebraError


class Multivector:
    """Immutable element of a Euclidean geometric algebra.

    Operators: ``*`` geometric product (or scaling by a real), ``^`` outer
    product, ``|`` Hestenes inner product, ``~`` reversion. Adding a real
    number adds to the scalar part."""

    __slots__ = ('algebra', 'coeffs')

    # numpy scalars on the left defer to the reflected operators
    __array_ufunc__ = None

    def __init__(self, algebra, coeffs):
        coeffs = np.array(coeffs, dtype=float)
        if coeffs.shape != (algebra.blade_count,):
            raise HamconAlgebraError(
                f"multivector of {algebra} needs {algebra.blade_count} "
                f"coefficients, got shape {coeffs.shape}"
            )
        coeffs.setflags(write=False)
        self.algebra = algebra
        self.coeffs = coeffs

    def __repr__(self):
        terms = [
            f"{value:+.6g}·e[{index:b}]" if index else f"{value:+.6g}"
            for index, value in enumerate(self.coeffs)
            if value != 0.0
        ]
        return f"Multivector({' '.join(terms) or '0'})"

    def _check(self, other):
        if not isinstance(other, Multivector):
            raise HamconAlgebraError(
                f"expected a multivector, got {type(other).__name__}"
            )
        if other.algebra != self.algebra:
            raise HamconAlgebraError(
                f"algebra mismatch: {self.algebra} and {other.algebra}"
            )

    def _new(self, coeffs):
        return Multivector(self.algebra, coeffs)

    def _product(self, other, signs):
        self._check(other)
        tables = self.algebra.tables
        return self._new(self.coeffs @ (signs * other.coeffs[tables.xor]))

    def __getitem__(self, index):
        return float(self.coeffs[index])

    def __add__(self, other):
        if isinstance(other, numbers.Real):
            coeffs = self.coeffs.copy()
            coeffs[0] += other
            return self._new(coeffs)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check(other)
        return self._new(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (numbers.Real, Multivector)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return self._new(self.coeffs * float(other))
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._product(other, self.algebra.tables.gp)

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return self._new(self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return self._new(self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, numbers.Real):
            return self * other
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._product(other, self.algebra.tables.op)

    def __rxor__(self, other):
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __or__(self, other):
        # scalars annihilate in the Hestenes inner product
        if isinstance(other, numbers.Real):
            return self.algebra.zero()
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._product(other, self.algebra.tables.ip)

    def __ror__(self, other):
        if isinstance(other, numbers.Real):
            return self.algebra.zero()
        return NotImplemented

    def __invert__(self):
        return self.reverse()

    def reverse(self):
        return self._new(self.coeffs * self.algebra.tables.reverse)

    def grade(self, r):
        """Returns the grade-r part."""
        return self._new(np.where(self.algebra.grades == r, self.coeffs, 0.0))

    def grade_project(self, grades):
        """Returns the part supported on the given grade or grades."""
        if isinstance(grades, numbers.Integral):
            return self.grade(grades)
        return self._new(
            np.where(self.algebra.grade_mask(grades), self.coeffs, 0.0)
        )

    def grades(self, atol=0.0):
        """Returns the sorted list of grades holding coefficients larger than
        atol in magnitude."""
        mask = np.abs(self.coeffs) > atol
        return sorted({int(g) for g in self.algebra.grades[mask]})

    def is_homogeneous(self, atol=0.0):
        return len(self.grades(atol)) <= 1

    def magnitude(self):
        return float(np.linalg.norm(self.coeffs))

    def scalar_part(self):
        return float(self.coeffs[0])

    def scalar_product(self, other):
        """Returns the scalar part of the geometric product."""
        self._check(other)
        signs = self.algebra.tables.gp[:, 0]
        return float(np.sum(self.coeffs * signs * other.coeffs))

    def vector_part(self):
        """Returns the grade-1 coefficients as an array of n components."""
        return np.array(
            [self.coeffs[1 << i] for i in range(self.algebra.n)], dtype=float
        )

    def normalized(self):
        norm = self.magnitude()
        if norm == 0.0:
            raise HamconAlgebraError("unable to normalize zero multivector")
        return self / norm

    def is_zero(self, atol=0.0):
        return bool(np.all(np.abs(self.coeffs) <= atol))

    def allclose(self, other, atol=1e-12, rtol=0.0):
        self._check(other)
        return bool(
            np.allclose(self.coeffs, other.coeffs, atol=atol, rtol=rtol)
        )

    def export(self):
        """Export nonzero coefficients as [bitset, coefficient] pairs in
        canonical bitset order."""
        return [
            [int(index), float(value)]
            for index, value in enumerate(self.coeffs)
            if value != 0.0
        ]


def geometric_product(a, b):
    return a * b


def outer_product(a, b):
    return a ^ b


def inner_product(a, b):
    return a | b


def reverse(a):
    return a.reverse()


def grade_project(a, r):
    return a.grade_project(r)


def magnitude(a):
    return a.magnitude()
