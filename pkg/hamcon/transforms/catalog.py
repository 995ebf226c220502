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

from ..errors import HamconAlgebraError, HamconScenarioError
from ..ga import Algebra, Multivector
from .maps import Diffeo, VectorField
from .rotors import rotor_exp


def translation(v0: Multivector) -> VectorField:
    """Constant generator v(q) = v₀."""
    n = v0.algebra.n
    return VectorField(
        lambda q: v0,
        label='translate',
        jacobian=lambda q: np.zeros((n, n)),
    )


def _rotation_jacobian(B: Multivector) -> np.ndarray:
    return np.column_stack(
        [(e | B).vector_part() for e in B.algebra.basis_vectors()]
    )


def rotation(B: Multivector, x0: Multivector = None) -> VectorField:
    """Rotation generator v(q) = (q − x₀)·B."""
    if not B.grade(2).allclose(B, atol=1e-14):
        raise HamconAlgebraError("rotation generator must be a bivector")
    x0 = B.algebra.zero() if x0 is None else x0
    J = _rotation_jacobian(B)
    return VectorField(
        lambda q: (q - x0) | B, label='rotate', jacobian=lambda q: J
    )


def field_rotation(B_y: Multivector, D: int) -> VectorField:
    """Field rotation generator v(q) = y·B_y, with B_y a bivector of the
    field subspace spanned by the generators after the first D."""
    spacetime = (1 << D) - 1
    for index in np.flatnonzero(B_y.coeffs):
        if int(index) & spacetime:
            raise HamconAlgebraError(
                "field rotation bivector must lie in the field subspace"
            )
    field = rotation(B_y)
    field.label = 'rotate_y'
    return field


def anisotropic_scaling(algebra: Algebra, axis: int = 1) -> VectorField:
    """Scaling of a single axis, v(q) = (q·e_axis) e_axis. This generator
    is not a symmetry of the built-in models."""
    e = algebra.e(axis)
    J = np.zeros((algebra.n, algebra.n))
    J[axis - 1, axis - 1] = 1.0
    return VectorField(
        lambda q: (q | e) * e, label='scale', jacobian=lambda q: J
    )


def translate_diffeo(v0: Multivector) -> Diffeo:
    n = v0.algebra.n
    return Diffeo(
        lambda q: q + v0,
        inverse=lambda p: p - v0,
        label='translate',
        jacobian=lambda q: np.eye(n),
    )


def rotate_diffeo(B: Multivector, x0: Multivector = None, label='rotate'):
    """Finite rotation q ↦ x₀ + R (q − x₀) R̃ with R = exp(−B/2), the unit
    parameter flow of rotation(B, x₀)."""
    return rotor_exp(B).as_diffeo(center=x0, label=label)


def scaling_diffeo(algebra: Algebra, axis: int = 1, factor: float = 2.0):
    if factor == 0.0:
        raise HamconAlgebraError("scaling factor must be nonzero")
    J = np.eye(algebra.n)
    J[axis - 1, axis - 1] = factor
    Jinv = np.linalg.inv(J)
    return Diffeo(
        lambda q: algebra.vector(J @ q.vector_part()),
        inverse=lambda p: algebra.vector(Jinv @ p.vector_part()),
        label='scale',
        jacobian=lambda q: J,
    )


def bivector_from_spec(algebra: Algebra, spec) -> Multivector:
    """Builds a bivector from a configuration mapping, either with
    generator labels `plane: [i, j]` and optional `angle`, or with canonical
    `blades: [[bitset, coeff], ...]` pairs."""
    if 'plane' in spec:
        plane = spec['plane']
        if len(plane) != 2 or plane[0] == plane[1]:
            raise HamconScenarioError(
                f"rotation plane must be two distinct labels, not {plane}"
            )
        B = float(spec.get('angle', 1.0)) * algebra.e(*plane)
    elif 'blades' in spec:
        B = algebra.from_export(spec['blades'])
    else:
        raise HamconScenarioError(
            "rotation needs either a plane or a blades definition"
        )
    if not B.grade(2).allclose(B, atol=0.0):
        raise HamconScenarioError("rotation blades must be of grade 2")
    return B


def _vector_from_spec(algebra, values, name):
    try:
        return algebra.vector(values)
    except HamconAlgebraError as err:
        raise HamconScenarioError(f"invalid {name}: {err}")


GENERATOR_KINDS = {
    'translate': "spacetime or field translation v(q) = v0",
    'rotate': "rotation of the whole configuration space around center x0",
    'rotate_x': "spacetime rotation v(q) = (q − x0)·B around center x0",
    'rotate_y': "field rotation v(q) = y·B_y",
    'scale': "anisotropic scaling of one axis (symmetry breaking control)",
}


def generator_from_spec(algebra: Algebra, spec, D: int):
    """Returns the (VectorField, Diffeo) pair described by configuration
    mapping spec. Custom generators are only available through the library
    API."""
    kind = spec.get('kind')
    if kind == 'custom':
        raise HamconScenarioError(
            "custom generators are not available in configuration files"
        )
    if kind == 'translate':
        v0 = _vector_from_spec(algebra, spec.get('v0'), 'translation v0')
        return translation(v0), translate_diffeo(v0)
    if kind in ('rotate', 'rotate_x'):
        B = bivector_from_spec(algebra, spec)
        field_mask = ((1 << algebra.n) - 1) ^ ((1 << D) - 1)
        if kind == 'rotate_x' and any(
            int(i) & field_mask for i in np.flatnonzero(B.coeffs)
        ):
            raise HamconScenarioError(
                "rotate_x bivector must lie in the spacetime subspace"
            )
        x0 = spec.get('x0')
        x0 = (
            algebra.zero()
            if x0 is None
            else _vector_from_spec(algebra, x0, 'rotation center x0')
        )
        generator = rotation(B, x0)
        generator.label = kind
        return generator, rotate_diffeo(B, x0, label=kind)
    if kind == 'rotate_y':
        B = bivector_from_spec(algebra, spec)
        try:
            field = field_rotation(B, D)
        except HamconAlgebraError as err:
            raise HamconScenarioError(str(err))
        return field, rotate_diffeo(B, label='rotate_y')
    if kind == 'scale':
        axis = int(spec.get('axis', 1))
        if not 1 <= axis <= algebra.n:
            raise HamconScenarioError(f"scaling axis {axis} out of range")
        return (
            anisotropic_scaling(algebra, axis),
            scaling_diffeo(algebra, axis, float(spec.get('factor', 2.0))),
        )
    raise HamconScenarioError(
        f"unknown generator kind {kind}, expected one of "
        f"{', '.join(sorted(GENERATOR_KINDS))}"
    )
