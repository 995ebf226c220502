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

from typing import List

import numpy as np

from ..errors import HamconRuntimeError
from ..exports import ExportableType, ExportableField
from ..ga import Multivector
from ..transforms import VectorField
from ..dynamics import Worldline


class NoetherCharge(ExportableType):
    """Grade D−1 multivector P·v evaluated at location q."""

    EXFIELDS = [
        ExportableField('generator'),
        ExportableField('q', Multivector),
        ExportableField('value', Multivector),
    ]

    def __init__(self, value: Multivector, q: Multivector, generator: str):
        self.value = value
        self.q = q
        self.generator = generator


class ChargeSeries(ExportableType):
    EXFIELDS = [
        ExportableField('generator'),
        ExportableField('spread', float),
        ExportableField('charges', List[NoetherCharge]),
    ]

    def __init__(self, generator: str, charges: List[NoetherCharge]):
        self.generator = generator
        self.charges = charges

    @property
    def spread(self) -> float:
        """Largest blade coefficient range of the charges."""
        if len(self.charges) < 2:
            return 0.0
        values = np.array([charge.value.coeffs for charge in self.charges])
        return float(np.max(values.max(axis=0) - values.min(axis=0)))


def charge_along_worldline(w: Worldline, v: VectorField) -> ChargeSeries:
    """Evaluates the Noether charge P·v at every worldline sample."""
    if not len(w):
        raise HamconRuntimeError("empty worldline")
    return ChargeSeries(
        v.label,
        [
            NoetherCharge(sample.P | v(sample.q), sample.q, v.label)
            for sample in w
        ],
    )


def string_charge_consistency(w: Worldline, v: VectorField, tension: float,
                              sign: float = 1.0) -> float:
    """Returns max_k |P·v − sign Λ Ĩ_γ·v| along a string worldline, I_γ being
    the unit tangent of the adjacent segment."""
    if len(w) < 2:
        return 0.0
    error = 0.0
    for k, sample in enumerate(w):
        first, second = (k, k + 1) if k + 1 < len(w) else (k - 1, k)
        tangent = (w[second].q - w[first].q).normalized()
        expected = sign * tension * (tangent.reverse() | v(sample.q))
        error = max(
            error, ((sample.P | v(sample.q)) - expected).magnitude()
        )
    return error
