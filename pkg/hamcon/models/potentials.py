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

import re

import numpy as np

from ..errors import HamconScenarioError


class Potential:
    """Generic parent class of field potentials V(y). Field values are given
    as arrays whose first axis runs over the N field components, so that
    potentials evaluate at a single point or on whole grids."""

    NAME = None
    DESCRIPTION = None
    # True when V depends on y only through y²
    ROTATION_INVARIANT = True

    def __repr__(self):
        return self.label

    @property
    def label(self):
        args = ', '.join(f"{value:g}" for value in self.params().values())
        return f"{self.NAME}({args})"

    def params(self):
        return {}

    def value(self, phi):
        raise NotImplementedError

    def gradient(self, phi):
        raise NotImplementedError

    def hessian_diag(self, phi):
        """Returns ∂²V/∂φ_a² for every component a."""
        raise NotImplementedError

    def export(self):
        return {'name': self.NAME, **self.params()}


class ZeroPotential(Potential):
    NAME = 'zero'
    DESCRIPTION = "massless free field, V = 0"

    def value(self, phi):
        return np.zeros_like(np.asarray(phi, dtype=float)[0])

    def gradient(self, phi):
        return np.zeros_like(np.asarray(phi, dtype=float))

    def hessian_diag(self, phi):
        return np.zeros_like(np.asarray(phi, dtype=float))


class MassPotential(Potential):
    NAME = 'mass'
    DESCRIPTION = "free massive field, V = ½m²y²"

    def __init__(self, m=1.0):
        self.m = float(m)

    def params(self):
        return {'m': self.m}

    def value(self, phi):
        phi = np.asarray(phi, dtype=float)
        return 0.5 * self.m**2 * np.sum(phi**2, axis=0)

    def gradient(self, phi):
        return self.m**2 * np.asarray(phi, dtype=float)

    def hessian_diag(self, phi):
        return np.full_like(np.asarray(phi, dtype=float), self.m**2)


class QuarticPotential(Potential):
    NAME = 'quartic'
    DESCRIPTION = "self-interacting field, V = ½m²y² + ¼g(y²)²"

    def __init__(self, m=1.0, g=1.0):
        self.m = float(m)
        self.g = float(g)

    def params(self):
        return {'m': self.m, 'g': self.g}

    def value(self, phi):
        phi = np.asarray(phi, dtype=float)
        y2 = np.sum(phi**2, axis=0)
        return 0.5 * self.m**2 * y2 + 0.25 * self.g * y2**2

    def gradient(self, phi):
        phi = np.asarray(phi, dtype=float)
        y2 = np.sum(phi**2, axis=0)
        return (self.m**2 + self.g * y2) * phi

    def hessian_diag(self, phi):
        phi = np.asarray(phi, dtype=float)
        y2 = np.sum(phi**2, axis=0)
        return self.m**2 + self.g * y2 + 2 * self.g * phi**2


class TiltPotential(Potential):
    NAME = 'tilt'
    DESCRIPTION = (
        "massive field tilted along the first component, "
        "V = ½m²y² + cφ₁ (breaks field rotations)"
    )
    ROTATION_INVARIANT = False

    def __init__(self, m=1.0, c=1.0):
        self.m = float(m)
        self.c = float(c)

    def params(self):
        return {'m': self.m, 'c': self.c}

    def value(self, phi):
        phi = np.asarray(phi, dtype=float)
        return 0.5 * self.m**2 * np.sum(phi**2, axis=0) + self.c * phi[0]

    def gradient(self, phi):
        phi = np.asarray(phi, dtype=float)
        gradient = self.m**2 * phi
        gradient[0] = gradient[0] + self.c
        return gradient

    def hessian_diag(self, phi):
        return np.full_like(np.asarray(phi, dtype=float), self.m**2)


class PotentialFactory(object):

    _potentials = {
        'zero': ZeroPotential,
        'mass': MassPotential,
        'quartic': QuarticPotential,
        'tilt': TiltPotential,
    }

    @staticmethod
    def names():
        return sorted(PotentialFactory._potentials)

    @staticmethod
    def description(name):
        return PotentialFactory._potentials[name].DESCRIPTION

    @staticmethod
    def generate(spec):
        """Generate a Potential from a `name(arg, ...)` string or from a
        mapping with a name key and keyword parameters."""
        if isinstance(spec, Potential):
            return spec
        if isinstance(spec, str):
            match = re.fullmatch(r'\s*(\w+)\s*(?:\((.*)\))?\s*', spec)
            if match is None:
                raise HamconScenarioError(f"invalid potential {spec}")
            name = match.group(1)
            try:
                args = [
                    float(arg)
                    for arg in (match.group(2) or '').split(',')
                    if arg.strip()
                ]
            except ValueError:
                raise HamconScenarioError(
                    f"invalid potential arguments in {spec}"
                )
            kwargs = {}
        elif isinstance(spec, dict):
            spec = dict(spec)
            name = spec.pop('name', None)
            args = []
            kwargs = spec
        else:
            raise HamconScenarioError(f"invalid potential definition {spec}")
        if name not in PotentialFactory._potentials:
            raise HamconScenarioError(
                f"unknown potential {name}, expected one of "
                f"{', '.join(PotentialFactory.names())}"
            )
        try:
            return PotentialFactory._potentials[name](*args, **kwargs)
        except TypeError as err:
            raise HamconScenarioError(f"invalid potential {name}: {err}")
