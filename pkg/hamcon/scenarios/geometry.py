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
from pathlib import Path

import numpy as np

from ..errors import HamconScenarioError
from ..dynamics import (
    FieldGrid,
    SurfaceMesh,
    catenoid_area,
    catenoid_mesh,
    helicoid_patch_mesh,
    planar_disk_mesh,
    sphere_cap_mesh,
)

MESHES = {
    'catenoid': "band between two coaxial rings of radius cosh(a) at ±a, "
    "analytic catenoid area",
    'planar_disk': "flat disk, a fixed point of the relaxation",
    'sphere_cap': "spherical band between two polar angles",
    'helicoid': "helicoid patch with its straight line boundary",
    'file': "indexed triangle list read from a YAML mesh file",
}


def _mesh_kwargs(geometry, names):
    return {name: geometry[name] for name in names if name in geometry}


def mesh_from_spec(geometry: dict, n: int):
    """Returns the mesh described by the geometry mapping and the analytic
    area of the minimal surface spanning its boundary, None when unknown."""
    kind = geometry.get('mesh')
    try:
        if kind == 'catenoid':
            kwargs = _mesh_kwargs(geometry, ('level', 'a'))
            mesh = catenoid_mesh(n=n, **kwargs)
            return mesh, catenoid_area(kwargs.get('a', 0.5))
        if kind == 'planar_disk':
            kwargs = _mesh_kwargs(geometry, ('radius', 'level'))
            return planar_disk_mesh(n=n, **kwargs), None
        if kind == 'sphere_cap':
            kwargs = _mesh_kwargs(
                geometry, ('radius', 'inner_angle', 'outer_angle', 'level')
            )
            return sphere_cap_mesh(n=n, **kwargs), None
        if kind == 'helicoid':
            kwargs = _mesh_kwargs(geometry, ('level', 'pitch', 'twist'))
            return helicoid_patch_mesh(n=n, **kwargs), None
    except TypeError as err:
        raise HamconScenarioError(f"invalid {kind} mesh parameters: {err}")
    if kind == 'file':
        if 'path' not in geometry:
            raise HamconScenarioError("mesh file path is missing")
        mesh = SurfaceMesh.load(Path(geometry['path']))
        if mesh.dimension != n:
            raise HamconScenarioError(
                f"mesh file dimension {mesh.dimension} does not match the "
                f"configuration space dimension {n}"
            )
        return mesh, None
    raise HamconScenarioError(
        f"unknown mesh {kind}, expected one of {', '.join(sorted(MESHES))}"
    )


def _harmonic_exp(coords, model):
    return np.exp(coords[0]) * np.sin(coords[1])


def _mass_cos(coords, model):
    m = model.potential.m
    return np.cos(m * coords[0]) / math.cos(m)


def _mass_pair(coords, model):
    m = model.potential.m
    return np.array(
        [
            np.cos(m * coords[0]) / math.cos(m),
            np.sin(m * coords[1]) / math.sin(m),
        ]
    )


# name: (description, exact solution, field components, potential name)
BOUNDARIES = {
    'harmonic_exp': (
        "massless field φ = exp(x1) sin(x2)",
        _harmonic_exp,
        1,
        'zero',
    ),
    'mass_cos': (
        "massive field φ = cos(m x1)/cos(m), invariant along x2",
        _mass_cos,
        1,
        'mass',
    ),
    'mass_pair': (
        "massive doublet φ = (cos(m x1)/cos(m), sin(m x2)/sin(m))",
        _mass_pair,
        2,
        'mass',
    ),
}


def grid_from_spec(geometry: dict, model):
    """Returns the initial grid holding the boundary data described by the
    geometry mapping, and the exact solution sampled on the same nodes."""
    name = geometry.get('boundary')
    if name not in BOUNDARIES:
        raise HamconScenarioError(
            f"unknown field boundary data {name}, expected one of "
            f"{', '.join(sorted(BOUNDARIES))}"
        )
    _, exact, components, potential = BOUNDARIES[name]
    if model.D != 2 or model.N != components:
        raise HamconScenarioError(
            f"boundary data {name} requires D=2 and N={components}"
        )
    if model.potential.NAME != potential:
        raise HamconScenarioError(
            f"boundary data {name} solves the field equations of the "
            f"{potential} potential only"
        )
    nodes = geometry.get('nodes', [33, 33])
    if isinstance(nodes, int):
        nodes = [nodes] * model.D
    lower = geometry.get('lower', [0.0] * model.D)
    upper = geometry.get('upper', [1.0] * model.D)

    def sample(coords):
        return exact(coords, model)

    grid = FieldGrid.from_boundary(
        sample, lower, upper, nodes, interior=geometry.get('interior', 0.0)
    )
    return grid, FieldGrid.from_function(sample, lower, upper, nodes)
