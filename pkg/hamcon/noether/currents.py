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

import csv
import math
from pathlib import Path
from typing import List, Optional

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from ..errors import HamconDomainError, HamconRuntimeError
from ..exports import ExportableType, ExportableField
from ..ga import Multivector
from ..log import logr
from ..models import ScalarFieldModel
from ..dynamics import FieldGrid
from ..transforms import VectorField, field_rotation, graph_adjoint, rotation

logger = logr(__name__)


class SpacetimeCurrent(ExportableType):
    """Spacetime vector field j sampled on the nodes of a field grid, stored
    as an array of shape (D, *nodes). The leakage is the largest field
    space component met while computing j, zero up to roundoff."""

    EXFIELDS = [
        ExportableField('label'),
        ExportableField('route'),
        ExportableField('params', dict),
        ExportableField('leakage', float),
    ]

    def __init__(self, j, grid: FieldGrid, label, route='lagrangian',
                 params=None, leakage=0.0):
        self.j = np.asarray(j, dtype=float)
        self.lower = grid.lower
        self.upper = grid.upper
        self.nodes = grid.nodes
        self.spacing = grid.spacing
        self.axes = grid.axes()
        self.label = label
        self.route = route
        self.params = params or {}
        self.leakage = leakage

    @property
    def D(self):
        return len(self.nodes)

    def interpolator(self):
        return RegularGridInterpolator(
            self.axes, np.moveaxis(self.j, 0, -1), method='linear'
        )

    def rows(self):
        yield (
            [f"x{i + 1}" for i in range(self.D)]
            + [f"j{i + 1}" for i in range(self.D)]
        )
        coords = np.array(np.meshgrid(*self.axes, indexing='ij')).reshape(
            self.D, -1
        )
        j = self.j.reshape(self.D, -1)
        for node in range(coords.shape[1]):
            yield list(coords[:, node]) + list(j[:, node])

    def dump_csv(self, path: Path):
        with open(path, 'w', newline='') as fh:
            writer = csv.writer(fh)
            rows = self.rows()
            writer.writerow(next(rows))
            for row in rows:
                writer.writerow([f"{value:.17g}" for value in row])


def _vector_array(v, D):
    """Spacetime components of a vector given as a multivector or array."""
    if isinstance(v, Multivector):
        values = v.vector_part()
        if np.any(values[D:] != 0.0):
            raise HamconRuntimeError("generator must be a spacetime vector")
        return values[:D]
    values = np.asarray(v, dtype=float)
    if values.shape != (D,):
        raise HamconRuntimeError(f"spacetime vector needs {D} components")
    return values


def lagrangian_density(grid: FieldGrid, model: ScalarFieldModel,
                       gradients=None) -> np.ndarray:
    """Returns L = ½ Σ_a (∂_x φ_a)² − V at every node."""
    gradients = grid.gradients() if gradients is None else gradients
    return 0.5 * np.sum(gradients**2, axis=(0, 1)) - model.potential.value(
        grid.phi
    )


def translation_current(grid: FieldGrid, model: ScalarFieldModel,
                        v_nodes: np.ndarray) -> np.ndarray:
    """Returns j = −v L + Σ_a (v·∂_x φ_a) ∂_x φ_a for the spacetime vector
    field v given at every node as an array of shape (D, *nodes)."""
    gradients = grid.gradients()
    density = lagrangian_density(grid, model, gradients)
    projections = np.einsum('i...,ai...->a...', v_nodes, gradients)
    return -v_nodes * density + np.einsum(
        'a...,ai...->i...', projections, gradients
    )


def momentum_route_current(grid: FieldGrid, model: ScalarFieldModel,
                           v: VectorField) -> SpacetimeCurrent:
    """Returns j = −I_x·ḡ(P·v) at every node, ḡ being the pull back through
    the graph map of the field configuration."""
    if grid.momentum is None:
        raise HamconRuntimeError("momentum must be recovered first")
    gradients = grid.gradients()
    points = grid.points()
    j = np.zeros((grid.D,) + grid.nodes)
    leakage = 0.0
    for index in np.ndindex(*grid.nodes):
        node = (slice(None),) + index
        q = model.algebra.vector(points[node])
        P = grid.node_momentum(model, index)
        pulled = graph_adjoint(
            P | v(q), gradients[(slice(None), slice(None)) + index].T
        )
        current = -(model.I_x | pulled).vector_part()
        j[node] = current[: grid.D]
        leakage = max(leakage, float(np.max(np.abs(current[grid.D:]))))
    return SpacetimeCurrent(j, grid, v.label, route='momentum',
                            leakage=leakage)


def energy_momentum_current(grid: FieldGrid, model: ScalarFieldModel, v_x,
                            route: str = 'lagrangian') -> SpacetimeCurrent:
    """Energy-momentum current of the spacetime translation v_x, either from
    the canonical energy-momentum tensor (lagrangian route) or from the
    Noether charge P·v (momentum route)."""
    v = _vector_array(v_x, grid.D)
    params = {'v_x': v.tolist()}
    if route == 'momentum':
        vector = model.algebra.vector(np.concatenate([v, np.zeros(grid.N)]))
        current = momentum_route_current(
            grid, model, VectorField(lambda q: vector, label='translate')
        )
        current.params = params
        return current
    if route != 'lagrangian':
        raise HamconRuntimeError(f"unknown current route {route}")
    v_nodes = np.broadcast_to(
        v.reshape((grid.D,) + (1,) * grid.D), (grid.D,) + grid.nodes
    )
    return SpacetimeCurrent(
        translation_current(grid, model, v_nodes), grid, 'translate',
        params=params,
    )


def spacetime_rotation_current(grid: FieldGrid, model: ScalarFieldModel,
                               B_x: Multivector, x0=None,
                               route: str = 'lagrangian'):
    """Angular momentum current of the spacetime rotation generated by B_x
    around x₀, the energy-momentum current of v(x) = (x − x₀)·B_x."""
    x0 = np.zeros(grid.D) if x0 is None else _vector_array(x0, grid.D)
    center = model.algebra.vector(np.concatenate([x0, np.zeros(grid.N)]))
    generator = rotation(B_x, center)
    params = {'B_x': B_x.export(), 'x0': x0.tolist()}
    if route == 'momentum':
        current = momentum_route_current(grid, model, generator)
        current.label = 'rotate_x'
        current.params = params
        return current
    if route != 'lagrangian':
        raise HamconRuntimeError(f"unknown current route {route}")
    J = generator.jacobian(center)[: grid.D, : grid.D]
    offsets = grid.coords() - x0.reshape((grid.D,) + (1,) * grid.D)
    v_nodes = np.einsum('ik,k...->i...', J, offsets)
    return SpacetimeCurrent(
        translation_current(grid, model, v_nodes), grid, 'rotate_x',
        params=params,
    )


def field_rotation_current(grid: FieldGrid, model: ScalarFieldModel,
                           B_y: Multivector, route: str = 'lagrangian'):
    """Current of the field rotation generated by B_y, in closed form
    j = Σ_{a,b} ((e_a∧e_b)·B_y) φ_a ∂_x φ_b (lagrangian route) or from the
    Noether charge P·(y·B_y) (momentum route)."""
    generator = field_rotation(B_y, model.D)
    params = {'B_y': B_y.export()}
    if route == 'momentum':
        current = momentum_route_current(grid, model, generator)
        current.params = params
        return current
    if route != 'lagrangian':
        raise HamconRuntimeError(f"unknown current route {route}")
    K = np.array(
        [
            [((e_a ^ e_b) | B_y).scalar_part() for e_b in model.field_basis]
            for e_a in model.field_basis
        ]
    )
    j = np.einsum('ab,a...,bi...->i...', K, grid.phi, grid.gradients())
    return SpacetimeCurrent(j, grid, 'rotate_y', params=params)


def rotation_currents(grid: FieldGrid, model: ScalarFieldModel, B_x=None,
                      x0=None, B_y=None, route: str = 'lagrangian'):
    """Returns the spacetime rotation current when B_x is given, the field
    rotation current when B_y is given."""
    if (B_x is None) == (B_y is None):
        raise HamconRuntimeError("either B_x or B_y must be given")
    if B_x is not None:
        return spacetime_rotation_current(grid, model, B_x, x0, route)
    return field_rotation_current(grid, model, B_y, route)


class ContinuityReport(ExportableType):
    EXFIELDS = [
        ExportableField('current'),
        ExportableField('margin', int),
        ExportableField('max', float),
        ExportableField('l2', float),
    ]

    def __init__(self, current, margin, residual, spacing):
        self.current = current
        self.margin = margin
        self.residual = residual
        self.max = float(np.max(np.abs(residual))) if residual.size else 0.0
        self.l2 = float(
            math.sqrt(np.sum(residual**2) * np.prod(spacing))
        )


def continuity_residual(current: SpacetimeCurrent,
                        margin: int = 2) -> ContinuityReport:
    """Central difference divergence ∂_x·j on the nodes at least margin
    nodes away from the boundary, where the whole stencil relies on central
    field gradients."""
    if any(count <= 2 * margin for count in current.nodes):
        raise HamconDomainError(
            f"grid {current.nodes} too small for a margin of {margin}"
        )
    divergence = sum(
        np.gradient(current.j[i], current.spacing[i], axis=i)
        for i in range(current.D)
    )
    inner = tuple(slice(margin, -margin) for _ in range(current.D))
    return ContinuityReport(
        current.label, margin, divergence[inner], current.spacing
    )


def grid_patch_loop(grid: FieldGrid, start, stop) -> List[tuple]:
    """Returns the node indices of the boundary of the axis aligned
    rectangle of a D=2 grid between corner indices start and stop, counter
    clockwise in the orientation of I_x."""
    if grid.D != 2:
        raise HamconDomainError("patch loops are defined on D=2 grids")
    (i0, j0), (i1, j1) = start, stop
    if not (0 <= i0 < i1 < grid.nodes[0] and 0 <= j0 < j1 < grid.nodes[1]):
        raise HamconDomainError(f"invalid patch corners {start} {stop}")
    loop = [(i, j0) for i in range(i0, i1)]
    loop += [(i1, j) for j in range(j0, j1)]
    loop += [(i, j1) for i in range(i1, i0, -1)]
    loop += [(i0, j) for j in range(j1, j0, -1)]
    return loop


def mesh_patch_loop(mesh) -> List[int]:
    """Returns the first boundary loop of a mesh patch."""
    loops = mesh.boundary_loops()
    if not loops:
        raise HamconDomainError("mesh patch has no boundary")
    return loops[0]


def flux_through_patch_boundary(points: List[Multivector],
                                momenta: List[Multivector],
                                v: VectorField) -> float:
    """Returns the trapezoidal quadrature of ∮ dΣ·(P·v) along the closed
    loop of configuration space points, with momenta given at the same
    points, for D=2 motions."""
    if len(points) != len(momenta) or len(points) < 3:
        raise HamconRuntimeError("flux loop needs matching points and momenta")
    charges = [P | v(q) for q, P in zip(points, momenta)]
    flux = 0.0
    for k in range(len(points)):
        following = (k + 1) % len(points)
        dSigma = points[following] - points[k]
        average = 0.5 * (charges[k] + charges[following])
        flux += (dSigma | average).scalar_part()
    return flux


def grid_patch_flux(grid: FieldGrid, model: ScalarFieldModel,
                    v: VectorField, start, stop) -> float:
    """Flux of the charge P·v through the lifted boundary of a rectangular
    grid patch."""
    loop = grid_patch_loop(grid, start, stop)
    points = grid.points()
    return flux_through_patch_boundary(
        [model.algebra.vector(points[(slice(None),) + node]) for node in loop],
        [grid.node_momentum(model, node) for node in loop],
        v,
    )


def circle_flux(current: SpacetimeCurrent, center, radius: float,
                samples: Optional[int] = 512) -> float:
    """Outward flux ∮ j·n ds of a D=2 current through the circle of given
    center and radius, with linear interpolation of j between nodes."""
    if current.D != 2:
        raise HamconDomainError("circle fluxes are defined for D=2 currents")
    theta = 2 * math.pi * (np.arange(samples) + 0.5) / samples
    normals = np.column_stack([np.cos(theta), np.sin(theta)])
    points = np.asarray(center, dtype=float) + radius * normals
    if np.any(points < current.lower) or np.any(points > current.upper):
        raise HamconDomainError("circle leaves the grid")
    values = current.interpolator()(points)
    return float(
        np.sum(values * normals) * 2 * math.pi * radius / samples
    )
