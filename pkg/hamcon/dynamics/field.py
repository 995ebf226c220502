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
from typing import Optional

import numpy as np
from scipy.integrate import trapezoid

from ..conf import RuntimeConf
from ..errors import HamconFieldSolverError, HamconScenarioError
from ..ga import Multivector
from ..log import logr
from ..models import ScalarFieldModel
from ..transforms import graph_outermorphism

logger = logr(__name__)


class FieldGrid:
    """Uniform Cartesian grid over the spacetime box Ω holding the N field
    components φ_a at every node and, once recovered, the momentum
    coefficients over the whole blade basis.

    Field values are stored in an array of shape (N, *nodes), momenta in an
    array of shape (2^n, *nodes). Nodes on the faces of the box hold the
    fixed boundary data."""

    def __init__(self, lower, upper, nodes, phi, momentum=None):
        self.lower = np.array(lower, dtype=float)
        self.upper = np.array(upper, dtype=float)
        self.nodes = tuple(int(count) for count in nodes)
        self.phi = np.array(phi, dtype=float)
        self.momentum = (
            None if momentum is None else np.array(momentum, dtype=float)
        )
        self.diagnostics = {}
        if not (len(self.lower) == len(self.upper) == len(self.nodes)):
            raise HamconScenarioError("grid box and node counts mismatch")
        if any(count < 4 for count in self.nodes):
            raise HamconScenarioError(
                f"grid resolution must be at least 4 nodes per edge, not "
                f"{self.nodes}"
            )
        if np.any(self.upper <= self.lower):
            raise HamconScenarioError("grid box upper corner below lower")
        if self.phi.ndim != self.D + 1 or self.phi.shape[1:] != self.nodes:
            raise HamconScenarioError(
                f"field values shape {self.phi.shape} does not match grid "
                f"nodes {self.nodes}"
            )

    @property
    def D(self):
        return len(self.nodes)

    @property
    def N(self):
        return self.phi.shape[0]

    @property
    def spacing(self) -> np.ndarray:
        return (self.upper - self.lower) / (np.array(self.nodes) - 1)

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def axes(self):
        return [
            np.linspace(low, high, count)
            for low, high, count in zip(self.lower, self.upper, self.nodes)
        ]

    def coords(self) -> np.ndarray:
        """Returns the node coordinates as an array of shape (D, *nodes)."""
        return np.array(np.meshgrid(*self.axes(), indexing='ij'))

    def boundary_mask(self) -> np.ndarray:
        mask = np.zeros(self.nodes, dtype=bool)
        for axis in range(self.D):
            index = [slice(None)] * self.D
            index[axis] = 0
            mask[tuple(index)] = True
            index[axis] = -1
            mask[tuple(index)] = True
        return mask

    def copy(self):
        grid = FieldGrid(
            self.lower, self.upper, self.nodes, self.phi, self.momentum
        )
        grid.diagnostics = dict(self.diagnostics)
        return grid

    def gradients(self) -> np.ndarray:
        """Returns ∂_i φ_a at every node as an array of shape
        (N, D, *nodes), central differences in the interior and second
        order one sided differences on the boundary."""
        gradients = np.zeros((self.N, self.D) + self.nodes)
        for a in range(self.N):
            components = np.gradient(
                self.phi[a], *self.spacing, edge_order=2
            )
            if self.D == 1:
                components = [components]
            gradients[a] = np.array(components)
        return gradients

    def node_momentum(self, model: ScalarFieldModel, index) -> Multivector:
        return Multivector(
            model.algebra, self.momentum[(slice(None),) + tuple(index)]
        )

    def points(self) -> np.ndarray:
        """Returns the lifted points x + y(x) as an array of shape
        (n, *nodes)."""
        return np.concatenate([self.coords(), self.phi], axis=0)

    @classmethod
    def from_function(cls, func, lower, upper, nodes):
        """Samples func at every node. func takes the coordinates array of
        shape (D, *nodes) and returns the field values of shape (N, *nodes)
        or (*nodes) for a single component."""
        grid = cls(lower, upper, nodes, np.zeros((1,) + tuple(nodes)))
        values = np.asarray(func(grid.coords()), dtype=float)
        if values.shape == grid.nodes:
            values = values[np.newaxis]
        return cls(lower, upper, nodes, values)

    @classmethod
    def from_boundary(cls, func, lower, upper, nodes, interior=0.0):
        """Samples func on the boundary nodes only, interior nodes being set
        to a constant initial guess."""
        grid = cls.from_function(func, lower, upper, nodes)
        grid.phi[:, ~grid.boundary_mask()] = interior
        return grid

    def rows(self, model: ScalarFieldModel):
        """Yields the CSV table header and rows: node coordinates, field
        values and grade D momentum coefficients."""
        blades = model.algebra.blades_of_grade(self.D)
        header = (
            [f"x{i + 1}" for i in range(self.D)]
            + [f"phi{a + 1}" for a in range(self.N)]
            + (
                [f"P{blade:0{model.algebra.n}b}" for blade in blades]
                if self.momentum is not None
                else []
            )
        )
        yield header
        coords = self.coords().reshape(self.D, -1)
        phi = self.phi.reshape(self.N, -1)
        momentum = (
            None
            if self.momentum is None
            else self.momentum[blades].reshape(len(blades), -1)
        )
        for node in range(coords.shape[1]):
            row = list(coords[:, node]) + list(phi[:, node])
            if momentum is not None:
                row += list(momentum[:, node])
            yield row

    def dump_csv(self, path: Path, model: ScalarFieldModel):
        with open(path, 'w', newline='') as fh:
            writer = csv.writer(fh)
            rows = self.rows(model)
            writer.writerow(next(rows))
            for row in rows:
                writer.writerow([f"{value:.17g}" for value in row])


def _interior(D):
    return tuple(slice(1, -1) for _ in range(D))


def _shifted(D, axis, offset):
    """Slices of the neighbors of interior nodes shifted along axis."""
    return tuple(
        (slice(1 + offset, offset - 1 if offset < 1 else None)
         if i == axis else slice(1, -1))
        for i in range(D)
    )


def field_residual(grid: FieldGrid, model: ScalarFieldModel) -> np.ndarray:
    """Returns Δ_h φ_a + ∂V/∂φ_a at the interior nodes, an array of shape
    (N, *interior nodes)."""
    D = grid.D
    interior = _interior(D)
    inv_h2 = 1.0 / grid.spacing**2
    residual = np.zeros((grid.N,) + tuple(c - 2 for c in grid.nodes))
    for a in range(grid.N):
        f = grid.phi[a]
        for axis in range(D):
            residual[a] += inv_h2[axis] * (
                f[_shifted(D, axis, 1)]
                - 2.0 * f[interior]
                + f[_shifted(D, axis, -1)]
            )
    residual += model.potential.gradient(grid.phi[(slice(None),) + interior])
    return residual


def solve_scalar_field(
    grid: FieldGrid,
    model: ScalarFieldModel,
    tol: Optional[float] = None,
    max_iters: Optional[int] = None,
) -> FieldGrid:
    """Solves the field equations Δφ_a = −∂V/∂φ_a with the boundary values
    of grid by red-black successive over-relaxation of nodal Newton updates
    on the 2D+1 point Laplacian stencil, the red nodes (even index sum)
    being swept before the black ones. Iterates until the largest nodal
    residual is below tol, then recovers the momentum. Returns a new
    grid."""
    conf = RuntimeConf().field
    tol = conf.tol if tol is None else tol
    max_iters = conf.max_iters if max_iters is None else max_iters
    if grid.D != model.D or grid.N != model.N:
        raise HamconFieldSolverError(
            f"grid of D={grid.D} N={grid.N} does not match {model.label}"
        )
    solved = grid.copy()
    D = grid.D
    interior = _interior(D)
    inv_h2 = 1.0 / solved.spacing**2
    center = 2.0 * float(np.sum(inv_h2))
    omega = 2.0 / (1.0 + math.sin(math.pi / (max(grid.nodes) - 1)))
    parity = np.indices(grid.nodes).sum(axis=0)[interior] % 2
    residual = float(np.max(np.abs(field_residual(solved, model))))
    growth = 0
    sweeps = 0
    logger.debug(
        "Solving %s on %s nodes with ω=%.4f, initial residual %.3e",
        model.label, grid.nodes, omega, residual,
    )
    while residual >= tol:
        if sweeps >= max_iters:
            raise HamconFieldSolverError(
                f"field solver did not converge in {max_iters} sweeps "
                f"(residual {residual:.3e})",
                diagnostics={'sweeps': sweeps, 'residual': residual},
            )
        for color in (0, 1):
            mask = parity == color
            inner = solved.phi[(slice(None),) + interior]
            gradient = model.potential.gradient(inner)
            hessian = model.potential.hessian_diag(inner)
            for a in range(grid.N):
                f = solved.phi[a]
                F = -center * f[interior] + gradient[a]
                for axis in range(D):
                    F = F + inv_h2[axis] * (
                        f[_shifted(D, axis, 1)] + f[_shifted(D, axis, -1)]
                    )
                update = f[interior] - omega * F / (hessian[a] - center)
                f[interior] = np.where(mask, update, f[interior])
        sweeps += 1
        previous = residual
        residual = float(np.max(np.abs(field_residual(solved, model))))
        if not math.isfinite(residual):
            raise HamconFieldSolverError(
                f"field solver produced non-finite values after {sweeps} "
                "sweeps",
                diagnostics={'sweeps': sweeps},
            )
        growth = growth + 1 if residual > previous else 0
        if growth >= conf.divergence_window:
            raise HamconFieldSolverError(
                f"field solver diverges, residual grew over {growth} "
                f"consecutive sweeps (residual {residual:.3e})",
                diagnostics={'sweeps': sweeps, 'residual': residual},
            )
        if logger.has_debug() and sweeps % 500 == 0:
            logger.debug("sweep %d: residual %.3e", sweeps, residual)
    solved.diagnostics.update({'sweeps': sweeps, 'residual': residual})
    logger.debug("Field solver converged in %d sweeps", sweeps)
    return recover_momentum(solved, model)


def _mixed_coefficient_map(model: ScalarFieldModel) -> np.ndarray:
    """Returns C with C[a, i] the coefficients of (Ĩ_x e_i)∧e_a, so that the
    mixed momentum components are Σ_{a,i} C[a, i] ∂_i φ_a."""
    algebra = model.algebra
    reverse_I = model.I_x.reverse() / (model.I_x * model.I_x.reverse())[0]
    C = np.zeros((model.N, model.D, algebra.blade_count))
    for a, e_a in enumerate(model.field_basis):
        for i in range(model.D):
            C[a, i] = ((reverse_I * algebra.e(i + 1)) ^ e_a).coeffs
    return C


def recover_momentum(grid: FieldGrid, model: ScalarFieldModel) -> FieldGrid:
    """Sets the momentum of every node from the field gradients: the mixed
    components invert ∂_x φ_a = I_x (P·e_a), the pure spacetime component
    solves the constraint for P·I_x and the field bivector components are
    zero. Returns a new grid."""
    recovered = grid.copy()
    gradients = grid.gradients()
    momentum = np.einsum('aik,ai...->k...', _mixed_coefficient_map(model),
                         gradients)
    kinetic = 0.5 * np.sum(gradients**2, axis=(0, 1))
    coefficient = (-kinetic - model.potential.value(grid.phi)) / (
        model.I_x_square
    )
    pseudoscalar = int(np.flatnonzero(model.I_x.coeffs)[0])
    momentum[pseudoscalar] += coefficient * model.I_x.coeffs[pseudoscalar]
    recovered.momentum = momentum
    return recovered


def constraint_violation(grid: FieldGrid, model: ScalarFieldModel) -> float:
    """Returns the largest |H(q, P)| over the grid nodes."""
    violation = 0.0
    points = grid.points()
    for index in np.ndindex(*grid.nodes):
        q = model.algebra.vector(points[(slice(None),) + index])
        P = grid.node_momentum(model, index)
        violation = max(violation, abs(model.eval(q, P)))
    return violation


def field_bivector_violation(grid: FieldGrid, model: ScalarFieldModel):
    """Returns the largest |P·(e_a∧e_b)| over the grid nodes."""
    violation = 0.0
    for index in np.ndindex(*grid.nodes):
        P = grid.node_momentum(model, index)
        for a in range(model.N):
            for b in range(a + 1, model.N):
                B = model.field_basis[a] ^ model.field_basis[b]
                violation = max(violation, (P | B).magnitude())
    return violation


def _trapezoid(values, spacing):
    for h in spacing[::-1]:
        values = trapezoid(values, dx=h, axis=-1)
    return float(values)


def lagrangian_action_check(grid: FieldGrid, model: ScalarFieldModel):
    """Returns the Hamiltonian and Lagrangian actions of a solved grid.

    The Hamiltonian action sums P̄·dΓ − |dX| H(q̄, P̄) over the grid cells,
    with the momentum and point averaged over the cell corners and dΓ the
    exact surface element of the cell, the outermorphism of the graph map
    built from the cell averaged edge differences. The Lagrangian action is
    the trapezoidal integral of ½ Σ (∂_x φ_a)² − V over the nodes."""
    if grid.momentum is None:
        raise HamconFieldSolverError(
            "momentum must be recovered before evaluating actions"
        )
    D = grid.D
    spacing = grid.spacing
    volume = grid.cell_volume
    corners = list(np.ndindex(*(2,) * D))
    cells = tuple(count - 1 for count in grid.nodes)
    points = grid.points()

    def corner_mean(values):
        """Average over the cell corners of values of shape (k, *nodes)."""
        total = 0.0
        for corner in corners:
            index = tuple(
                slice(c, c + cells[i]) for i, c in enumerate(corner)
            )
            total = total + values[(slice(None),) + index]
        return total / len(corners)

    P_cells = corner_mean(grid.momentum)
    q_cells = corner_mean(points)
    # cell averaged difference quotients along every axis
    slopes = np.zeros((D, grid.N) + cells)
    for axis in range(D):
        for corner in corners:
            if corner[axis]:
                continue
            low = tuple(
                slice(c, c + cells[i]) for i, c in enumerate(corner)
            )
            high = tuple(
                slice(c + (i == axis), c + (i == axis) + cells[i])
                for i, c in enumerate(corner)
            )
            slopes[axis] += (
                grid.phi[(slice(None),) + high]
                - grid.phi[(slice(None),) + low]
            ) / spacing[axis]
        slopes[axis] /= len(corners) / 2
    hamiltonian = 0.0
    for index in np.ndindex(*cells):
        cell = (slice(None),) + index
        P = Multivector(model.algebra, P_cells[cell])
        q = model.algebra.vector(q_cells[cell])
        dGamma = volume * graph_outermorphism(
            model.I_x, slopes[(slice(None), slice(None)) + index]
        )
        hamiltonian += (P | dGamma).scalar_part() - volume * model.eval(q, P)
    gradients = grid.gradients()
    density = 0.5 * np.sum(gradients**2, axis=(0, 1)) - model.potential.value(
        grid.phi
    )
    lagrangian = _trapezoid(density, spacing)
    return hamiltonian, lagrangian
