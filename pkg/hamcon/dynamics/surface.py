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
from typing import Callable, Optional

import numpy as np
import yaml
from scipy.optimize import minimize

from ..conf import RuntimeConf
from ..errors import (
    HamconDegenerateMeshError,
    HamconRelaxationError,
    HamconScenarioError,
)
from ..exports import ExportableType, ExportableField
from ..ga import Algebra
from ..log import logr

logger = logr(__name__)


def triangle_areas(vertices: np.ndarray, faces: np.ndarray) -> np.ndarray:
    a = vertices[faces[:, 1]] - vertices[faces[:, 0]]
    b = vertices[faces[:, 2]] - vertices[faces[:, 0]]
    aa = np.einsum('ij,ij->i', a, a)
    bb = np.einsum('ij,ij->i', b, b)
    ab = np.einsum('ij,ij->i', a, b)
    return 0.5 * np.sqrt(np.maximum(aa * bb - ab**2, 0.0))


class SurfaceMesh:
    """Discrete two dimensional motion: triangle mesh in the n dimensional
    configuration space with a fixed boundary.

    The optional boundary projector maps a boundary point back onto the
    continuous boundary curve, it is used by subdivide()."""

    def __init__(
        self,
        vertices,
        faces,
        boundary,
        boundary_projector: Optional[Callable] = None,
    ):
        self.vertices = np.array(vertices, dtype=float)
        self.faces = np.array(faces, dtype=int)
        boundary = np.asarray(boundary)
        if boundary.dtype == bool:
            self.boundary = boundary.copy()
        else:
            self.boundary = np.zeros(len(self.vertices), dtype=bool)
            self.boundary[boundary.astype(int)] = True
        self.boundary_projector = boundary_projector
        self._validate()
        self.algebra = Algebra(self.dimension)

    def _validate(self):
        if self.vertices.ndim != 2 or self.vertices.shape[1] < 2:
            raise HamconScenarioError(
                f"mesh vertices must be a table of points, got shape "
                f"{self.vertices.shape}"
            )
        if self.faces.ndim != 2 or self.faces.shape[1] != 3:
            raise HamconScenarioError(
                f"mesh faces must be triangles, got shape {self.faces.shape}"
            )
        if self.faces.size and (
            self.faces.min() < 0 or self.faces.max() >= len(self.vertices)
        ):
            raise HamconScenarioError("mesh face refers to unknown vertex")
        if self.boundary.shape != (len(self.vertices),):
            raise HamconScenarioError("mesh boundary mask size mismatch")

    @property
    def dimension(self):
        return self.vertices.shape[1]

    @property
    def interior(self):
        return np.flatnonzero(~self.boundary)

    def with_vertices(self, vertices):
        return SurfaceMesh(
            vertices, self.faces, self.boundary, self.boundary_projector
        )

    def face_areas(self, vertices=None) -> np.ndarray:
        vertices = self.vertices if vertices is None else vertices
        return triangle_areas(vertices, self.faces)

    def area(self) -> float:
        return float(np.sum(self.face_areas()))

    def dual_areas(self, vertices=None) -> np.ndarray:
        """Barycentric dual areas, one third of the adjacent face areas."""
        dual = np.zeros(len(self.vertices))
        areas = self.face_areas(vertices) / 3.0
        for corner in range(3):
            np.add.at(dual, self.faces[:, corner], areas)
        return dual

    def area_gradient(self, vertices=None) -> np.ndarray:
        """Gradient of the total area with respect to every vertex
        position."""
        vertices = self.vertices if vertices is None else vertices
        p0 = vertices[self.faces[:, 0]]
        a = vertices[self.faces[:, 1]] - p0
        b = vertices[self.faces[:, 2]] - p0
        aa = np.einsum('ij,ij->i', a, a)[:, np.newaxis]
        bb = np.einsum('ij,ij->i', b, b)[:, np.newaxis]
        ab = np.einsum('ij,ij->i', a, b)[:, np.newaxis]
        areas = triangle_areas(vertices, self.faces)
        if np.any(areas <= 0.0):
            raise HamconDegenerateMeshError(
                f"{int(np.sum(areas <= 0.0))} degenerate faces"
            )
        scale = 1.0 / (4.0 * areas[:, np.newaxis])
        grad_a = scale * (bb * a - ab * b)
        grad_b = scale * (aa * b - ab * a)
        gradient = np.zeros_like(vertices)
        np.add.at(gradient, self.faces[:, 1], grad_a)
        np.add.at(gradient, self.faces[:, 2], grad_b)
        np.add.at(gradient, self.faces[:, 0], -(grad_a + grad_b))
        return gradient

    def surface_elements(self):
        """Returns the list of oriented face surface elements
        dΓ = ½ (p1 − p0)∧(p2 − p0) as bivectors."""
        elements = []
        for face in self.faces:
            p0, p1, p2 = (self.algebra.vector(self.vertices[i]) for i in face)
            elements.append(0.5 * ((p1 - p0) ^ (p2 - p0)))
        return elements

    def face_pseudoscalars(self):
        """Returns the unit tangent bivector I_γ of every face."""
        return [element.normalized() for element in self.surface_elements()]

    def centroids(self) -> np.ndarray:
        return self.vertices[self.faces].mean(axis=1)

    def elements(self):
        """Yields the centroid and surface element of every face."""
        for centroid, element in zip(
            self.centroids(), self.surface_elements()
        ):
            yield self.algebra.vector(centroid), element

    def edges(self):
        """Returns a mapping of sorted vertex pairs to their face count."""
        counts = {}
        for face in self.faces:
            for i, j in ((0, 1), (1, 2), (2, 0)):
                edge = tuple(sorted((int(face[i]), int(face[j]))))
                counts[edge] = counts.get(edge, 0) + 1
        return counts

    def boundary_loops(self):
        """Returns the closed boundary edge loops as lists of vertex indices,
        oriented along the faces."""
        counts = self.edges()
        successor = {}
        for face in self.faces:
            for i, j in ((0, 1), (1, 2), (2, 0)):
                edge = tuple(sorted((int(face[i]), int(face[j]))))
                if counts[edge] == 1:
                    successor[int(face[i])] = int(face[j])
        loops = []
        while successor:
            start = min(successor)
            loop = [start]
            current = successor.pop(start)
            while current != start:
                loop.append(current)
                if current not in successor:
                    raise HamconDegenerateMeshError(
                        "mesh boundary is not a closed loop"
                    )
                current = successor.pop(current)
            loops.append(loop)
        return loops

    def subdivide(self):
        """Returns the 1→4 subdivision of the mesh: every edge is split at its
        midpoint. Boundary midpoints are moved back on the boundary curve
        when a boundary projector is defined."""
        counts = self.edges()
        midpoints = {}
        vertices = list(self.vertices)
        boundary = list(self.boundary)
        for edge, count in sorted(counts.items()):
            point = 0.5 * (self.vertices[edge[0]] + self.vertices[edge[1]])
            on_boundary = count == 1
            if on_boundary and self.boundary_projector is not None:
                point = self.boundary_projector(point)
            midpoints[edge] = len(vertices)
            vertices.append(point)
            boundary.append(on_boundary)
        faces = []
        for face in self.faces:
            i, j, k = (int(v) for v in face)
            ij = midpoints[tuple(sorted((i, j)))]
            jk = midpoints[tuple(sorted((j, k)))]
            ki = midpoints[tuple(sorted((k, i)))]
            faces.extend([[i, ij, ki], [ij, j, jk], [ki, jk, k], [ij, jk, ki]])
        return SurfaceMesh(
            np.array(vertices), faces, np.array(boundary),
            self.boundary_projector,
        )

    def dump(self, path: Path):
        """Writes the indexed triangle list in YAML format."""
        content = {
            'dimension': int(self.dimension),
            'vertices': self.vertices.tolist(),
            'faces': self.faces.tolist(),
            'boundary': [int(i) for i in np.flatnonzero(self.boundary)],
        }
        with open(path, 'w') as fh:
            yaml.safe_dump(content, fh, default_flow_style=None)

    @classmethod
    def load(cls, path: Path):
        """Loads a mesh written by dump()."""
        try:
            with open(path) as fh:
                content = yaml.safe_load(fh)
        except (OSError, yaml.YAMLError) as err:
            raise HamconScenarioError(f"unable to load mesh {path}: {err}")
        if not isinstance(content, dict) or not all(
            key in content for key in ('vertices', 'faces', 'boundary')
        ):
            raise HamconScenarioError(
                f"mesh file {path} must define vertices, faces and boundary"
            )
        mesh = cls(content['vertices'], content['faces'], content['boundary'])
        if 'dimension' in content and content['dimension'] != mesh.dimension:
            raise HamconScenarioError(
                f"mesh file {path} dimension mismatch"
            )
        return mesh


def _embed(points, n):
    points = np.asarray(points, dtype=float)
    if n < points.shape[1]:
        raise HamconScenarioError(
            f"mesh needs at least {points.shape[1]} dimensions, not {n}"
        )
    embedded = np.zeros((len(points), n))
    embedded[:, : points.shape[1]] = points
    return embedded


def _ring_strip(inner, inner_angles, outer, outer_angles):
    """Triangulates the strip between two closed rings of vertices with
    increasing angles, marching around both rings."""
    m = len(inner)
    p = len(outer)
    a = np.append(inner_angles, inner_angles[0] + 2 * math.pi)
    b = np.append(outer_angles, outer_angles[0] + 2 * math.pi)
    faces = []
    i = j = 0
    while i < m or j < p:
        if j == p or (i < m and a[i + 1] < b[j + 1]):
            faces.append([inner[i % m], outer[j % p], inner[(i + 1) % m]])
            i += 1
        else:
            faces.append([inner[i % m], outer[j % p], outer[(j + 1) % p]])
            j += 1
    return faces


def _stacked_rings(ring_points, ring_angles):
    """Builds vertices and faces of a band of stacked closed rings."""
    vertices = []
    ids = []
    for points in ring_points:
        ids.append(list(range(len(vertices), len(vertices) + len(points))))
        vertices.extend(points)
    faces = []
    for r in range(len(ring_points) - 1):
        faces.extend(
            _ring_strip(ids[r], ring_angles[r], ids[r + 1], ring_angles[r + 1])
        )
    return np.array(vertices), faces, ids


def planar_disk_mesh(radius=1.0, level=2, n=3):
    """Flat disk in the plane of the first two axes: a center vertex
    surrounded by rings of 6k vertices, the outer ring being the fixed
    boundary polygon."""
    rings = 2**level
    points = [np.zeros((1, 3))]
    angles = [np.zeros(1)]
    for k in range(1, rings + 1):
        theta = 2 * math.pi * np.arange(6 * k) / (6 * k)
        r = radius * k / rings
        points.append(
            np.column_stack(
                [r * np.cos(theta), r * np.sin(theta), np.zeros_like(theta)]
            )
        )
        angles.append(theta)
    vertices = [points[0][0]]
    ids = [[0]]
    for ring in points[1:]:
        ids.append(list(range(len(vertices), len(vertices) + len(ring))))
        vertices.extend(ring)
    faces = [
        [0, ids[1][j], ids[1][(j + 1) % 6]] for j in range(6)
    ]
    for k in range(1, rings):
        faces.extend(_ring_strip(ids[k], angles[k], ids[k + 1], angles[k + 1]))
    boundary = np.zeros(len(vertices), dtype=bool)
    boundary[ids[-1]] = True

    def projector(point):
        projected = point.copy()
        projected[:2] *= radius / np.linalg.norm(point[:2])
        return projected

    return SurfaceMesh(_embed(vertices, n), faces, boundary, projector)


def catenoid_area(a=0.5):
    """Area of the catenoid r = cosh(z) for z in [−a, a],
    2π ∫ cosh²z dz."""
    return 2 * math.pi * (a + math.sinh(2 * a) / 2)


def catenoid_mesh(level=3, a=0.5, n=3, exact=False):
    """Band of staggered rings spanning the two coaxial circles of radius
    cosh(a) at heights ±a, ring j being rotated by j half angular steps.
    Level L has 4·2^L vertices per ring and 2^L + 1 rings. Interior rings
    start on the cylinder of the boundary radius, or on the catenoid itself
    when exact is set."""
    n_theta = 4 * 2**level
    n_rings = 2**level + 1
    step = 2 * math.pi / n_theta
    boundary_radius = math.cosh(a)
    ring_points = []
    ring_angles = []
    for j, z in enumerate(np.linspace(-a, a, n_rings)):
        theta = step * np.arange(n_theta) + j * step / 2
        r = math.cosh(z) if exact else boundary_radius
        if j in (0, n_rings - 1):
            r = boundary_radius
        ring_points.append(
            np.column_stack(
                [r * np.cos(theta), r * np.sin(theta), np.full(n_theta, z)]
            )
        )
        ring_angles.append(theta)
    vertices, faces, ids = _stacked_rings(ring_points, ring_angles)
    boundary = np.zeros(len(vertices), dtype=bool)
    boundary[ids[0]] = True
    boundary[ids[-1]] = True

    def projector(point):
        projected = point.copy()
        projected[:2] *= boundary_radius / np.linalg.norm(point[:2])
        return projected

    return SurfaceMesh(_embed(vertices, n), faces, boundary, projector)


def sphere_cap_mesh(radius=1.0, inner_angle=math.pi / 8,
                    outer_angle=math.pi / 3, level=3, n=3):
    """Spherical cap of polar angles in [inner_angle, outer_angle] around
    the pole of the third axis, meshed by staggered rings, both boundary
    circles being fixed. The sphere is not minimal, its mean curvature is
    1/radius."""
    n_theta = 4 * 2**level
    n_rings = 2**level + 1
    step = 2 * math.pi / n_theta
    ring_points = []
    ring_angles = []
    for j, alpha in enumerate(np.linspace(inner_angle, outer_angle, n_rings)):
        theta = step * np.arange(n_theta) + j * step / 2
        ring_points.append(
            radius
            * np.column_stack(
                [
                    math.sin(alpha) * np.cos(theta),
                    math.sin(alpha) * np.sin(theta),
                    np.full(n_theta, math.cos(alpha)),
                ]
            )
        )
        ring_angles.append(theta)
    vertices, faces, ids = _stacked_rings(ring_points, ring_angles)
    boundary = np.zeros(len(vertices), dtype=bool)
    boundary[ids[0]] = True
    boundary[ids[-1]] = True

    def projector(point):
        return point * radius / np.linalg.norm(point[:3])

    return SurfaceMesh(_embed(vertices, n), faces, boundary, projector)


def _grid_faces(nu, nv):
    faces = []
    for i in range(nu - 1):
        for j in range(nv - 1):
            v00 = i * nv + j
            v10 = (i + 1) * nv + j
            v01 = i * nv + j + 1
            v11 = (i + 1) * nv + j + 1
            faces.append([v00, v10, v11])
            faces.append([v00, v11, v01])
    return faces


def _grid_boundary(nu, nv):
    boundary = np.zeros(nu * nv, dtype=bool)
    for i in range(nu):
        for j in range(nv):
            if i in (0, nu - 1) or j in (0, nv - 1):
                boundary[i * nv + j] = True
    return boundary


def helicoid_patch_mesh(level=3, pitch=1.0, twist=math.pi / 2, n=3):
    """Patch of the helicoid (u cos(τv), u sin(τv), c v) for u in [−1, 1]
    and v in [0, 1], τ being the twist and c the pitch. The boundary is the
    skew quadrilateral of two rulings and two helix arcs, the interior
    starts on the bilinear patch of the four corners."""
    nodes = 2**level + 1
    u = np.linspace(-1.0, 1.0, nodes)
    v = np.linspace(0.0, 1.0, nodes)
    U, V = np.meshgrid(u, v, indexing='ij')

    def helicoid(uu, vv):
        return np.stack(
            [uu * np.cos(twist * vv), uu * np.sin(twist * vv), pitch * vv],
            axis=-1,
        )

    exact = helicoid(U, V)
    corners = helicoid(
        np.array([[-1.0, -1.0], [1.0, 1.0]]),
        np.array([[0.0, 1.0], [0.0, 1.0]]),
    )
    s = (U + 1.0) / 2.0
    bilinear = (
        ((1 - s) * (1 - V))[..., np.newaxis] * corners[0, 0]
        + ((1 - s) * V)[..., np.newaxis] * corners[0, 1]
        + (s * (1 - V))[..., np.newaxis] * corners[1, 0]
        + (s * V)[..., np.newaxis] * corners[1, 1]
    )
    boundary = _grid_boundary(nodes, nodes)
    points = np.where(
        boundary.reshape(nodes, nodes)[..., np.newaxis], exact, bilinear
    ).reshape(-1, 3)
    return SurfaceMesh(_embed(points, n), _grid_faces(nodes, nodes), boundary)


def graph_patch_mesh(func, nodes=17, lower=(0.0, 0.0), upper=(1.0, 1.0),
                     n=3):
    """Triangulated graph x ↦ (x, func(x)) over a rectangle of the plane of
    the first two axes, func returning the n−2 field values of a point."""
    x1 = np.linspace(lower[0], upper[0], nodes)
    x2 = np.linspace(lower[1], upper[1], nodes)
    X1, X2 = np.meshgrid(x1, x2, indexing='ij')
    values = np.asarray(func(X1, X2), dtype=float)
    if values.ndim == 2:
        values = values[np.newaxis]
    points = np.concatenate(
        [X1[np.newaxis], X2[np.newaxis], values], axis=0
    ).reshape(2 + len(values), -1).T
    return SurfaceMesh(
        _embed(points, n), _grid_faces(nodes, nodes),
        _grid_boundary(nodes, nodes),
    )


def mean_curvature_residual(mesh: SurfaceMesh):
    """Discrete mean curvature (I_γ·∂_q)·I_γ at the interior vertices,
    evaluated as the magnitude of the area gradient over twice the vertex
    dual area. Returns the per vertex values, zero on the boundary, and
    their maximum."""
    gradient = np.linalg.norm(mesh.area_gradient(), axis=1)
    dual = mesh.dual_areas()
    residual = np.zeros(len(mesh.vertices))
    interior = mesh.interior
    residual[interior] = gradient[interior] / (2.0 * dual[interior])
    maximum = float(residual.max()) if interior.size else 0.0
    return residual, maximum


class RelaxationDiagnostics(ExportableType):
    EXFIELDS = [
        ExportableField('iterations', int),
        ExportableField('initial_area', float),
        ExportableField('final_area', float),
        ExportableField('action', float),
        ExportableField('max_gradient', float),
        ExportableField('max_curvature', float),
        ExportableField('converged', bool),
    ]

    def __init__(self, tension, initial_area):
        self.tension = tension
        self.iterations = 0
        self.initial_area = initial_area
        self.final_area = initial_area
        self.max_gradient = math.inf
        self.max_curvature = math.inf
        self.converged = False
        self.areas = [initial_area]

    @property
    def action(self):
        return self.tension * self.final_area


def _clipped_area_gradient(mesh: SurfaceMesh, vertices, min_area):
    """Total area and its vertex gradient, with face areas clipped to
    min_area in the gradient so that nearly degenerate trial points stay
    finite."""
    p0 = vertices[mesh.faces[:, 0]]
    a = vertices[mesh.faces[:, 1]] - p0
    b = vertices[mesh.faces[:, 2]] - p0
    aa = np.einsum('ij,ij->i', a, a)[:, np.newaxis]
    bb = np.einsum('ij,ij->i', b, b)[:, np.newaxis]
    ab = np.einsum('ij,ij->i', a, b)[:, np.newaxis]
    areas = triangle_areas(vertices, mesh.faces)
    scale = 1.0 / (4.0 * np.maximum(areas, min_area)[:, np.newaxis])
    grad_a = scale * (bb * a - ab * b)
    grad_b = scale * (aa * b - ab * a)
    gradient = np.zeros_like(vertices)
    np.add.at(gradient, mesh.faces[:, 1], grad_a)
    np.add.at(gradient, mesh.faces[:, 2], grad_b)
    np.add.at(gradient, mesh.faces[:, 0], -(grad_a + grad_b))
    return float(np.sum(areas)), gradient


def relax_minimal_surface(
    mesh: SurfaceMesh,
    tension: float = 1.0,
    tol: Optional[float] = None,
    max_iters: Optional[int] = None,
):
    """Minimizes the Nambu-Goto action Λ·area over the interior vertices of
    mesh with the limited memory BFGS method of scipy. Every accepted
    iterate satisfies the sufficient decrease condition of the line search,
    so the recorded areas never increase. A run that stops early on a
    failed line search is restarted from its last iterate with a fresh
    memory, at most restarts times. Converged when the largest vertex area
    gradient falls below tol. Returns the relaxed mesh and diagnostics."""
    conf = RuntimeConf().relaxation
    tol = conf.tol if tol is None else tol
    max_iters = conf.max_iters if max_iters is None else max_iters
    vertices = mesh.vertices.copy()
    areas = mesh.face_areas(vertices)
    if np.any(areas <= conf.min_area):
        raise HamconDegenerateMeshError(
            f"initial mesh has {int(np.sum(areas <= conf.min_area))} "
            "degenerate faces"
        )
    diagnostics = RelaxationDiagnostics(tension, float(np.sum(areas)))
    interior = ~mesh.boundary
    shape = vertices[interior].shape

    def max_gradient(points):
        if not np.any(interior):
            return 0.0
        _, gradient = _clipped_area_gradient(mesh, points, conf.min_area)
        return float(np.max(np.linalg.norm(gradient[interior], axis=1)))

    def objective(x):
        trial = vertices.copy()
        trial[interior] = x.reshape(shape)
        area, gradient = _clipped_area_gradient(mesh, trial, conf.min_area)
        return area, gradient[interior].ravel()

    def accept(x):
        vertices[interior] = x.reshape(shape)
        diagnostics.areas.append(float(np.sum(mesh.face_areas(vertices))))
        diagnostics.iterations += 1

    diagnostics.max_gradient = max_gradient(vertices)
    # vertex norms below tol/2 once every coordinate is below this bound
    gtol = 0.5 * tol / math.sqrt(shape[1])
    for attempt in range(conf.restarts + 1):
        remaining = max_iters - diagnostics.iterations
        if diagnostics.max_gradient < tol or remaining <= 0:
            break
        result = minimize(
            objective,
            vertices[interior].ravel(),
            jac=True,
            method='L-BFGS-B',
            callback=accept,
            options={
                'maxcor': conf.memory,
                'ftol': 0.0,
                'gtol': gtol,
                'maxiter': remaining,
                'maxfun': 4 * remaining + 20,
            },
        )
        diagnostics.max_gradient = max_gradient(vertices)
        logger.debug(
            "relaxation run %d: %d iterations, area %.12f max gradient "
            "%.3e (%s)",
            attempt,
            result.nit,
            diagnostics.areas[-1],
            diagnostics.max_gradient,
            result.message,
        )
        if result.nit == 0:
            break
    diagnostics.converged = diagnostics.max_gradient < tol
    diagnostics.final_area = diagnostics.areas[-1]
    final_areas = mesh.face_areas(vertices)
    if np.any(final_areas <= conf.min_area):
        raise HamconDegenerateMeshError(
            f"relaxation collapsed {int(np.sum(final_areas <= conf.min_area))}"
            " faces",
            diagnostics=diagnostics.export(),
        )
    relaxed = mesh.with_vertices(vertices)
    _, diagnostics.max_curvature = mean_curvature_residual(relaxed)
    if not diagnostics.converged:
        raise HamconRelaxationError(
            f"relaxation did not converge in {diagnostics.iterations} "
            f"iterations (max gradient {diagnostics.max_gradient:.3e})",
            diagnostics=diagnostics.export(),
        )
    logger.debug(
        "Relaxation converged in %d iterations, area %.12f",
        diagnostics.iterations,
        diagnostics.final_area,
    )
    return relaxed, diagnostics
