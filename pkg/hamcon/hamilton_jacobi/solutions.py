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
from typing import Callable

import numpy as np

from ..errors import (
    HamconAlgebraError,
    HamconDomainError,
    HamconNumericalError,
    HamconScenarioError,
)
from ..exports import ExportableType, ExportableField
from ..ga import Algebra, Multivector

# radius of the ball removed around the singular point of radial solutions
SINGULAR_RADIUS = 1e-3


class HJSolution(ExportableType):
    """Local solution S(q; α) of a Hamilton-Jacobi equation, a grade D−1
    multivector valued function of the configuration space point q and of
    an optional real parameter vector α. The domain is a box, possibly
    unbounded, minus a set of excluded balls."""

    EXFIELDS = [
        ExportableField('label'),
        ExportableField('D', int),
        ExportableField('params', dict),
        ExportableField('alpha', list),
    ]

    def __init__(
        self,
        S: Callable,
        algebra: Algebra,
        D: int,
        label: str,
        alpha=None,
        lower=None,
        upper=None,
        excluded=None,
        params=None,
    ):
        self.S = S
        self.algebra = algebra
        self.D = D
        self.label = label
        self._alpha = (
            np.zeros(0) if alpha is None else np.asarray(alpha, dtype=float)
        )
        self.lower = np.full(algebra.n, -np.inf) if lower is None else (
            np.asarray(lower, dtype=float)
        )
        self.upper = np.full(algebra.n, np.inf) if upper is None else (
            np.asarray(upper, dtype=float)
        )
        self.excluded = [
            (np.asarray(center, dtype=float), float(radius))
            for center, radius in (excluded or [])
        ]
        self.params = params or {}

    @property
    def alpha(self):
        return self._alpha.tolist()

    def parameters(self, alpha=None) -> np.ndarray:
        if alpha is None:
            return self._alpha
        alpha = np.asarray(alpha, dtype=float)
        if alpha.shape != self._alpha.shape:
            raise HamconAlgebraError(
                f"solution {self.label} expects {self._alpha.size} "
                f"parameters, got {alpha.size}"
            )
        return alpha

    def contains(self, q: Multivector, margin: float = 0.0) -> bool:
        point = q.vector_part()
        if np.any(point - margin < self.lower) or np.any(
            point + margin > self.upper
        ):
            return False
        return all(
            np.linalg.norm(point - center) > radius + margin
            for center, radius in self.excluded
        )

    def check_stencil(self, q: Multivector, h: float):
        """Raises HamconDomainError unless the central difference stencil of
        step h around q lies in the domain."""
        if not self.contains(q, margin=h):
            raise HamconDomainError(
                f"difference stencil of step {h:.3e} around "
                f"{q.vector_part().tolist()} leaves the domain of "
                f"{self.label}"
            )

    def __call__(self, q: Multivector, alpha=None) -> Multivector:
        value = self.S(q, self.parameters(alpha))
        if isinstance(value, numbers.Real):
            value = self.algebra.scalar(float(value))
        if not np.all(np.isfinite(value.coeffs)):
            raise HamconNumericalError(f"non-finite value of {self.label}")
        if not value.is_zero() and value.grades() != [self.D - 1]:
            raise HamconAlgebraError(
                f"{self.label} must be of grade {self.D - 1}, got grades "
                f"{value.grades()}"
            )
        return value

    def at(self, alpha) -> Callable[[Multivector], Multivector]:
        """Returns q ↦ S(q; α) for fixed parameters."""
        alpha = self.parameters(alpha)
        return lambda q: self(q, alpha)


def radial_string(tension: float, q0, n: int = 3) -> HJSolution:
    """S(q; q₀) = Λ|q − q₀|, the solution of |∂_q∧S| = Λ whose
    characteristics are the straight lines through q₀. Parameters α are the
    components of q₀."""
    q0 = np.asarray(q0, dtype=float)
    if q0.shape != (n,):
        raise HamconAlgebraError(f"center needs {n} components")
    return HJSolution(
        lambda q, alpha: tension * float(
            np.linalg.norm(q.vector_part() - alpha)
        ),
        Algebra(n),
        1,
        'radial',
        alpha=q0,
        excluded=[(q0, SINGULAR_RADIUS)],
        params={'tension': tension, 'q0': q0.tolist()},
    )


def plane_wave_string(tension: float, u, n: int = 3) -> HJSolution:
    """S(q; u) = Λ (û·q), the solution with parallel characteristics along
    the direction û of u. Parameters α are the components of u."""
    u = np.asarray(u, dtype=float)
    if u.shape != (n,) or not np.linalg.norm(u) > 0:
        raise HamconAlgebraError(f"direction needs {n} components, not all 0")
    return HJSolution(
        lambda q, alpha: tension * float(
            q.vector_part() @ alpha / np.linalg.norm(alpha)
        ),
        Algebra(n),
        1,
        'plane_wave',
        alpha=u,
        params={'tension': tension, 'u': u.tolist()},
    )


def weyl_plane_wave(k, D: int = 2, N: int = 1) -> HJSolution:
    """Free field solution s(x, y) = Σ_a φ_a k_a − ½ Σ_a |k_a|² x₁ e₁ of the
    Weyl Hamilton-Jacobi equation with V = 0, k_a being spacetime wave
    vectors given as an array of shape (N, D). Parameters α are the
    flattened wave vectors."""
    k = np.atleast_2d(np.asarray(k, dtype=float))
    if k.shape != (N, D):
        raise HamconAlgebraError(f"wave vectors must have shape {(N, D)}")
    algebra = Algebra(D + N)

    def S(q, alpha):
        waves = alpha.reshape(N, D)
        point = q.vector_part()
        values = np.zeros(D + N)
        values[:D] = point[D:] @ waves
        values[0] -= 0.5 * float(np.sum(waves**2)) * point[0]
        return algebra.vector(values)

    return HJSolution(
        S,
        algebra,
        D,
        'weyl_plane_wave',
        alpha=k.ravel(),
        params={'k': k.tolist()},
    )


class SolutionFactory(object):

    _solutions = {
        'radial': radial_string,
        'plane_wave': plane_wave_string,
        'weyl_plane_wave': weyl_plane_wave,
    }

    _descriptions = {
        'radial': "string S = Λ|q − q₀|, radial characteristics",
        'plane_wave': "string S = Λ(û·q), parallel characteristics",
        'weyl_plane_wave': "free scalar field s = Σφ_a k_a − ½Σ|k_a|² x₁e₁",
    }

    @staticmethod
    def names():
        return sorted(SolutionFactory._solutions)

    @staticmethod
    def description(name):
        return SolutionFactory._descriptions[name]

    @staticmethod
    def generate(spec: dict, model=None) -> HJSolution:
        """Generate a named HJSolution from a configuration mapping, taking
        the tension and dimensions from the model when given."""
        if not isinstance(spec, dict):
            raise HamconScenarioError(f"invalid solution definition {spec}")
        spec = dict(spec)
        name = spec.pop('name', None)
        if name not in SolutionFactory._solutions:
            raise HamconScenarioError(
                f"unknown solution {name}, expected one of "
                f"{', '.join(SolutionFactory.names())}"
            )
        if model is not None:
            if name == 'weyl_plane_wave':
                spec.setdefault('D', model.D)
                spec.setdefault('N', model.N)
            else:
                spec.setdefault('tension', getattr(model, 'tension', 1.0))
                spec.setdefault('n', model.algebra.n)
        try:
            return SolutionFactory._solutions[name](**spec)
        except (TypeError, HamconAlgebraError) as err:
            raise HamconScenarioError(f"invalid {name} solution: {err}")


def probe_cloud(sol: HJSolution, lower, upper, count: int, rng,
                margin: float = 0.0):
    """Returns count points drawn uniformly in the box [lower, upper] and
    lying in the domain of sol, at least margin away from its border."""
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    points = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 100 * count:
            raise HamconDomainError(
                f"probe box barely intersects the domain of {sol.label}"
            )
        q = sol.algebra.vector(rng.uniform(lower, upper))
        if sol.contains(q, margin):
            points.append(q)
    return points
