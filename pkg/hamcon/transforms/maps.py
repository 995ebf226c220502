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

from itertools import combinations
from typing import Callable, Optional

import numpy as np

from ..conf import RuntimeConf
from ..errors import HamconNumericalError, HamconSingularMapError
from ..ga import Multivector, vector_derivative
from ..log import logr

logger = logr(__name__)


class VectorField:
    """Vector field v on the configuration space, with an optional analytic
    Jacobian returning matrix J[j, i] = e_j·((e_i·∂_q) v)."""

    def __init__(
        self,
        func: Callable[[Multivector], Multivector],
        label: str = 'custom',
        jacobian: Optional[Callable[[Multivector], np.ndarray]] = None,
    ):
        self.func = func
        self.label = label
        self._jacobian = jacobian

    def __repr__(self):
        return f"VectorField({self.label})"

    def __call__(self, q: Multivector) -> Multivector:
        return self.func(q)

    def jacobian(self, q: Multivector) -> np.ndarray:
        if self._jacobian is not None:
            return np.asarray(self._jacobian(q), dtype=float)
        return vector_derivative(self.func, q).jacobian()

    def directional(self, q: Multivector):
        """Returns the list of vectors (e_i·∂_q) v at q."""
        J = self.jacobian(q)
        return [q.algebra.vector(J[:, i]) for i in range(q.algebra.n)]

    def __add__(self, other):
        return VectorField(
            lambda q: self(q) + other(q),
            label=f"{self.label}+{other.label}",
            jacobian=lambda q: self.jacobian(q) + other.jacobian(q),
        )

    def scaled(self, factor: float):
        return VectorField(
            lambda q: factor * self(q),
            label=f"{factor:g}*{self.label}",
            jacobian=lambda q: factor * self.jacobian(q),
        )


class Diffeo:
    """Diffeomorphism f of the configuration space, with optional analytic
    inverse and Jacobian."""

    def __init__(
        self,
        forward: Callable[[Multivector], Multivector],
        inverse: Optional[Callable[[Multivector], Multivector]] = None,
        label: str = 'custom',
        jacobian: Optional[Callable[[Multivector], np.ndarray]] = None,
    ):
        self.forward = forward
        self.inverse = inverse
        self.label = label
        self._jacobian = jacobian

    def __repr__(self):
        return f"Diffeo({self.label})"

    def __call__(self, q: Multivector) -> Multivector:
        return self.forward(q)

    def jacobian(self, q: Multivector) -> np.ndarray:
        if self._jacobian is not None:
            J = np.asarray(self._jacobian(q), dtype=float)
        else:
            J = vector_derivative(self.forward, q).jacobian()
        if not np.all(np.isfinite(J)):
            raise HamconNumericalError(
                f"non-finite differential of {self.label}"
            )
        return J

    def invert(self, p: Multivector, guess: Optional[Multivector] = None,
               tol: Optional[float] = None, max_iters: Optional[int] = None):
        """Returns q such that f(q) = p, with the analytic inverse when
        available, by Newton iterations otherwise."""
        if self.inverse is not None:
            return self.inverse(p)
        conf = RuntimeConf().transforms
        tol = conf.newton_tol if tol is None else tol
        max_iters = conf.newton_max_iters if max_iters is None else max_iters
        q = p if guess is None else guess
        for iteration in range(max_iters):
            residual = (self.forward(q) - p).vector_part()
            if np.linalg.norm(residual) <= tol:
                logger.debug(
                    "Newton inverse of %s converged in %d iterations",
                    self.label,
                    iteration,
                )
                return q
            J = self.jacobian(q)
            _check_invertible(J, self.label)
            q = q - q.algebra.vector(np.linalg.solve(J, residual))
        residual = (self.forward(q) - p).vector_part()
        if np.linalg.norm(residual) <= tol:
            return q
        raise HamconSingularMapError(
            f"Newton inverse of {self.label} did not converge in "
            f"{max_iters} iterations (residual "
            f"{np.linalg.norm(residual):.3e})"
        )


def _check_invertible(J, label):
    det = np.linalg.det(J)
    if abs(det) < RuntimeConf().transforms.singular_det:
        raise HamconSingularMapError(
            f"differential of {label} is singular (det={det:.3e})"
        )


def _blade_generators(index):
    return [bit for bit in range(index.bit_length()) if index >> bit & 1]


def outermorphism_matrix(J: np.ndarray) -> np.ndarray:
    """Matrix of the outermorphism of linear map J on the whole blade basis.
    The block of grade r holds the r×r minors of J, entry [I, K] being the
    determinant of the rows of blade I and the columns of blade K, both
    taken in ascending generator order."""
    n = J.shape[0]
    count = 1 << n
    M = np.zeros((count, count))
    M[0, 0] = 1.0
    for r in range(1, n + 1):
        blades = [
            sum(1 << i for i in gens) for gens in combinations(range(n), r)
        ]
        for K in blades:
            cols = _blade_generators(K)
            for I in blades:
                rows = _blade_generators(I)
                M[I, K] = np.linalg.det(J[np.ix_(rows, cols)])
    return M


def differential(f: Diffeo, a: Multivector, q: Multivector) -> Multivector:
    """Returns a·∂_q f(q)."""
    J = f.jacobian(q)
    return q.algebra.vector(J @ a.vector_part())


def outermorphism(f: Diffeo, A: Multivector, q: Multivector) -> Multivector:
    M = outermorphism_matrix(f.jacobian(q))
    return Multivector(q.algebra, M @ A.coeffs)


def adjoint(f: Diffeo, B: Multivector, q: Multivector) -> Multivector:
    """Returns f̄(B), the transpose of the outermorphism in the orthonormal
    blade basis."""
    M = outermorphism_matrix(f.jacobian(q))
    return Multivector(q.algebra, M.T @ B.coeffs)


def adjoint_inverse(f: Diffeo, B: Multivector, q: Multivector) -> Multivector:
    """Returns f̄⁻¹(B) at q, the transpose of the outermorphism of the
    inverse differential. The differential of the analytic inverse at f(q)
    is used when available."""
    J = f.jacobian(q)
    _check_invertible(J, f.label)
    if f.inverse is not None:
        inverse = Diffeo(f.inverse, label=f"{f.label}⁻¹")
        Jinv = inverse.jacobian(f(q))
    else:
        Jinv = np.linalg.inv(J)
    M = outermorphism_matrix(Jinv)
    return Multivector(q.algebra, M.T @ B.coeffs)


def infinitesimal_outermorphism(
    v: VectorField, A: Multivector, q: Multivector, eps: float
) -> Multivector:
    """First order outermorphism of q ↦ q + εv: A + ε (A·∂_q)∧v, expanded as
    Σ_i (A·e_i)∧((e_i·∂_q) v)."""
    algebra = q.algebra
    term = algebra.zero()
    for e, dv in zip(algebra.basis_vectors(), v.directional(q)):
        term = term + ((A | e) ^ dv)
    return A + eps * term


def infinitesimal_adjoint(
    v: VectorField, B: Multivector, q: Multivector, eps: float
) -> Multivector:
    """First order adjoint of q ↦ q + εv: B + ε ∂̇_q∧(v̇·B). The inverse
    adjoint is obtained with -eps."""
    algebra = q.algebra
    term = algebra.zero()
    for e, dv in zip(algebra.basis_vectors(), v.directional(q)):
        term = term + (e ^ (dv | B))
    return B + eps * term


def graph_outermorphism(A: Multivector, gradients: np.ndarray) -> Multivector:
    """Pushes spacetime multivector A forward through the linear map
    e_i ↦ e_i + Σ_a (∂_i φ_a) e_{D+a} of a graph x ↦ x + y(x), where
    gradients[i, a] = ∂_i φ_a. The unit spacetime pseudoscalar is mapped to
    the tangent surface element of the graph per unit coordinate volume."""
    M = graph_matrix(gradients, A.algebra.n)
    return Multivector(A.algebra, M @ A.coeffs)


def graph_matrix(gradients: np.ndarray, n: int) -> np.ndarray:
    """Returns the outermorphism matrix of the graph map x ↦ x + y(x)
    in an n dimensional configuration space, gradients[i, a] = ∂_i φ_a."""
    gradients = np.atleast_2d(np.asarray(gradients, dtype=float))
    D, N = gradients.shape
    J = np.eye(n)
    J[D:D + N, :D] = gradients.T
    return outermorphism_matrix(J)


def graph_adjoint(B: Multivector, gradients: np.ndarray) -> Multivector:
    """Pulls multivector B back through the graph map x ↦ x + y(x), the
    adjoint of graph_outermorphism. For a vector B it reduces to
    B + Σ_i e_i ((∂_i y)·B)."""
    M = graph_matrix(gradients, B.algebra.n)
    return Multivector(B.algebra, M.T @ B.coeffs)
