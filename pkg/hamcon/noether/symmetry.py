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

from ..errors import HamconNumericalError
from ..exports import ExportableType, ExportableField
from ..dynamics import project_to_constraint
from ..ga import Multivector
from ..log import logr
from ..models import HamiltonianModel
from ..transforms import Diffeo, VectorField, adjoint_inverse

logger = logr(__name__)


def symmetry_defect(
    model: HamiltonianModel, v: VectorField, q: Multivector, P: Multivector
) -> float:
    """Returns v·∂̇_q H − (∂̇_q∧(v̇·P))·∂_P H at (q, P), the infinitesimal
    symmetry criterion of generator v. The overdot term is expanded as
    Σ_i e_i∧(((e_i·∂_q) v)·P) with the Jacobian of v."""
    explicit = (v(q) | model.dH_dq_explicit(q, P)).scalar_part()
    induced = model.algebra.zero()
    for e, dv in zip(model.algebra.basis_vectors(), v.directional(q)):
        induced = induced + (e ^ (dv | P))
    defect = explicit - (induced | model.dH_dP(q, P)).scalar_part()
    if not np.isfinite(defect):
        raise HamconNumericalError(
            f"non-finite symmetry defect of {v.label} for {model.label}"
        )
    return defect


class SymmetryReport(ExportableType):
    EXFIELDS = [
        ExportableField('model'),
        ExportableField('generator'),
        ExportableField('samples', int),
        ExportableField('max_defect', float),
    ]

    def __init__(self, model, generator, samples, max_defect):
        self.model = model
        self.generator = generator
        self.samples = samples
        self.max_defect = max_defect


def random_samples(model: HamiltonianModel, count: int, rng=None):
    """Returns count random (q, P) pairs projected on the constraint."""
    rng = np.random.default_rng(0) if rng is None else rng
    samples = []
    for _ in range(count):
        q = model.random_point(rng)
        P = project_to_constraint(model, q, model.random_momentum(rng))
        samples.append((q, P))
    return samples


def finite_symmetry_check(model: HamiltonianModel, f: Diffeo,
                          samples) -> SymmetryReport:
    """Returns the largest |H(f(q), f̄⁻¹(P)) − H(q, P)| over the (q, P)
    samples."""
    max_defect = 0.0
    for q, P in samples:
        transformed = adjoint_inverse(f, P, q)
        defect = abs(model.eval(f(q), transformed) - model.eval(q, P))
        max_defect = max(max_defect, defect)
    logger.debug(
        "Finite symmetry check of %s for %s: max defect %.3e",
        f.label,
        model.label,
        max_defect,
    )
    return SymmetryReport(model.label, f.label, len(samples), max_defect)
