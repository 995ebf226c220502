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

import numpy as np

from ..exports import ExportableType, ExportableField
from ..log import logr
from ..models import ScalarFieldModel, eval_action
from ..utils import observed_order
from .surface import graph_patch_mesh

logger = logr(__name__)

DEFAULT_AMPLITUDES = (0.02, 0.04, 0.08, 0.16)


def bump(x1, x2):
    return np.sin(math.pi * x1) * np.sin(math.pi * x2)


class LimitReport(ExportableType):
    EXFIELDS = [
        ExportableField('tension', float),
        ExportableField('amplitudes', list),
        ExportableField('string_actions', list),
        ExportableField('field_actions', list),
        ExportableField('differences', list),
        ExportableField('relative_differences', list),
        ExportableField('exponent', float),
    ]

    def __init__(self, tension):
        self.tension = tension
        self.amplitudes = []
        self.string_actions = []
        self.field_actions = []
        self.differences = []
        self.relative_differences = []
        self.exponent = math.nan


def _face_momenta(mesh, model):
    """Returns the recovered momentum and the coordinate area |dX| of every
    face of a triangulated graph over the plane of the first two axes. The
    field gradient of the piecewise linear graph is constant per face."""
    momenta = []
    volumes = []
    reverse_I = model.I_x.reverse()
    for face in mesh.faces:
        p0, p1, p2 = mesh.vertices[face]
        a = p1 - p0
        b = p2 - p0
        coords = np.array([[a[0], b[0]], [a[1], b[1]]])
        gradients = np.linalg.solve(coords.T, np.array([a[2:], b[2:]]))
        P = model.algebra.zero()
        for index, e_a in enumerate(model.field_basis):
            g = model.algebra.vector(
                np.concatenate([gradients[:, index], np.zeros(model.N)])
            )
            P = P + ((reverse_I * g) ^ e_a)
        kinetic = 0.5 * float(np.sum(gradients**2))
        P = P + ((-kinetic / model.I_x_square) * model.I_x)
        momenta.append(P)
        volumes.append(0.5 * abs(np.linalg.det(coords)))
    return momenta, volumes


def string_to_scalar_limit(amplitudes=DEFAULT_AMPLITUDES, tension=1.0,
                           shape=bump, nodes=17):
    """Compares, for graphs y = ε·shape(x) over the unit square, the string
    action Λ·area of the triangulated graph with Λ·(A_SF + vol(Ω)), A_SF
    being the augmented action of the massless scalar field evaluated on the
    same triangles. Both are exact for the piecewise linear graph, so the
    difference only holds the quartic and higher terms of the area density
    expansion. Reports the differences and the exponent of their log-log
    fit over the nonzero amplitudes."""
    model = ScalarFieldModel(D=2, N=1)
    report = LimitReport(tension)
    for eps in amplitudes:
        mesh = graph_patch_mesh(
            lambda x1, x2: eps * shape(x1, x2), nodes=nodes
        )
        momenta, volumes = _face_momenta(mesh, model)
        field_action = eval_action(mesh, momenta, volumes, model)
        string_action = tension * mesh.area()
        reduced = tension * (field_action + float(np.sum(volumes)))
        difference = abs(string_action - reduced)
        report.amplitudes.append(float(eps))
        report.string_actions.append(string_action)
        report.field_actions.append(field_action)
        report.differences.append(difference)
        report.relative_differences.append(difference / string_action)
        logger.debug(
            "ε=%g: string action %.15f, reduced field action %.15f",
            eps, string_action, reduced,
        )
    fit = [
        (eps, diff)
        for eps, diff in zip(report.amplitudes, report.differences)
        if eps > 0 and diff > 0
    ]
    if len(fit) >= 2:
        report.exponent = observed_order(*zip(*fit))
    return report
