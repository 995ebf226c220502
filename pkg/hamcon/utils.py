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


class Singleton(type):
    __instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in Singleton.__instances:
            Singleton.__instances[cls] = super(Singleton, cls).__call__(
                *args, **kwargs
            )
        return Singleton.__instances[cls]


def fd_step(scale, base=1e-5):
    """Central difference step scaled with the magnitude of the argument,
    h = base · max(1, |scale|)."""
    return base * max(1.0, abs(float(scale)))


def observed_order(sizes, errors):
    """Returns the slope of the least-squares line through
    (log sizes, log errors). With sizes being mesh spacings, this is the
    observed convergence order."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(errors, dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def halving_orders(errors):
    """Returns log2(e_k / e_k+1) for errors measured on successively
    halved spacings, the order observed between each pair of levels."""
    errors = np.asarray(errors, dtype=float)
    return np.log2(errors[:-1] / errors[1:]).tolist()
