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


class HamconRuntimeError(Exception):
    pass


class HamconAlgebraError(HamconRuntimeError):
    pass


class HamconNumericalError(HamconRuntimeError):
    pass


class HamconSingularMapError(HamconNumericalError):
    pass


class HamconDomainError(HamconRuntimeError):
    pass


class HamconSolverError(Exception):
    """Base class of solver failures. The diagnostics gathered before the
    failure are attached so partial reports can still be emitted."""

    def __init__(self, msg, diagnostics=None):
        super().__init__(msg)
        self.diagnostics = diagnostics or {}


class HamconIntegratorError(HamconSolverError):
    pass


class HamconProjectionError(HamconSolverError):
    pass


class HamconRelaxationError(HamconSolverError):
    pass


class HamconDegenerateMeshError(HamconSolverError):
    pass


class HamconFieldSolverError(HamconSolverError):
    pass


class HamconScenarioError(Exception):
    pass


class HamconSystemConfigurationError(Exception):
    pass
