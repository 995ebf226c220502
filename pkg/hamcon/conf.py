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

import configparser
import os
from pathlib import Path

from .errors import HamconSystemConfigurationError
from .utils import Singleton
from .log import logr

logger = logr(__name__)

SITE_CONF_PATH = Path('/etc/hamcon/hamcon.ini')
ENV_CONF = 'HAMCON_CONF'

# Vendor defaults, overriden by the optional site configuration file.
VENDOR_DEFAULTS = {
    'numerics': {
        'fd_step': '1e-5',
        'derivative_tol': '1e-6',
    },
    'transforms': {
        'newton_tol': '1e-10',
        'newton_max_iters': '50',
        'lie_step': '0.01',
        'singular_det': '1e-12',
    },
    'dynamics': {
        'projection_tol': '1e-12',
        'projection_max_iters': '30',
        'drift_tol': '1e-6',
        'worldline_step': '0.05',
        'initial_constraint_tol': '1e-9',
    },
    'relaxation': {
        'memory': '20',
        'restarts': '5',
        'min_area': '1e-14',
        'tol': '1e-6',
        'max_iters': '50000',
    },
    'field': {
        'tol': '1e-9',
        'max_iters': '20000',
        'divergence_window': '100',
    },
    'output': {
        'dir': 'hamcon-out',
    },
}


class RuntimeSubConfNumerics(object):
    """Runtime sub-configuration class to hold finite differences
    settings."""

    def __init__(self):

        self.fd_step = None
        self.derivative_tol = None

    def load(self, config):
        section = 'numerics'
        self.fd_step = config.getfloat(section, 'fd_step')
        self.derivative_tol = config.getfloat(section, 'derivative_tol')
        if self.fd_step <= 0:
            raise HamconSystemConfigurationError(
                f"[{section}] fd_step must be positive, not {self.fd_step}"
            )

    def dump(self):
        logger.debug("[numerics]")
        logger.debug("  fd_step: %g", self.fd_step)
        logger.debug("  derivative_tol: %g", self.derivative_tol)


class RuntimeSubConfTransforms(object):
    """Runtime sub-configuration class to hold transformations settings."""

    def __init__(self):

        self.newton_tol = None
        self.newton_max_iters = None
        self.lie_step = None
        self.singular_det = None

    def load(self, config):
        section = 'transforms'
        self.newton_tol = config.getfloat(section, 'newton_tol')
        self.newton_max_iters = config.getint(section, 'newton_max_iters')
        self.lie_step = config.getfloat(section, 'lie_step')
        self.singular_det = config.getfloat(section, 'singular_det')

    def dump(self):
        logger.debug("[transforms]")
        logger.debug("  newton_tol: %g", self.newton_tol)
        logger.debug("  newton_max_iters: %d", self.newton_max_iters)
        logger.debug("  lie_step: %g", self.lie_step)
        logger.debug("  singular_det: %g", self.singular_det)


class RuntimeSubConfDynamics(object):
    """Runtime sub-configuration class to hold worldline integration and
    constraint projection settings."""

    def __init__(self):

        self.projection_tol = None
        self.projection_max_iters = None
        self.drift_tol = None
        self.worldline_step = None
        self.initial_constraint_tol = None

    def load(self, config):
        section = 'dynamics'
        self.projection_tol = config.getfloat(section, 'projection_tol')
        self.projection_max_iters = config.getint(
            section, 'projection_max_iters'
        )
        self.drift_tol = config.getfloat(section, 'drift_tol')
        self.worldline_step = config.getfloat(section, 'worldline_step')
        self.initial_constraint_tol = config.getfloat(
            section, 'initial_constraint_tol'
        )

    def dump(self):
        logger.debug("[dynamics]")
        logger.debug("  projection_tol: %g", self.projection_tol)
        logger.debug("  projection_max_iters: %d", self.projection_max_iters)
        logger.debug("  drift_tol: %g", self.drift_tol)
        logger.debug("  worldline_step: %g", self.worldline_step)
        logger.debug(
            "  initial_constraint_tol: %g", self.initial_constraint_tol
        )


class RuntimeSubConfRelaxation(object):
    """Runtime sub-configuration class to hold minimal surface relaxation
    settings."""

    def __init__(self):

        self.memory = None
        self.restarts = None
        self.min_area = None
        self.tol = None
        self.max_iters = None

    def load(self, config):
        section = 'relaxation'
        self.memory = config.getint(section, 'memory')
        self.restarts = config.getint(section, 'restarts')
        self.min_area = config.getfloat(section, 'min_area')
        self.tol = config.getfloat(section, 'tol')
        self.max_iters = config.getint(section, 'max_iters')
        if self.memory < 1:
            raise HamconSystemConfigurationError(
                f"[{section}] memory must be ≥ 1, not {self.memory}"
            )

    def dump(self):
        logger.debug("[relaxation]")
        logger.debug("  memory: %d", self.memory)
        logger.debug("  restarts: %d", self.restarts)
        logger.debug("  min_area: %g", self.min_area)
        logger.debug("  tol: %g", self.tol)
        logger.debug("  max_iters: %d", self.max_iters)


class RuntimeSubConfField(object):
    """Runtime sub-configuration class to hold scalar field solver
    settings."""

    def __init__(self):

        self.tol = None
        self.max_iters = None
        self.divergence_window = None

    def load(self, config):
        section = 'field'
        self.tol = config.getfloat(section, 'tol')
        self.max_iters = config.getint(section, 'max_iters')
        self.divergence_window = config.getint(section, 'divergence_window')

    def dump(self):
        logger.debug("[field]")
        logger.debug("  tol: %g", self.tol)
        logger.debug("  max_iters: %d", self.max_iters)
        logger.debug("  divergence_window: %d", self.divergence_window)


class RuntimeSubConfOutput(object):
    """Runtime sub-configuration class to hold output settings."""

    def __init__(self):

        self.dir = None

    def load(self, config):
        section = 'output'
        self.dir = Path(config.get(section, 'dir'))

    def dump(self):
        logger.debug("[output]")
        logger.debug("  dir: %s", self.dir)


class RuntimeConf(metaclass=Singleton):
    """Runtime configuration shared by the library and hamconctl. It is
    loaded with vendor defaults on first use, the site configuration file
    is read on explicit load()."""

    def __init__(self):
        self.numerics = RuntimeSubConfNumerics()
        self.transforms = RuntimeSubConfTransforms()
        self.dynamics = RuntimeSubConfDynamics()
        self.relaxation = RuntimeSubConfRelaxation()
        self.field = RuntimeSubConfField()
        self.output = RuntimeSubConfOutput()
        self.config = None
        self._apply(self._vendor())

    @staticmethod
    def _vendor():
        config = configparser.ConfigParser()
        config.read_dict(VENDOR_DEFAULTS)
        return config

    def _apply(self, config):
        self.config = config
        try:
            self.numerics.load(config)
            self.transforms.load(config)
            self.dynamics.load(config)
            self.relaxation.load(config)
            self.field.load(config)
            self.output.load(config)
        except (ValueError, configparser.Error) as err:
            raise HamconSystemConfigurationError(
                f"invalid runtime configuration: {err}"
            )

    def load(self, path=None):
        """Reload vendor defaults and override them with the site
        configuration file. The path is selected in this order: argument,
        HAMCON_CONF environment variable, /etc/hamcon/hamcon.ini. A missing
        default site file is not an error."""
        config = self._vendor()
        explicit = path is not None or ENV_CONF in os.environ
        if path is None:
            path = Path(os.environ.get(ENV_CONF, SITE_CONF_PATH))
        path = Path(path)
        if path.exists():
            logger.debug("Loading site configuration file %s", path)
            with open(path) as fh:
                config.read_file(fh)
        elif explicit:
            raise HamconSystemConfigurationError(
                f"runtime configuration file {path} does not exist"
            )
        self._apply(config)

    def reset(self):
        """Restore vendor defaults."""
        self._apply(self._vendor())

    def dump(self):
        """Dump all runtime configuration parameters when in debug mode."""
        if not logger.has_debug():
            return
        self.numerics.dump()
        self.transforms.dump()
        self.dynamics.dump()
        self.relaxation.dump()
        self.field.dump()
        self.output.dump()