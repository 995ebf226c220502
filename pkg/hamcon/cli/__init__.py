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

import sys

from ..conf import RuntimeConf
from ..errors import HamconSystemConfigurationError
from ..log import logr

logger = logr(__name__)

# process exit codes
EXIT_PASS = 0
EXIT_CHECKS_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_SOLVER_ERROR = 3


class HamconCliRun(object):
    @classmethod
    def run(cls):
        """Instanciate and execute the CliRun."""
        cls()

    def load_conf(self, path=None):
        self.conf = RuntimeConf()
        try:
            self.conf.load(path)  # load runtime configuration file
        except HamconSystemConfigurationError as err:
            logger.error("Error while loading configuration: %s", err)
            sys.exit(EXIT_CONFIG_ERROR)
        self.conf.dump()
