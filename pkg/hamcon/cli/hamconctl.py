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

import argparse
import os
import sys
from pathlib import Path

from . import (
    HamconCliRun,
    EXIT_PASS,
    EXIT_CHECKS_FAILED,
    EXIT_CONFIG_ERROR,
    EXIT_SOLVER_ERROR,
)
from ..version import __version__
from ..log import logr
from ..scenarios import (
    SCENARIO_KINDS,
    ScenarioConfig,
    list_presets,
    run_scenario,
)
from ..errors import HamconScenarioError

logger = logr(__name__)

ENV_OUT = 'HAMCON_OUT'

# preset run by scenario subcommands without --config nor --preset
DEFAULT_PRESETS = {
    'particle': 'straight-line',
    'string': 'catenoid',
    'field': 'harmonic-square',
    'check-symmetry': 'symmetry',
    'hj-verify': 'hj-radial',
}

SUBCOMMANDS_HELP = {
    'particle': 'Integrate relativistic particle worldlines',
    'string': 'Relax a string worldsheet to a minimal surface',
    'field': 'Solve a scalar field and check its Noether currents',
    'check-symmetry': 'Check candidate symmetry generators of a model',
    'hj-verify': 'Verify a Hamilton-Jacobi solution and its motions',
}


class Hamconctl(HamconCliRun):
    def __init__(self, argv=None):
        parser = argparse.ArgumentParser(
            description='Run Hamiltonian constraint field theory scenarios.'
        )
        parser.add_argument(
            '--version',
            dest='version',
            action='version',
            version='%(prog)s ' + __version__,
        )
        parser.add_argument(
            '-v',
            '--verbose',
            action='store_true',
            help="Enable debug mode",
        )
        parser.add_argument(
            '--fulldebug',
            action='store_true',
            help="Enable debug mode in external libs",
        )
        parser.add_argument(
            '--conf',
            help="Path to runtime configuration file",
            type=Path,
        )
        parser.add_argument(
            '-c',
            '--config',
            help="Path to scenario configuration file",
            type=Path,
        )
        parser.add_argument(
            '-p',
            '--preset',
            help="Name of built-in scenario preset",
        )
        parser.add_argument(
            '-o',
            '--out',
            help=(
                "Output directory of artifacts and report (default: "
                f"{os.environ.get(ENV_OUT, 'scenario or runtime setting')})"
            ),
            type=Path,
        )
        parser.add_argument(
            '--seed',
            help="Seed of the random generator, overriding the scenario",
            type=int,
        )
        parser.add_argument(
            '--list-presets',
            action='store_true',
            help="List built-in scenarios and components, then leave",
        )

        subparsers = parser.add_subparsers(
            help='Scenario to run', dest='action'
        )

        # Parser for the run command
        parser_run = subparsers.add_parser(
            'run', help='Run the scenario of the configuration file or preset'
        )
        parser_run.set_defaults(func=self._run_scenario, kind=None)

        # Parsers for the scenario kinds commands
        for kind in SCENARIO_KINDS:
            parser_kind = subparsers.add_parser(
                kind, help=SUBCOMMANDS_HELP[kind]
            )
            parser_kind.set_defaults(func=self._run_scenario, kind=kind)

        args = parser.parse_args(argv)

        logger.setup(
            args.verbose or args.fulldebug,
            args.fulldebug,
            sys.stderr.isatty(),
        )
        self.load_conf(args.conf)

        if args.list_presets:
            print(list_presets(), end='')
            sys.exit(EXIT_PASS)

        # Without action, run the scenario given in arguments.
        if not hasattr(args, 'func'):
            if args.config is None and args.preset is None:
                parser.print_usage()
                logger.error(
                    "The action argument, a configuration file or a preset "
                    "must be given"
                )
                sys.exit(EXIT_CONFIG_ERROR)
            args.func = self._run_scenario
            args.kind = None

        try:
            report = args.func(args)
        except HamconScenarioError as err:
            logger.error("scenario error: %s", err)
            sys.exit(EXIT_CONFIG_ERROR)

        print(report.summary(), end='')
        if report.error is not None:
            sys.exit(EXIT_SOLVER_ERROR)
        if not report.passed:
            sys.exit(EXIT_CHECKS_FAILED)
        sys.exit(EXIT_PASS)

    def _load_scenario(self, args):
        """Returns the scenario configuration selected by arguments, in this
        order: configuration file, preset, default preset of the
        subcommand."""
        if args.config is not None:
            config = ScenarioConfig.load(args.config)
        elif args.preset is not None:
            config = ScenarioConfig.from_dict({'preset': args.preset})
        elif args.kind is not None:
            config = ScenarioConfig.from_dict(
                {'preset': DEFAULT_PRESETS[args.kind]}
            )
        else:
            raise HamconScenarioError(
                "run requires a configuration file or a preset"
            )
        if args.kind is not None and config.scenario != args.kind:
            raise HamconScenarioError(
                f"{args.kind} command cannot run {config.scenario} scenario "
                f"{config.name}"
            )
        if args.seed is not None:
            config.seed = args.seed
        return config

    def _output_dir(self, args, config):
        """Return the output directory for this execution. Select args, env,
        scenario output setting and runtime configuration in this order."""
        if args.out is not None:
            return args.out
        if ENV_OUT in os.environ:
            return Path(os.environ[ENV_OUT])
        if 'dir' in config.output:
            return Path(config.output['dir'])
        return Path(self.conf.output.dir)

    def _run_scenario(self, args):
        config = self._load_scenario(args)
        outdir = self._output_dir(args, config)
        logger.debug("Running scenario %s in %s", config.name, outdir)
        return run_scenario(config, outdir)
