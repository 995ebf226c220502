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

from setuptools import setup, find_packages

# get __version__
exec(open('hamcon/version.py').read())

setup(name='Hamcon',
      version=__version__,
      packages=find_packages(exclude=['tests']),
      package_data={
          'hamcon.scenarios': ['presets/*.yml', 'templates/*.j2'],
      },
      author='Hamcon contributors',
      license='GPLv3+',
      platforms=['GNU/Linux'],
      python_requires='>=3.7',
      install_requires=['numpy>=1.20',
                        'scipy>=1.6',
                        'PyYAML',
                        'Jinja2>=2.11.0'],
      entry_points = {
          'console_scripts': [
              'hamconctl=hamcon.cli.hamconctl:Hamconctl.run',
          ],
      })
