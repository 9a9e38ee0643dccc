# -----------------------------------------------------------------------------
# Copyright ©2019 Arthur Gordon-Wright
#
# This file is part of shortsl2.
#
# shortsl2 is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# shortsl2 is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with shortsl2.  If not, see <https://www.gnu.org/licenses/>.
# -----------------------------------------------------------------------------

import os
from setuptools import setup

this_dir = os.path.dirname(__file__)
readme_path = os.path.join(this_dir, 'README.md')

with open(readme_path, 'r', encoding='utf-8') as readme_file:
    README = readme_file.read()

BUILD_REQUIREMENTS = [
    'bump2version>=0.5.11',
    'wheel>=0.33.6',
    'setuptools>=40',
]

DOCS_REQUIREMENTS = [
    'sphinx>=2.2',
    'sphinx-rtd-theme>=0.4.3',
    'sphinx-autodoc-typehints[type_comments]',
    'm2r',
]

INSTALL_REQUIREMENTS = [
    'sympy>=1.13',
    'numpy>=1.20',
]

# gmpy2 makes sympy's rationals several times faster, everything works without it
FAST_REQUIREMENTS = ['gmpy2>=2.1']


setup(
    name='shortsl2',
    version='0.1.0',
    description='Build, decompose and classify Lie algebras with short SL2-structures, in exact arithmetic',
    long_description=README,
    long_description_content_type='text/markdown',
    author='Arthur Gordon-Wright',
    license='GPLv3',
    classifiers=[
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=[
        'shortsl2',
        'shortsl2.examples'
    ],
    python_requires='>=3.8',
    install_requires=INSTALL_REQUIREMENTS,
    extras_require={
        'build': BUILD_REQUIREMENTS,
        'dev': BUILD_REQUIREMENTS + DOCS_REQUIREMENTS + FAST_REQUIREMENTS,
        'docs': DOCS_REQUIREMENTS,
        'fast': FAST_REQUIREMENTS,
    },
    entry_points={
        'console_scripts': ['shortsl2=shortsl2._cli:run'],
    },
)
