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
"""A few simple constants that are used in multiple other modules"""

import os
from typing import Any, Dict, List, Tuple

# Randomised procedures
DEFAULT_SEED = int(os.getenv('SHORTSL2_SEED', 42))  #: Seed used whenever the caller does not pass one
DEFAULT_TRIALS = int(os.getenv('SHORTSL2_TRIALS', 20))  #: Random elements tried by the generic rank decision
RANDOM_BOUND = 10  #: Random numerators, denominators and coefficients stay within this bound
PROPERTY_SAMPLES = 100  #: Random samples per identity in the property suites
NOT_EXISTS_RETRIES = 100  #: Extra witness attempts made before trusting a "does not exist" decision

# Jacobi verification
FULL_JACOBI_MAX_DIM = 80  #: Largest dimension for which the default Jacobi mode checks every triple
JACOBI_SAMPLES = 10000  #: Triples checked by the sampled Jacobi mode

# Command line
DEFAULT_LOG_LEVEL = os.getenv('SHORTSL2_LOG_LEVEL', 'WARNING')
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_MALFORMED_INPUT = 2
EXIT_INVALID_PARAMETERS = 3

# File formats
LIE_SCHEMA = 'lie-v1'
LJS_SCHEMA = 'ljs-v1'
CLS_SCHEMA = 'cls-v1'

# Types
Scalar = Any  #: An element of sympy.QQ
Vector = List[Scalar]  #: Dense coordinate vector
SparseVector = Dict[int, Scalar]  #: Coordinate index -> nonzero coefficient
Terms = Tuple[Tuple[int, Scalar], ...]  #: Sorted (index, coefficient) pairs of a stored bracket
