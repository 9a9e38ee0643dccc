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
"""Exceptions raised by shortsl2, each knowing the exit code the command line should use"""

from ._constants import EXIT_CHECK_FAILED, EXIT_INVALID_PARAMETERS, EXIT_MALFORMED_INPUT


class ShortSl2Error(Exception):
    """Base class of every error raised on purpose by this package"""

    exit_code = EXIT_CHECK_FAILED


class MalformedInput(ShortSl2Error, ValueError):
    """A file or string could not be parsed into the expected format"""

    exit_code = EXIT_MALFORMED_INPUT


class InvalidParameters(ShortSl2Error, ValueError):
    """Parameters were parsed fine but describe nothing that can be built"""

    exit_code = EXIT_INVALID_PARAMETERS


class InvalidType(InvalidParameters):
    """A (type, rank) pair that is not a simple Lie algebra type"""


class DegenerateForm(ShortSl2Error, ArithmeticError):
    """A bilinear form was singular on its ambient space"""


class DegenerateRestriction(ShortSl2Error, ArithmeticError):
    """A bilinear form was singular on a subspace it needs to project onto"""


class NotSymmetric(ShortSl2Error, ValueError):
    """An operator is not symmetric with respect to the symplectic form"""


class InvalidStructure(ShortSl2Error, ValueError):
    """A Lie-Jordan structure failed validation, or an sl2-triple its relations"""


class NotShort(ShortSl2Error, ValueError):
    """ad(h) has an eigenvalue outside {-2, ..., 2}, or a non-integer one"""


class NotSemisimpleElement(ShortSl2Error, ValueError):
    """ad(h) is not diagonalisable over the rationals"""


class NotSimple(ShortSl2Error, ValueError):
    """The algebra is not simple"""


class NonUnitalJ2(ShortSl2Error, ValueError):
    """The extracted Jordan algebra does not contain the identity operator"""


class NotBuilt(ShortSl2Error, ValueError):
    """A Lie algebra operation needs the basis labels produced by the TKK build"""


class WitnessNotFound(ShortSl2Error, RuntimeError):
    """No sl2-triple was found although the decision procedure says one exists"""
