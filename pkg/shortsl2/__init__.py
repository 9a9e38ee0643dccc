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

from . import _api
from ._api import *  # noqa: F401,F403
from ._api import __all__

__doc__ = _api.__doc__

__version__ = '0.1.0'
