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
import sys
import unittest


if __name__ == '__main__':
    path = os.path.dirname(os.path.abspath(__file__))
    loader = unittest.defaultTestLoader
    suite = loader.discover(path, top_level_dir=os.path.dirname(path))
    runner = unittest.TextTestRunner()
    result = runner.run(suite)
    if result.testsRun and not result.wasSuccessful():
        sys.exit(1)
