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
"""Which gradings of G2 and so7 come from an sl2-triple"""


import shortsl2

for kind, rank in (('G', 2), ('B', 3)):
    rows = shortsl2.classify(kind, rank, trials=10, seed=1)
    print('{}{}'.format(kind, rank))
    for row in rows:
        if row.exists:
            print('  {:<6} g0={} J1={} J2={}'.format(str(row.marking), *row.dims))
        else:
            print('  {:<6} no sl2-triple'.format(str(row.marking)))
