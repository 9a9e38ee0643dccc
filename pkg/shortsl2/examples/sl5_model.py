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
"""The sl5 model with i = 1: extract the structure, compare it with the matrices and print φ on two vectors"""


import shortsl2

spec = shortsl2.CATALOG['sl:5:1']
structure = shortsl2.catalog_structure(spec)
print('dim J1 =', structure.dim, 'dim J2 =', len(structure.j2_basis), 'dim g0 =', len(structure.g0_basis))
print(shortsl2.oracle_check(spec))

phi_matrix, delta_matrix, _ = shortsl2.sl_closed_forms(spec, 0, 3)
print('phi(y1, y4) =', phi_matrix.to_Matrix())
print('delta(y1, y4) =', delta_matrix.to_Matrix())
