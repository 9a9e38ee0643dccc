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
"""Build so(5) from the maximal structure on a 2 dimensional J1 and check it"""


import shortsl2

structure = shortsl2.maximal_structure(1)
print(shortsl2.validate(structure))

algebra = shortsl2.build(structure)
print('dimension', algebra.dim)
print(shortsl2.verify_jacobi(algebra, mode='full'))
print('simple:', shortsl2.is_simple(algebra))

triple = shortsl2.canonical_triple(algebra, structure)
print('grading:', shortsl2.grade(algebra, triple.h).dims)
