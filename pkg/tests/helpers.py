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
"""Small utilities that are used by more than one test class"""


import os

from sympy import QQ

from shortsl2 import LieAlgebra, from_matrix_basis, matrix

# Models small enough to build, verify and round trip in every test run
SMALL_MODELS = ('maximal:1', 'sl:4:1', 'sl:5:1', 'so-odd:3:2', 'so-even-spin:3', 'sp:2:1', 'sp:3:1')


def slow_tests_enabled():
    """Whether to run the E7, E8 and whole-catalog tests, which take minutes rather than seconds"""
    var = os.getenv('SHORTSL2_SLOW_TESTS', False)
    return bool(var) and var.lower() != 'false'


def unit_matrix(size, row, col):
    """The size x size matrix with a single one at (row, col)"""
    return matrix([[1 if (r, c) == (row, col) else 0 for c in range(size)] for r in range(size)])


def sl2_algebra():
    """sl2 in the basis (e, h, f)"""
    e = matrix([[0, 1], [0, 0]])
    h = matrix([[1, 0], [0, -1]])
    f = matrix([[0, 0], [1, 0]])
    return from_matrix_basis([e, h, f], ['e', 'h', 'f'])


def heisenberg_algebra():
    """The three dimensional Heisenberg algebra, [x, y] = z"""
    return LieAlgebra(3, {(0, 1): [(2, QQ.one)]}, ['x', 'y', 'z'])


def perturbed(algebra, pair, index, delta=QQ.one):
    """A copy of an algebra with one structure constant of [e_i, e_j] changed by delta"""
    brackets = {key: dict(terms) for key, terms in algebra.brackets.items()}
    terms = brackets.setdefault(pair, {})
    terms[index] = terms.get(index, QQ.zero) + delta
    return LieAlgebra(algebra.dim, brackets, algebra.labels)
