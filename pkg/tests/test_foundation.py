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

import unittest
from fractions import Fraction

from sympy import QQ

from shortsl2._errors import DegenerateForm, MalformedInput
from shortsl2._foundation import (Span, add_scaled, apply, combination, commutator, dense, flatten, format_rational,
                                  identity, invariant_operators, kernel, linear_combination, matrix,
                                  orthogonal_complement, rank, rational, row_basis, solve, sparse, trace,
                                  trace_product)
from shortsl2._sympjordan import standard_symplectic_form


class TestRationals(unittest.TestCase):
    """Parsing and formatting of exact rationals"""

    def test_rational(self):
        data = [
            (3, QQ(3)),
            ('3/4', QQ(3, 4)),
            (' -6/8 ', QQ(-3, 4)),
            (Fraction(5, 10), QQ(1, 2)),
            (QQ(7, 3), QQ(7, 3)),
        ]
        for inp, out in data:
            self.assertEqual(rational(inp), out)

    def test_bad_rational(self):
        for inp in ['1/0', 'x', '1/2/3', '', 0.5, True, None]:
            with self.assertRaises(MalformedInput):
                rational(inp)
        # Malformed input is also a ValueError for callers that do not know this package
        with self.assertRaises(ValueError):
            rational('one')

    def test_format(self):
        data = [(QQ(3, 4), '3/4'), (QQ(-1, 2), '-1/2'), (QQ(6, 3), '2'), (0, '0'), ('-10/4', '-5/2')]
        for inp, out in data:
            self.assertEqual(format_rational(inp), out)


class TestVectors(unittest.TestCase):
    """Sparse vector helpers"""

    def test_sparse_dense(self):
        self.assertEqual(sparse([0, '1/2', 0, -3]), {1: QQ(1, 2), 3: QQ(-3)})
        self.assertEqual(dense({2: 1}, 4), [0, 0, 1, 0])

    def test_add_scaled_drops_cancelled(self):
        target = {0: QQ(1), 1: QQ(2)}
        add_scaled(target, {1: QQ(1), 2: QQ(5)}, QQ(-2))
        self.assertEqual(target, {0: QQ(1), 2: QQ(-10)})

    def test_combination(self):
        self.assertEqual(combination([{0: QQ(1)}, {0: QQ(1), 1: QQ(1)}], [QQ(2), QQ(-2)]), {1: QQ(-2)})


class TestMatrices(unittest.TestCase):
    """Exact linear algebra over the rationals"""

    def test_rank_and_kernel(self):
        a = matrix([[1, 2], [2, 4]])
        self.assertEqual(rank(a), 1)
        self.assertEqual(kernel(a), [[QQ(-2), QQ(1)]])
        self.assertEqual(rank(identity(3)), 3)
        self.assertEqual(kernel(identity(3)), [])
        self.assertEqual(rank(matrix([[0, 0], [0, 0]])), 0)

    def test_kernel_is_annihilated(self):
        a = matrix([[1, 2, 3, 4], [2, 4, 6, 9], [0, 0, 1, 1]])
        basis = kernel(a)
        self.assertEqual(len(basis), 4 - rank(a))
        for vector in basis:
            self.assertEqual(apply(a, vector), [0, 0, 0])

    def test_solve(self):
        a = matrix([[1, 1], [1, -1]])
        self.assertEqual(solve(a, [2, 0]), [QQ(1), QQ(1)])
        self.assertEqual(solve(a, {0: 2}), [QQ(1), QQ(1)])
        self.assertIsNone(solve(matrix([[1, 1], [2, 2]]), [1, 3]))
        with self.assertRaises(ValueError):
            solve(a, [1, 2, 3])

    def test_row_basis(self):
        basis = row_basis([[1, 1, 0], [2, 2, 0], [0, 1, 1]], 3)
        self.assertEqual(len(basis), 2)
        self.assertEqual(basis[0], [QQ(1), QQ(0), QQ(-1)])

    def test_trace_product(self):
        a = matrix([[1, 2], [3, 4]])
        b = matrix([[0, '1/2'], [5, -1]])
        self.assertEqual(trace_product(a, b), trace(a.matmul(b)))

    def test_commutator(self):
        e = matrix([[0, 1], [0, 0]])
        f = matrix([[0, 0], [1, 0]])
        self.assertEqual(commutator(e, f), matrix([[1, 0], [0, -1]]))

    def test_linear_combination_and_flatten(self):
        a = matrix([[1, 0], [0, 0]])
        b = matrix([[0, 1], [1, 0]])
        total = linear_combination([a, b], [2, '1/2'], (2, 2))
        self.assertEqual(total, matrix([[2, '1/2'], ['1/2', 0]]))
        self.assertEqual(flatten(total), {0: QQ(2), 1: QQ(1, 2), 2: QQ(1, 2)})

    def test_orthogonal_complement(self):
        form = identity(3)
        complement = orthogonal_complement(form, [[1, 1, 0]])
        self.assertEqual(len(complement), 2)
        for vector in complement:
            self.assertEqual(vector[0] + vector[1], 0)
        with self.assertRaises(DegenerateForm):
            orthogonal_complement(matrix([[1, 0], [0, 0]]), [[1, 0]])

    def test_invariant_operators(self):
        """Dimensions of so_n, sp_2n and the symmetric operators of a skew form"""
        side_diagonal = matrix([[1 if r + c == 2 else 0 for c in range(3)] for r in range(3)])
        self.assertEqual(len(invariant_operators(side_diagonal, 1)), 3)
        for n in (1, 2, 3):
            omega = standard_symplectic_form(n)
            self.assertEqual(len(invariant_operators(omega, 1)), n * (2 * n + 1))
            self.assertEqual(len(invariant_operators(omega, -1)), n * (2 * n - 1))


class TestSpan(unittest.TestCase):
    """Coordinates with respect to a fixed basis"""

    def test_coordinates(self):
        span = Span([[1, 1, 0], [0, 1, 1]], 3)
        self.assertEqual(span.coordinates([2, 5, 3]), [QQ(2), QQ(3)])
        self.assertIsNone(span.coordinates([1, 0, 0]))
        self.assertIn({1: 1, 0: 1}, span)
        self.assertEqual(span.dimension, 2)

    def test_dependent(self):
        with self.assertRaises(ValueError):
            Span([[1, 2], [2, 4]], 2)


if __name__ == '__main__':
    unittest.main()
