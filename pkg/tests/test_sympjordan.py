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

from sympy import QQ

from shortsl2._errors import InvalidStructure, NotSymmetric
from shortsl2._foundation import apply, identity, matrix
from shortsl2._models import catalog_structure
from shortsl2._sympjordan import (PROPERTY_NAMES, LieJordanStructure, SymplecticSpace, curvature, delta_m,
                                  delta_operator, jordan_product, maximal_structure, phi, phi_m, phi_operator,
                                  property_suite, rank_one, split_g0, standard_symplectic_form, validate)
from tests.helpers import SMALL_MODELS


class TestSymplecticSpace(unittest.TestCase):
    """The skew form on J1"""

    def test_standard_form(self):
        self.assertEqual(standard_symplectic_form(1), matrix([[0, 1], [-1, 0]]))
        self.assertEqual(standard_symplectic_form(2), matrix(
            [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]))

    def test_bad_forms(self):
        bad_data = [
            [[0]],
            [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
            [[0, 1], [1, 0]],
            [[0, 0], [0, 0]],
        ]
        for omega in bad_data:
            with self.assertRaises(InvalidStructure):
                SymplecticSpace(omega)

    def test_pairing_and_symmetry(self):
        space = SymplecticSpace(standard_symplectic_form(1))
        self.assertEqual(space.pairing([1, 0], [0, 1]), 1)
        self.assertEqual(space.pairing([0, 1], [1, 0]), -1)
        self.assertTrue(space.is_symmetric(identity(2)))
        self.assertFalse(space.is_symmetric(matrix([[1, 0], [0, -1]])))
        self.assertTrue(space.is_skew(matrix([[1, 0], [0, -1]])))
        self.assertEqual(len(space.sym_basis()), 1)
        self.assertEqual(len(space.sp_basis()), 3)

    def test_rank_one(self):
        """R(a, b)c = ⟨c, a⟩b"""
        space = SymplecticSpace(standard_symplectic_form(2))
        a, b, c = [1, 2, 0, -1], [0, 1, 3, 1], [2, 0, 1, 1]
        expected = [space.pairing(c, a) * value for value in b]
        self.assertEqual(apply(rank_one(a, b, space), c), expected)

    def test_jordan_product(self):
        space = SymplecticSpace(standard_symplectic_form(1))
        self.assertEqual(jordan_product(identity(2), identity(2), space), identity(2))
        with self.assertRaises(NotSymmetric):
            jordan_product(identity(2), matrix([[1, 0], [0, -1]]), space)


class TestMaximalStructure(unittest.TestCase):
    """J2 = sym(J1) and g0 = sp(J1)"""

    def test_dimensions(self):
        for n in (1, 2, 3):
            structure = maximal_structure(n)
            self.assertEqual(structure.dim, 2 * n)
            self.assertEqual(len(structure.j2_basis), n * (2 * n - 1))
            self.assertEqual(len(structure.g0_basis), n * (2 * n + 1))
            i0, der = split_g0(structure)
            self.assertEqual(len(i0) + len(der), n * (2 * n + 1))
            self.assertEqual(len(i0), 3 if n == 1 else 0)

    def test_validate(self):
        for n in (1, 2):
            report = validate(maximal_structure(n))
            self.assertTrue(report.passed, str(report))
            self.assertIn('F_symmetric', report)

    def test_phi_and_delta_are_the_rank_one_maps(self):
        structure = maximal_structure(2)
        space = structure.space
        for i in range(4):
            for j in range(4):
                a, b = {i: QQ.one}, {j: QQ.one}
                self.assertEqual(phi_operator(a, b, structure), phi_m(a, b, space))
                self.assertEqual(delta_operator(a, b, structure), delta_m(a, b, space))

    def test_phi_is_antisymmetric(self):
        structure = maximal_structure(2)
        a, b = [1, '1/2', 0, 3], [0, 2, -1, 1]
        self.assertEqual(phi(a, b, structure), [-value for value in phi(b, a, structure)])

    def test_curvature_vanishes(self):
        structure = maximal_structure(2)
        vectors = [[1, 0, 2, 0], [0, 1, -1, 3], ['1/2', 1, 0, 1], [2, 0, 0, -1]]
        for a in vectors:
            for b in vectors:
                self.assertEqual(curvature(a, b, vectors[2], vectors[3], structure), 0)

    def test_property_suite(self):
        for n in (1, 2):
            report = property_suite(maximal_structure(n), samples=20, seed=5)
            self.assertTrue(report.passed, str(report))
            self.assertEqual([check.name for check in report.checks], list(PROPERTY_NAMES))

    def test_bad_n(self):
        with self.assertRaises(InvalidStructure):
            maximal_structure(0)


class TestValidate(unittest.TestCase):
    """Failures are reported, not raised"""

    def test_j2_not_symmetric(self):
        space = SymplecticSpace(standard_symplectic_form(1))
        structure = LieJordanStructure(space, [identity(2), matrix([[1, 0], [0, -1]])], space.sp_basis(), {}, [1, 0])
        report = validate(structure)
        self.assertFalse(report.passed)
        self.assertFalse(report['j2_symmetric'].passed)
        self.assertEqual(report['j2_symmetric'].witness, 1)
        self.assertNotIn('F_symmetric', report)

    def test_missing_unit(self):
        space = SymplecticSpace(standard_symplectic_form(2))
        sym = space.sym_basis()
        with self.assertRaises(InvalidStructure):
            LieJordanStructure(space, sym, space.sp_basis(), {}, [1])
        report = validate(LieJordanStructure(space, sym, space.sp_basis(), {}, [0] * len(sym)))
        self.assertFalse(report['unit'].passed)

    def test_wrong_shapes(self):
        space = SymplecticSpace(standard_symplectic_form(1))
        with self.assertRaises(InvalidStructure):
            LieJordanStructure(space, [identity(3)], [], {}, [1])
        with self.assertRaises(InvalidStructure):
            LieJordanStructure(space, [], [], {}, [])
        with self.assertRaises(InvalidStructure):
            LieJordanStructure(space, [identity(2), identity(2)], [], {}, [1, 0])

    def test_doubled_delta0_entry_is_rejected(self):
        structure = maximal_structure(1)
        delta0 = structure.delta0
        key = min(pair for pair, value in delta0.items() if any(value))
        delta0[key] = tuple(2 * value for value in delta0[key])
        doubled = LieJordanStructure(structure.space, structure.j2_basis, structure.g0_basis, delta0, structure.unit)
        report = validate(doubled)
        self.assertFalse(report.passed)
        self.assertFalse(report['delta0_equivariant'].passed)
        self.assertTrue(report['j2_symmetric'].passed)


class TestCatalogStructures(unittest.TestCase):
    """Validation and the identity suite on structures extracted from the matrix models"""

    def test_validate(self):
        for name in SMALL_MODELS:
            with self.subTest(model=name):
                report = validate(catalog_structure(name))
                self.assertTrue(report.passed, str(report))

    def test_property_suite(self):
        for name in SMALL_MODELS:
            with self.subTest(model=name):
                report = property_suite(catalog_structure(name), samples=10, seed=5)
                self.assertTrue(report.passed, str(report))
                self.assertTrue(report['bianchi'].passed)
                self.assertTrue(report['curvature_symmetric'].passed)


if __name__ == '__main__':
    unittest.main()
