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

from shortsl2._errors import InvalidStructure, NotSemisimpleElement, NotShort, NotSimple
from shortsl2._isotypic import decompose, extract, grade
from shortsl2._lie import LieAlgebra, Sl2Triple, from_matrix_basis
from shortsl2._models import catalog_structure
from shortsl2._serialization import dump_lie, dump_structure
from shortsl2._sympjordan import maximal_structure, validate
from shortsl2._tkk import build, canonical_triple
from tests.helpers import SMALL_MODELS, heisenberg_algebra, sl2_algebra, unit_matrix


def sl3_with_principal_triple():
    """sl3 in the basis E12, E13, E21, E23, E31, E32, E11 - E22, E22 - E33 with its principal triple"""
    off_diagonal = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    basis = [unit_matrix(3, r, c) for r, c in off_diagonal]
    basis.append(unit_matrix(3, 0, 0).sub(unit_matrix(3, 1, 1)))
    basis.append(unit_matrix(3, 1, 1).sub(unit_matrix(3, 2, 2)))
    algebra = from_matrix_basis(basis)
    triple = Sl2Triple([1, 0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 2, 2], [0, 0, 2, 0, 0, 2, 0, 0])
    return algebra, triple


def built_so5():
    """so5 built from the maximal structure with dim J1 = 2, with its canonical triple"""
    structure = maximal_structure(1)
    algebra = build(structure)
    return algebra, canonical_triple(algebra, structure)


class TestGrading(unittest.TestCase):
    """Eigenspaces of ad(h)"""

    def test_sl2(self):
        sl2 = sl2_algebra()
        self.assertEqual(grade(sl2, [0, 1, 0]).dims, (1, 0, 1, 0, 1))

    def test_built_so5(self):
        algebra, triple = built_so5()
        grading = grade(algebra, triple.h)
        self.assertEqual(grading.dims, (1, 2, 4, 2, 1))
        self.assertEqual(grading.dim(2), len(grading.basis(2)))

    def test_long_grading(self):
        algebra, triple = sl3_with_principal_triple()
        self.assertTrue(triple.is_triple(algebra))
        with self.assertRaises(NotShort):
            grade(algebra, triple.h)

    def test_nilpotent_element(self):
        with self.assertRaises(NotSemisimpleElement):
            grade(sl2_algebra(), [1, 0, 0])


class TestDecompose(unittest.TestCase):
    """Isotypic components under a short triple"""

    def test_so5_multiplicities(self):
        algebra, triple = built_so5()
        data = decompose(algebra, triple)
        self.assertEqual(data.multiplicities, (3, 2, 1))
        self.assertEqual(len(data.invariants), 3)
        self.assertEqual(len(data.odd), 4)
        for v in data.invariants:
            self.assertEqual(algebra.bracket(triple.e, v), {})

    def test_not_a_triple(self):
        with self.assertRaises(InvalidStructure):
            decompose(sl2_algebra(), Sl2Triple([1, 0, 0], [0, 2, 0], [0, 0, 1]))

    def test_long_triple(self):
        algebra, triple = sl3_with_principal_triple()
        with self.assertRaises(NotShort):
            decompose(algebra, triple)


class TestExtract(unittest.TestCase):
    """Structures recovered from algebras"""

    def assertRoundTrip(self, structure):
        algebra = build(structure)
        extraction = extract(algebra, canonical_triple(algebra, structure))
        self.assertEqual(len(extraction.embedding), algebra.dim)
        self.assertTrue(validate(extraction.structure).passed)
        self.assertEqual(dump_structure(extraction.structure), dump_structure(structure))
        self.assertEqual(dump_lie(build(extraction.structure)), dump_lie(algebra))

    def test_maximal_round_trip(self):
        self.assertRoundTrip(maximal_structure(1))
        self.assertRoundTrip(maximal_structure(2))

    def test_catalog_round_trip(self):
        for name in SMALL_MODELS:
            with self.subTest(model=name):
                self.assertRoundTrip(catalog_structure(name))

    def test_extracted_dims(self):
        extraction = extract(*built_so5())
        structure = extraction.structure
        self.assertEqual((len(structure.g0_basis), structure.dim, len(structure.j2_basis)), (3, 2, 1))

    def test_no_j1(self):
        with self.assertRaises(NotShort):
            extract(sl2_algebra(), Sl2Triple([1, 0, 0], [0, 1, 0], [0, 0, 1]))

    def test_not_simple(self):
        with self.assertRaises(NotSimple):
            extract(heisenberg_algebra(), Sl2Triple([0, 0, 0], [0, 0, 0], [0, 0, 0]))
        sl2_plus_abelian = LieAlgebra(4, {(0, 1): [(0, -2)], (0, 2): [(1, 1)], (1, 2): [(2, -2)]})
        with self.assertRaises(NotSimple):
            extract(sl2_plus_abelian, Sl2Triple([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]))


if __name__ == '__main__':
    unittest.main()
