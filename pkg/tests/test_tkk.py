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
import random
import unittest

from sympy import QQ

from shortsl2._errors import InvalidStructure, NotBuilt
from shortsl2._isotypic import grade
from shortsl2._lie import BasisLabel, form_value, is_simple, verify_jacobi
from shortsl2._sympjordan import LieJordanStructure, SymplecticSpace, maximal_structure, standard_symplectic_form
from shortsl2._tkk import TkkLayout, build, canonical_triple, invariant_form, subalgebra_report
from tests.helpers import perturbed, sl2_algebra


class TestLayout(unittest.TestCase):
    """Basis order of built algebras"""

    def test_positions(self):
        layout = TkkLayout(3, 2, 1)
        self.assertEqual(layout.dim, 10)
        self.assertEqual(layout.v1(1, 0), 3)
        self.assertEqual(layout.v1(-1, 1), 6)
        self.assertEqual(layout.v2('e', 0), 7)
        self.assertEqual(layout.v2('f', 0), 9)
        for position, label in enumerate(layout.labels()):
            self.assertEqual(layout.position(label), position)

    def test_from_labels(self):
        layout = TkkLayout(3, 2, 1)
        again = TkkLayout.from_labels(layout.labels())
        self.assertEqual((again.g0_dim, again.j1_dim, again.j2_dim), (3, 2, 1))
        shuffled = layout.labels()
        shuffled[0], shuffled[-1] = shuffled[-1], shuffled[0]
        with self.assertRaises(NotBuilt):
            TkkLayout.from_labels(shuffled)


class TestBuildMaximal(unittest.TestCase):
    """The maximal structure with dim J1 = 2 builds so5"""

    @classmethod
    def setUpClass(cls):
        cls.structure = maximal_structure(1)
        cls.algebra = build(cls.structure)

    def test_dimension_and_labels(self):
        self.assertEqual(self.algebra.dim, 10)
        labels = self.algebra.basis_labels()
        self.assertEqual([label.kind for label in labels], ['g0'] * 3 + ['v1'] * 4 + ['v2'] * 3)
        self.assertEqual(str(labels[3]), str(BasisLabel.v1(1, 0)))

    def test_jacobi(self):
        report = verify_jacobi(self.algebra, 'full')
        self.assertTrue(report.passed)
        self.assertEqual(report.triples_checked, 120)

    def test_simple(self):
        self.assertTrue(is_simple(self.algebra))

    def test_canonical_triple(self):
        triple = canonical_triple(self.algebra, self.structure)
        self.assertTrue(triple.is_triple(self.algebra))
        self.assertEqual(grade(self.algebra, triple.h).dims, (1, 2, 4, 2, 1))

    def test_invariant_form(self):
        triple = canonical_triple(self.algebra, self.structure)
        form = invariant_form(self.algebra, self.structure)
        self.assertEqual(form_value(form, triple.e, triple.f), QQ(1))

    def test_subalgebra_report(self):
        report = subalgebra_report(self.algebra)
        self.assertTrue(report.passed, str(report))

    def test_not_built(self):
        with self.assertRaises(NotBuilt):
            canonical_triple(sl2_algebra(), self.structure)
        with self.assertRaises(NotBuilt):
            subalgebra_report(sl2_algebra())

    def test_perturbations_break_jacobi(self):
        rng = random.Random(7)
        dim = self.algebra.dim
        detected = 0
        for _ in range(100):
            i, j = sorted(rng.sample(range(dim), 2))
            mutant = perturbed(self.algebra, (i, j), rng.randrange(dim))
            if not verify_jacobi(mutant, 'full').passed:
                detected += 1
        self.assertGreaterEqual(detected, 99)


class TestBuildLarger(unittest.TestCase):
    """dim J1 = 4 gives so9"""

    def test_so9(self):
        structure = maximal_structure(2)
        algebra = build(structure)
        self.assertEqual(algebra.dim, 10 + 8 + 3 * 6)
        self.assertTrue(verify_jacobi(algebra, 'full').passed)
        triple = canonical_triple(algebra, structure)
        self.assertTrue(triple.is_triple(algebra))
        self.assertEqual(grade(algebra, triple.h).dims, (6, 4, 16, 4, 6))
        self.assertTrue(subalgebra_report(algebra).passed)


class TestBuildInvalid(unittest.TestCase):
    """Structures that fail validation are refused"""

    def test_missing_unit(self):
        space = SymplecticSpace(standard_symplectic_form(2))
        sym = space.sym_basis()
        structure = LieJordanStructure(space, sym, space.sp_basis(), {}, [0] * len(sym))
        with self.assertRaises(InvalidStructure):
            build(structure)


if __name__ == '__main__':
    unittest.main()
