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

from shortsl2._errors import InvalidParameters, MalformedInput
from shortsl2._foundation import add_scaled, commutator
from shortsl2._models import (CATALOG, FAMILIES, ModelCatalog, ModelSpec, ambient_algebra, ambient_form_scale,
                              ambient_model, catalog_extraction, catalog_structure, oracle_check, sl_closed_forms)
from shortsl2._sympjordan import (LieJordanStructure, SymplecticSpace, delta, phi, phi_m, phi_operator, validate)
from tests.helpers import SMALL_MODELS, slow_tests_enabled


def image(spec, offset, coordinates):
    """The matrix of Σ c_k x_{offset + k}, x running over the embedded basis of the built algebra"""
    extraction = catalog_extraction(spec)
    vector = {}
    for k, value in enumerate(coordinates):
        add_scaled(vector, extraction.embedding[offset + k], value)
    return ambient_model(spec).element_matrix(vector)


class TestModelSpec(unittest.TestCase):
    """Names and parameters of models"""

    def test_parse(self):
        spec = ModelSpec.parse('sl:5:1')
        self.assertEqual((spec.family, spec.n, spec.i, spec.name, spec.size), ('sl', 5, 1, 'sl:5:1', 5))
        spec = ModelSpec.parse(' maximal:2 ')
        self.assertEqual((spec.i, spec.size, spec.expected_dims), (4, 9, (10, 4, 6)))
        spec = ModelSpec.parse('so-even-spin:5')
        self.assertEqual((spec.family, spec.i, spec.size, spec.name), ('so_even_spin', 4, 10, 'so-even-spin:5'))
        self.assertEqual(ModelSpec.parse('so-odd:4:2').size, 9)
        self.assertEqual(ModelSpec.parse('sp:3:1'), ModelSpec('sp', 3, 1))

    def test_malformed_names(self):
        for name in ('foo:1', 'sl:5', 'sl', 'maximal:1:2', 'sl:a:1', 'sl:5:1:1', ''):
            with self.subTest(name=name):
                with self.assertRaises(MalformedInput):
                    ModelSpec.parse(name)

    def test_invalid_parameters(self):
        for name in ('sl:4:2', 'sl:5:0', 'so-odd:3:1', 'so-odd:3:4', 'so-even:4:4', 'so-even-spin:4',
                     'so-even-spin:1', 'sp:2:2', 'maximal:0'):
            with self.subTest(name=name):
                with self.assertRaises(InvalidParameters):
                    ModelSpec.parse(name)
        with self.assertRaises(InvalidParameters):
            ModelSpec('nope', 3, 1)
        with self.assertRaises(InvalidParameters):
            ModelSpec('sl', 5)

    def test_expected_dims_add_up(self):
        for spec in CATALOG.values():
            g0, j1, j2 = spec.expected_dims
            size = spec.size
            if spec.family == 'sl':
                dim = size * size - 1
            elif spec.family == 'sp':
                dim = spec.n * (2 * spec.n + 1)
            else:
                dim = size * (size - 1) // 2
            with self.subTest(model=spec.name):
                self.assertEqual(g0 + 2 * j1 + 3 * j2, dim)


class TestCatalog(unittest.TestCase):
    """The default models"""

    def test_contents(self):
        self.assertEqual(len(CATALOG), 28)
        self.assertIn('maximal:1', CATALOG)
        self.assertIn('sp:5:4', CATALOG)
        self.assertNotIn('sl:4:2', CATALOG)
        self.assertEqual({spec.family for spec in CATALOG.values()}, set(FAMILIES))
        for name, spec in CATALOG.items():
            self.assertEqual(spec.name, name)

    def test_lookup_outside_catalog(self):
        self.assertEqual(CATALOG['sl:9:3'].expected_dims, (17, 18, 9))
        self.assertNotIn('sl:9:3', CATALOG)
        with self.assertRaises(InvalidParameters):
            CATALOG['sl:9:5']

    def test_families(self):
        families = ModelCatalog.families()
        self.assertEqual(len(families), 6)
        self.assertTrue(families[0].startswith('maximal:n'))


class TestAmbientModels(unittest.TestCase):
    """Matrix algebras and the structures extracted from them"""

    def test_dimensions(self):
        for name in SMALL_MODELS:
            with self.subTest(model=name):
                spec = CATALOG[name]
                algebra, triple = ambient_algebra(spec)
                g0, j1, j2 = spec.expected_dims
                self.assertEqual(algebra.dim, g0 + 2 * j1 + 3 * j2)
                self.assertTrue(triple.is_triple(algebra))
                structure = catalog_structure(spec)
                self.assertEqual((len(structure.g0_basis), structure.dim, len(structure.j2_basis)), (g0, j1, j2))

    def test_structures_validate(self):
        for name in SMALL_MODELS:
            with self.subTest(model=name):
                report = validate(catalog_structure(name))
                self.assertTrue(report.passed, str(report))

    def test_oracle(self):
        for name in SMALL_MODELS:
            with self.subTest(model=name):
                report = oracle_check(name)
                self.assertTrue(report.passed, str(report))

    @unittest.skipUnless(slow_tests_enabled(), 'set SHORTSL2_SLOW_TESTS to run')
    def test_oracle_whole_catalog(self):
        for name in CATALOG:
            with self.subTest(model=name):
                self.assertTrue(oracle_check(name).passed)

    def test_oracle_detects_a_scaled_form(self):
        structure = catalog_structure('sp:2:1')
        scaled = LieJordanStructure(SymplecticSpace(structure.space.omega.scalarmul(QQ(2))), structure.j2_basis,
                                    structure.g0_basis, structure.delta0, structure.unit)
        report = oracle_check('sp:2:1', scaled)
        self.assertTrue(report['dimension'].passed)
        self.assertFalse(report['brackets'].passed)
        self.assertEqual(len(report['brackets'].witness), 2)
        self.assertIn('pairs differ', report['brackets'].detail)

    def test_maximal_phi(self):
        structure = catalog_structure('maximal:1')
        for a in range(structure.dim):
            for b in range(structure.dim):
                self.assertEqual(phi_operator({a: 1}, {b: 1}, structure).to_list(),
                                 phi_m({a: 1}, {b: 1}, structure.space).to_list())

    def test_form_scale(self):
        self.assertEqual(ambient_form_scale('sl:4:1'), 2)
        self.assertEqual(ambient_form_scale('sl:5:1'), 3)
        self.assertEqual(ambient_form_scale('sl:7:2'), 3)


class TestSlClosedForms(unittest.TestCase):
    """φ, δ and δ0 of the sl models against the block formulas"""

    def assertClosedForms(self, name):
        spec = CATALOG[name]
        structure = catalog_structure(spec)
        split = structure.split()
        n_d = len(structure.g0_basis)
        w_offset = n_d + 2 * structure.dim
        for a in range(structure.dim):
            for b in range(structure.dim):
                phi_matrix, delta_matrix, delta0_matrix = sl_closed_forms(spec, a, b)
                unit_a, unit_b = {a: QQ.one}, {b: QQ.one}
                self.assertEqual(image(spec, w_offset, phi(unit_a, unit_b, structure)).to_list(),
                                 phi_matrix.to_list())
                self.assertEqual(image(spec, 0, delta(unit_a, unit_b, structure)).to_list(), delta_matrix.to_list())
                delta0 = split.from_i0(structure.delta0_coordinates(unit_a, unit_b))
                self.assertEqual(image(spec, 0, [delta0.get(d, QQ.zero) for d in range(n_d)]).to_list(),
                                 delta0_matrix.to_list())

    def test_sl4(self):
        self.assertClosedForms('sl:4:1')

    def test_sl5(self):
        self.assertClosedForms('sl:5:1')

    def test_phi_is_half_the_commutator(self):
        spec = CATALOG['sl:5:1']
        extraction = catalog_extraction(spec)
        n_d = len(extraction.structure.g0_basis)
        model = ambient_model(spec)
        y = [model.element_matrix(v) for v in extraction.embedding[n_d:n_d + extraction.structure.dim]]
        phi_matrix, _, _ = sl_closed_forms(spec, 0, 3)
        self.assertEqual(phi_matrix.to_list(), commutator(y[0], y[3]).scalarmul(QQ(-1, 2)).to_list())

    def test_only_sl(self):
        with self.assertRaises(InvalidParameters):
            sl_closed_forms('sp:2:1', 0, 1)


if __name__ == '__main__':
    unittest.main()
