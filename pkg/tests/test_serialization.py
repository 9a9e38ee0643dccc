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
import json
import unittest

from sympy import QQ

from shortsl2._errors import InvalidType, MalformedInput
from shortsl2._foundation import dense, rational
from shortsl2._lie import Sl2Triple
from shortsl2._rootsys import build_root_system, chevalley_algebra, classify
from shortsl2._serialization import (dump_classification, dump_lie, dump_structure, dump_triple, load_classification,
                                     load_lie, load_structure, load_triple, structure_to_dict)
from shortsl2._sympjordan import maximal_structure, validate
from shortsl2._tkk import build
from tests.helpers import sl2_algebra


class TestLieFiles(unittest.TestCase):
    """lie-v1"""

    def test_sl2_text(self):
        text = dump_lie(sl2_algebra())
        self.assertTrue(text.startswith('{\n "schema": "lie-v1",\n "dim": 3,'))
        self.assertTrue(text.endswith('}\n'))
        document = json.loads(text)
        self.assertEqual(document['labels'], ['e', 'h', 'f'])
        self.assertEqual(document['brackets'][0], {'i': 0, 'j': 1, 'terms': [[0, '-2']]})

    def test_reload(self):
        algebra = build(maximal_structure(1))
        text = dump_lie(algebra)
        again = load_lie(text)
        self.assertEqual(again.brackets, algebra.brackets)
        self.assertEqual(again.labels, algebra.labels)
        self.assertEqual(dump_lie(again), text)

    def test_fractions(self):
        text = json.dumps({'schema': 'lie-v1', 'dim': 2, 'labels': ['a', 'b'],
                           'brackets': [{'i': 0, 'j': 1, 'terms': [[1, '-3/6']]}]})
        self.assertEqual(load_lie(text).bracket_basis(0, 1), {1: QQ(-1, 2)})
        self.assertIn('"-1/2"', dump_lie(load_lie(text)))

    def test_without_schema(self):
        text = json.dumps({'dim': 3, 'labels': ['e', 'h', 'f'],
                           'brackets': [{'i': 0, 'j': 1, 'terms': [[0, '-2']]},
                                        {'i': 0, 'j': 2, 'terms': [[1, '1']]},
                                        {'i': 1, 'j': 2, 'terms': [[2, '-2']]}]})
        algebra = load_lie(text)
        self.assertEqual(algebra.brackets, sl2_algebra().brackets)
        self.assertEqual(dump_lie(algebra), dump_lie(sl2_algebra()))

    def test_malformed(self):
        good = {'schema': 'lie-v1', 'dim': 2, 'labels': ['a', 'b'], 'brackets': []}
        bad_documents = [
            dict(good, schema='lie-v2'),
            dict(good, dim='2'),
            dict(good, dim=True),
            {key: value for key, value in good.items() if key != 'labels'},
            dict(good, brackets=[{'i': 0, 'j': 1, 'terms': [[1, '1']]}, {'i': 0, 'j': 1, 'terms': []}]),
            dict(good, brackets=[{'i': 0, 'j': 1, 'terms': [[1, '1', 2]]}]),
            dict(good, brackets=[{'i': 0, 'j': 1, 'terms': [[1, 'x']]}]),
            dict(good, brackets=[{'i': 1, 'j': 0, 'terms': [[1, '1']]}]),
            dict(good, brackets=[{'i': 0, 'terms': []}]),
        ]
        for document in bad_documents:
            with self.subTest(document=document):
                with self.assertRaises(MalformedInput):
                    load_lie(json.dumps(document))
        for text in ('', 'not json', '[]', '"lie-v1"'):
            with self.assertRaises(MalformedInput):
                load_lie(text)


class TestStructureFiles(unittest.TestCase):
    """ljs-v1"""

    def test_reload(self):
        for n in (1, 2):
            with self.subTest(n=n):
                structure = maximal_structure(n)
                text = dump_structure(structure)
                again = load_structure(text)
                self.assertTrue(validate(again).passed)
                self.assertEqual(dump_structure(again), text)
                self.assertEqual(dump_lie(build(again)), dump_lie(build(structure)))

    def test_without_schema(self):
        structure = maximal_structure(1)
        document = structure_to_dict(structure)
        del document['schema']
        again = load_structure(json.dumps(document))
        self.assertEqual(dump_structure(again), dump_structure(structure))

    def test_key_order(self):
        document = structure_to_dict(maximal_structure(1))
        self.assertEqual(list(document), ['schema', 'dim_j1', 'omega', 'j2_basis', 'g0_basis', 'unit', 'delta0'])
        self.assertTrue(document['delta0'])
        for entry in document['delta0']:
            self.assertLessEqual(entry['i'], entry['j'])
            self.assertTrue(any(value != '0' for value in entry['value']))
        self.assertEqual(structure_to_dict(maximal_structure(2))['delta0'], [])

    def test_malformed(self):
        good = structure_to_dict(maximal_structure(1))
        bad_documents = [
            dict(good, schema='lie-v1'),
            dict(good, dim_j1=3),
            dict(good, omega=[['0', '1']]),
            dict(good, unit=['1', '0']),
            dict(good, delta0=[dict(good['delta0'][0], i=1, j=0)]),
            dict(good, delta0=[dict(good['delta0'][0], value=['1'] * 5)]),
            dict(good, j2_basis=[[['1', '0'], ['0']]]),
        ]
        for document in bad_documents:
            with self.subTest(document=document):
                with self.assertRaises(MalformedInput):
                    load_structure(json.dumps(document))


class TestClassificationFiles(unittest.TestCase):
    """cls-v1"""

    def test_g2(self):
        rows = classify('G', 2, trials=5, seed=1)
        text = dump_classification('G', 2, rows)
        self.assertEqual(dump_classification('G', 2, rows), text)
        document = load_classification(text)
        self.assertEqual((document['schema'], document['type'], document['rank']), ('cls-v1', 'G', 2))
        row = document['rows'][0]
        self.assertEqual(row['marking'], [0, 1])
        self.assertEqual(row['dims'], [3, 4, 1])
        self.assertTrue(row['exists'])
        self.assertNotIn('equivalent_to', row)
        self.assertIsInstance(row['witness'], Sl2Triple)
        self.assertTrue(row['witness'].is_triple(chevalley_algebra(build_root_system('G', 2))))

    def test_bare_rows(self):
        rows = json.loads(dump_classification('G', 2, classify('G', 2, trials=5, seed=1)))['rows']
        document = load_classification(json.dumps(rows))
        self.assertEqual((document['schema'], document['type'], document['rank']), ('cls-v1', None, None))
        self.assertEqual(document['rows'][0]['dims'], [3, 4, 1])
        self.assertTrue(document['rows'][0]['witness'].is_triple(chevalley_algebra(build_root_system('G', 2))))

    def test_witness_without_h(self):
        document = json.loads(dump_classification('G', 2, classify('G', 2, trials=5, seed=1)))
        h = document['rows'][0]['witness'].pop('h')
        del document['schema']
        witness = load_classification(json.dumps(document))['rows'][0]['witness']
        self.assertEqual(dense(witness.h, 14), [rational(value) for value in h])
        self.assertTrue(witness.is_triple(chevalley_algebra(build_root_system('G', 2))))
        with self.assertRaises(MalformedInput):
            load_classification(json.dumps(document['rows']))

    def test_bad_type(self):
        text = json.dumps({'schema': 'cls-v1', 'type': 'G', 'rank': 3, 'rows': []})
        with self.assertRaises(InvalidType):
            load_classification(text)
        with self.assertRaises(MalformedInput):
            load_classification(json.dumps({'schema': 'cls-v1', 'type': 'G', 'rank': 2, 'rows': [{'marking': [0, 1]}]}))


class TestTripleFiles(unittest.TestCase):
    """e, h and f as dense coordinate lists"""

    def test_reload(self):
        triple = Sl2Triple({0: QQ.one}, [0, 1, 0], {2: QQ.one})
        text = dump_triple(triple, 3)
        self.assertEqual(json.loads(text), {'e': ['1', '0', '0'], 'h': ['0', '1', '0'], 'f': ['0', '0', '1']})
        again = load_triple(text, 3)
        self.assertTrue(again.is_triple(sl2_algebra()))

    def test_malformed(self):
        for text in ('[]', '{"e": ["1"], "h": ["0"]}', 'nope'):
            with self.assertRaises(MalformedInput):
                load_triple(text, 1)
        with self.assertRaises(MalformedInput):
            load_triple(dump_triple(Sl2Triple([1, 0, 0], [0, 1, 0], [0, 0, 1]), 3), 4)


if __name__ == '__main__':
    unittest.main()
