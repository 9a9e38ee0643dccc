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

from shortsl2._report import Check, Report


class TestReport(unittest.TestCase):
    """Checks and reports"""

    def test_empty_report_passes(self):
        report = Report('nothing')
        self.assertTrue(report.passed)
        self.assertEqual(report.failures, [])
        self.assertEqual(str(report), 'nothing: pass')

    def test_failures(self):
        report = Report('demo')
        report.add('first', True)
        report.add('second', False, witness=[1, 2], detail='broken')
        report.notes.append('a note')
        self.assertFalse(report.passed)
        self.assertEqual([check.name for check in report.failures], ['second'])
        self.assertIn('second', report)
        self.assertNotIn('third', report)
        self.assertEqual(report['second'].witness, [1, 2])
        with self.assertRaises(KeyError):
            report['third']
        lines = str(report).splitlines()
        self.assertEqual(lines[0], 'demo: FAIL')
        self.assertIn('witness=[1, 2]', lines[2])
        self.assertEqual(lines[3], '  note: a note')

    def test_to_dict(self):
        report = Report('demo', [Check('ok', True)])
        report.add('bad', False, witness=3)
        self.assertEqual(report.to_dict(), {
            'title': 'demo',
            'passed': False,
            'checks': [{'name': 'ok', 'passed': True}, {'name': 'bad', 'passed': False, 'witness': 3}],
            'notes': [],
        })

    def test_extend(self):
        first = Report('first', [Check('a', True)], ['one'])
        first.extend(Report('second', [Check('b', False)], ['two']))
        self.assertEqual([check.name for check in first.checks], ['a', 'b'])
        self.assertEqual(first.notes, ['one', 'two'])
        self.assertFalse(first.passed)


if __name__ == '__main__':
    unittest.main()
