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
"""Value types for the results of checks, where a failure is data rather than an exception"""

from typing import Any, Dict, List, Optional


class Check(object):
    """The outcome of checking a single named property"""

    def __init__(self, name, passed, witness=None, detail=''):
        # type: (str, bool, Optional[Any], str) -> None
        """
        :param name: short identifier of the property, e.g. ``jordan_closed``
        :param passed: whether the property holds
        :param witness: basis indices or labels showing the failure
        :param detail: free text describing the failure
        """
        self.name = name
        self.passed = bool(passed)
        self.witness = witness
        self.detail = detail

    def to_dict(self):
        # type: () -> Dict[str, Any]
        result = {'name': self.name, 'passed': self.passed}  # type: Dict[str, Any]
        if self.witness is not None:
            result['witness'] = self.witness
        if self.detail:
            result['detail'] = self.detail
        return result

    def __str__(self):
        text = '{:<28} {}'.format(self.name, 'pass' if self.passed else 'FAIL')
        if not self.passed and self.witness is not None:
            text += '  witness={}'.format(self.witness)
        if self.detail:
            text += '  {}'.format(self.detail)
        return text

    def __repr__(self):
        return 'Check({!r}, {!r})'.format(self.name, self.passed)


class Report(object):
    """An ordered list of checks plus notes that do not affect the outcome"""

    def __init__(self, title, checks=None, notes=None):
        # type: (str, Optional[List[Check]], Optional[List[str]]) -> None
        self.title = title
        self.checks = list(checks or [])
        self.notes = list(notes or [])

    def add(self, name, passed, witness=None, detail=''):
        # type: (str, bool, Optional[Any], str) -> Check
        check = Check(name, passed, witness, detail)
        self.checks.append(check)
        return check

    def extend(self, other):
        # type: (Report) -> None
        """Appends the checks and notes of another report"""
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    @property
    def passed(self):
        # type: () -> bool
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        # type: () -> List[Check]
        return [check for check in self.checks if not check.passed]

    def __getitem__(self, name):
        # type: (str) -> Check
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name):
        return any(check.name == name for check in self.checks)

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            'title': self.title,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
            'notes': list(self.notes),
        }

    def __str__(self):
        lines = ['{}: {}'.format(self.title, 'pass' if self.passed else 'FAIL')]
        lines.extend('  ' + str(check) for check in self.checks)
        lines.extend('  note: ' + note for note in self.notes)
        return '\n'.join(lines)
