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
"""JSON codecs for Lie algebras (lie-v1), structures (ljs-v1), classifications (cls-v1) and sl2-triples

Every number is written as a "p/q" string. Keys are written in a fixed order with "schema" first, brackets sorted by
(i, j) and terms by index, so the same object always gives the same bytes. Readers accept documents without
"schema" and reject only a different one; cls-v1 is also read as a bare list of rows.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from ._constants import CLS_SCHEMA, LIE_SCHEMA, LJS_SCHEMA
from ._errors import MalformedInput
from ._foundation import ExactMatrix, as_matrix, dense, format_rational, rational, sparse
from ._lie import LieAlgebra, Sl2Triple
from ._rootsys import ClassificationRow, RootSystem, build_root_system, chevalley_algebra
from ._sympjordan import LieJordanStructure, SymplecticSpace

logger = logging.getLogger(__name__)


def _dumps(document):
    # type: (Dict[str, Any]) -> str
    return json.dumps(document, indent=1, ensure_ascii=False) + '\n'


def _loads(text, schema, rows=False):
    # type: (str, str, bool) -> Any
    try:
        document = json.loads(text)
    except ValueError as error:
        raise MalformedInput("not valid JSON: {}".format(error))
    if rows and isinstance(document, list):
        return document
    if not isinstance(document, dict):
        raise MalformedInput("expected a JSON object at the top level")
    if document.get('schema', schema) != schema:
        raise MalformedInput("expected schema {!r}, got {!r}".format(schema, document.get('schema')))
    return document


def _field(document, key, kind=None):
    try:
        value = document[key]
    except (KeyError, TypeError):
        raise MalformedInput("missing field {!r}".format(key))
    if kind is not None and not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise MalformedInput("field {!r} has the wrong type".format(key))
    return value


def _rationals(values):
    # type: (Sequence) -> List[str]
    return [format_rational(value) for value in values]


def _matrix_rows(value):
    # type: (ExactMatrix) -> List[List[str]]
    return [_rationals(row) for row in value.to_list()]


def _read_matrix(rows, size, what):
    # type: (Any, int, str) -> ExactMatrix
    if not isinstance(rows, list) or len(rows) != size or any(
            not isinstance(row, list) or len(row) != size for row in rows):
        raise MalformedInput("{} must be a {} x {} matrix".format(what, size, size))
    return as_matrix([[rational(value) for value in row] for row in rows])


def _read_vector(values, dim, what):
    # type: (Any, int, str) -> List
    if not isinstance(values, list) or len(values) != dim:
        raise MalformedInput("{} must be a list of {} rationals".format(what, dim))
    return [rational(value) for value in values]


# Lie algebras

def lie_to_dict(algebra):
    # type: (LieAlgebra) -> Dict[str, Any]
    brackets = []
    for (i, j), terms in sorted(algebra.brackets.items()):
        brackets.append({'i': i, 'j': j, 'terms': [[k, format_rational(value)] for k, value in terms]})
    return {'schema': LIE_SCHEMA, 'dim': algebra.dim, 'labels': list(algebra.labels), 'brackets': brackets}


def dump_lie(algebra):
    # type: (LieAlgebra) -> str
    """The lie-v1 text of an algebra"""
    return _dumps(lie_to_dict(algebra))


def load_lie(text):
    # type: (str) -> LieAlgebra
    """Reads lie-v1 text

    :raises MalformedInput: on bad JSON, another schema, missing fields, repeated or out of range brackets
    """
    document = _loads(text, LIE_SCHEMA)
    dim = _field(document, 'dim', int)
    labels = _field(document, 'labels', list)
    brackets = {}
    for entry in _field(document, 'brackets', list):
        i, j = _field(entry, 'i', int), _field(entry, 'j', int)
        if (i, j) in brackets:
            raise MalformedInput("bracket ({}, {}) is given twice".format(i, j))
        terms = _field(entry, 'terms', list)
        if any(not isinstance(term, list) or len(term) != 2 or not isinstance(term[0], int) for term in terms):
            raise MalformedInput("terms of bracket ({}, {}) must be [index, \"p/q\"] pairs".format(i, j))
        brackets[i, j] = [(k, rational(value)) for k, value in terms]
    algebra = LieAlgebra(dim, brackets, labels)
    logger.debug('read lie-v1 algebra of dimension %d', dim)
    return algebra


# Symplectic Lie-Jordan structures

def structure_to_dict(structure):
    # type: (LieJordanStructure) -> Dict[str, Any]
    n = structure.dim
    delta0 = []
    for i in range(n):
        for j in range(i, n):
            value = structure.delta0_value(i, j)
            if any(value):
                delta0.append({'i': i, 'j': j, 'value': _rationals(value)})
    return {
        'schema': LJS_SCHEMA,
        'dim_j1': n,
        'omega': _matrix_rows(structure.space.omega),
        'j2_basis': [_matrix_rows(op) for op in structure.j2_basis],
        'g0_basis': [_matrix_rows(op) for op in structure.g0_basis],
        'unit': _rationals(structure.unit),
        'delta0': delta0,
    }


def dump_structure(structure):
    # type: (LieJordanStructure) -> str
    """The ljs-v1 text of a structure, δ0 entries only for i ≤ j and only when nonzero"""
    return _dumps(structure_to_dict(structure))


def load_structure(text):
    # type: (str) -> LieJordanStructure
    """Reads ljs-v1 text

    Only the shapes are checked here, use :func:`validate` for the axioms.

    :raises MalformedInput: on bad JSON, another schema, missing fields or matrices of the wrong size
    :raises InvalidStructure: if Ω is not symplectic or a basis is linearly dependent
    """
    document = _loads(text, LJS_SCHEMA)
    n = _field(document, 'dim_j1', int)
    omega = _read_matrix(_field(document, 'omega'), n, 'omega')
    j2 = [_read_matrix(rows, n, 'J2 basis element') for rows in _field(document, 'j2_basis', list)]
    g0 = [_read_matrix(rows, n, 'g0 basis element') for rows in _field(document, 'g0_basis', list)]
    unit = _read_vector(_field(document, 'unit'), len(j2), 'unit')
    delta0 = {}
    for entry in _field(document, 'delta0', list):
        i, j = _field(entry, 'i', int), _field(entry, 'j', int)
        if not 0 <= i <= j < n:
            raise MalformedInput("delta0 entry ({}, {}) must satisfy 0 <= i <= j < {}".format(i, j, n))
        delta0[i, j] = [rational(value) for value in _field(entry, 'value', list)]
    structure = LieJordanStructure(SymplecticSpace(omega), j2, g0, delta0, unit)
    for key, value in delta0.items():
        if len(value) != structure.i0_dim:
            raise MalformedInput("delta0 entry {} has {} coordinates, i0 has dimension {}".format(
                key, len(value), structure.i0_dim))
    return structure


# Classifications

def classification_to_dict(kind, rank_, rows):
    # type: (str, int, Sequence[ClassificationRow]) -> Dict[str, Any]
    dim = build_root_system(kind, rank_).dimension
    entries = []
    for row in rows:
        entry = {
            'marking': list(row.marking.p),
            'exists': row.exists,
            'dims': list(row.dims),
            'g2_dim': row.g2_dim,
        }  # type: Dict[str, Any]
        if row.equivalent_to is not None:
            entry['equivalent_to'] = row.equivalent_to
        if row.witness is not None:
            entry['witness'] = triple_to_dict(row.witness, dim)
        if row.notes:
            entry['notes'] = list(row.notes)
        entries.append(entry)
    return {'schema': CLS_SCHEMA, 'type': kind, 'rank': rank_, 'rows': entries}


def dump_classification(kind, rank_, rows):
    # type: (str, int, Sequence[ClassificationRow]) -> str
    """The cls-v1 text of the rows of :func:`classify`, witnesses in Chevalley basis coordinates"""
    return _dumps(classification_to_dict(kind, rank_, rows))


def load_classification(text):
    # type: (str) -> Dict[str, Any]
    """Reads cls-v1 text into plain data, witnesses as :class:`Sl2Triple`

    A bare list of rows is read as rows of unknown type and rank. A witness may leave out h, which is then [e, f] in
    the Chevalley algebra, so that needs the type and rank.

    :raises MalformedInput: on bad JSON, another schema or missing fields
    :raises InvalidType: if the type and rank do not name a simple Lie algebra
    """
    document = _loads(text, CLS_SCHEMA, rows=True)
    rs = None
    if isinstance(document, list):
        document = {'schema': CLS_SCHEMA, 'type': None, 'rank': None, 'rows': document}
    else:
        rs = build_root_system(_field(document, 'type', str), _field(document, 'rank', int))
    for entry in _field(document, 'rows', list):
        for key in ('marking', 'exists', 'dims', 'g2_dim'):
            _field(entry, key)
        if 'witness' in entry:
            entry['witness'] = _witness_from_dict(entry['witness'], rs)
    return document


def _witness_from_dict(document, rs):
    # type: (Any, Optional[RootSystem]) -> Sl2Triple
    e = _field(document, 'e', list)
    dim = len(e) if rs is None else rs.dimension
    e = _read_vector(e, dim, 'e')
    f = _read_vector(_field(document, 'f'), dim, 'f')
    if 'h' in document:
        return Sl2Triple(e, _read_vector(document['h'], dim, 'h'), f)
    if rs is None:
        raise MalformedInput("a witness without h needs the type and rank")
    return Sl2Triple(e, chevalley_algebra(rs).bracket(sparse(e), sparse(f)), f)


# sl2-triples

def triple_to_dict(triple, dim):
    # type: (Sl2Triple, int) -> Dict[str, List[str]]
    return {name: _rationals(dense(getattr(triple, name), dim)) for name in 'ehf'}


def dump_triple(triple, dim):
    # type: (Sl2Triple, int) -> str
    """A triple file: the dense coordinates of e, h and f in an algebra of dimension dim"""
    return _dumps(triple_to_dict(triple, dim))


def triple_from_dict(document, dim):
    # type: (Any, int) -> Sl2Triple
    return Sl2Triple(*(_read_vector(_field(document, name), dim, name) for name in 'ehf'))


def load_triple(text, dim):
    # type: (str, int) -> Sl2Triple
    """Reads a triple file for an algebra of dimension dim

    :raises MalformedInput: on bad JSON, missing vectors or vectors of the wrong length
    """
    try:
        document = json.loads(text)
    except ValueError as error:
        raise MalformedInput("not valid JSON: {}".format(error))
    if not isinstance(document, dict):
        raise MalformedInput("expected a JSON object with e, h and f")
    return triple_from_dict(document, dim)
