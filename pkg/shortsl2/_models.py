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
"""Matrix models of the classical short sl2-structures

Every model is a matrix Lie algebra of size N with h = diag(𝕀_i, 0, -𝕀_i), e carrying a block B in the top right
corner and f the same block in the bottom left corner, B² = 𝕀. Orthogonal algebras are skew with respect to the side
diagonal and use B = diag(𝕀_k, -𝕀_k);
symplectic algebras preserve [[0, Ω_n], [-Ω_n, 0]] and, like sl_n, use B = 𝕀_i.
The structures themselves are extracted from the matrices, never written down by hand.
"""

import functools
import logging
import re
from typing import Dict, List, Optional, Tuple

from sympy import QQ

from ._errors import InvalidParameters, InvalidStructure, MalformedInput
from ._foundation import (ExactMatrix, Span, VectorLike, add_scaled, flatten, identity, invariant_operators,
                          linear_combination, matrix, sparse, trace_product)
from ._isotypic import Extraction, extract
from ._lie import LieAlgebra, Sl2Triple, from_matrix_basis
from ._mapping import MappingWithInitCheck
from ._report import Report
from ._sympjordan import LieJordanStructure, standard_symplectic_form
from ._tkk import build

logger = logging.getLogger(__name__)

FAMILIES = ('maximal', 'sl', 'so_odd', 'so_even_vector', 'so_even_spin', 'sp')

# catalog name prefix -> (family, parameter names, constraint text)
_NAMING = {
    'maximal': ('maximal', ('n',), 'n >= 1, the structure on so(4n+1)'),
    'sl': ('sl', ('n', 'i'), '1 <= i and 2i < n'),
    'so-odd': ('so_odd', ('n', 'i'), 'i even and 2 <= i <= n, on so(2n+1)'),
    'so-even': ('so_even_vector', ('n', 'i'), 'i even and 2 <= i <= n-2, on so(2n)'),
    'so-even-spin': ('so_even_spin', ('n',), 'n odd and n >= 3, on so(2n)'),
    'sp': ('sp', ('n', 'i'), '1 <= i < n, on sp(2n)'),
}
_PREFIX = {family: prefix for prefix, (family, _, _) in _NAMING.items()}
_NAME_RE = re.compile(r'^(?P<prefix>[a-z-]+)((?::\d+)+)$')


class ModelSpec(object):
    """A family of classical short sl2-structures and its parameters"""

    def __init__(self, family, n, i=None):
        # type: (str, int, Optional[int]) -> None
        """
        :param family: one of :data:`FAMILIES`
        :param n: the rank-like parameter of the family
        :param i: the size of the blocks of h, for the families that take one
        :raises InvalidParameters: if the family is unknown or the parameters break its constraints
        """
        if family not in FAMILIES:
            raise InvalidParameters("unknown model family {!r}".format(family))
        if family == 'maximal':
            i = 2 * n
        elif family == 'so_even_spin':
            i = n - 1
        elif i is None:
            raise InvalidParameters("family {} needs the parameter i".format(family))
        self.__family = family
        self.__n = int(n)
        self.__i = int(i)
        problem = self.__problem()
        if problem:
            raise InvalidParameters("{}: {}".format(self.name, problem))

    def __problem(self):
        # type: () -> str
        family, n, i = self.__family, self.__n, self.__i
        if family == 'maximal':
            ok = n >= 1
        elif family == 'sl':
            ok = 1 <= i and 2 * i < n
        elif family == 'so_odd':
            ok = i % 2 == 0 and 2 <= i <= n
        elif family == 'so_even_vector':
            ok = i % 2 == 0 and 2 <= i <= n - 2
        elif family == 'so_even_spin':
            ok = n % 2 == 1 and n >= 3
        else:
            ok = 1 <= i < n
        return '' if ok else 'parameters must satisfy ' + _NAMING[_PREFIX[family]][2]

    @classmethod
    def parse(cls, name):
        # type: (str) -> ModelSpec
        """Reads a catalog name such as ``maximal:2``, ``sl:5:1`` or ``so-even-spin:5``

        :raises MalformedInput: if the name does not have the form prefix:n[:i] with a known prefix
        :raises InvalidParameters: if the parameters break the family's constraints
        """
        match = _NAME_RE.match(name.strip())
        if match is None or match.group('prefix') not in _NAMING:
            raise MalformedInput("unknown model name {!r}, expected one of {}".format(
                name, ', '.join(describe_family(prefix) for prefix in _NAMING)))
        family, parameters, _ = _NAMING[match.group('prefix')]
        values = [int(value) for value in match.group(2).split(':')[1:]]
        if len(values) != len(parameters):
            raise MalformedInput("model {!r} takes the parameters {}".format(name, ':'.join(parameters)))
        return cls(family, *values)

    @property
    def family(self):
        # type: () -> str
        return self.__family

    @property
    def n(self):
        # type: () -> int
        return self.__n

    @property
    def i(self):
        # type: () -> int
        """Size of the identity blocks of h"""
        return self.__i

    @property
    def name(self):
        # type: () -> str
        prefix = _PREFIX[self.__family]
        if len(_NAMING[prefix][1]) == 1:
            return '{}:{}'.format(prefix, self.__n)
        return '{}:{}:{}'.format(prefix, self.__n, self.__i)

    @property
    def size(self):
        # type: () -> int
        """Size N of the matrices"""
        if self.__family == 'maximal':
            return 4 * self.__n + 1
        if self.__family == 'sl':
            return self.__n
        if self.__family == 'so_odd':
            return 2 * self.__n + 1
        return 2 * self.__n

    @property
    def expected_dims(self):
        # type: () -> Tuple[int, int, int]
        """(dim g0, dim J1, dim J2) as the closed formulas of the family give them"""
        n, i = self.__n, self.__i
        if self.__family == 'maximal':
            return n * (2 * n + 1), 2 * n, n * (2 * n - 1)
        if self.__family == 'sl':
            return i * i + (n - 2 * i) ** 2 - 1, 2 * i * (n - 2 * i), i * i
        if self.__family == 'so_odd':
            m = n - i
            return i * (i + 1) // 2 + m * (2 * m + 1), i * (2 * m + 1), i * (i - 1) // 2
        if self.__family in ('so_even_vector', 'so_even_spin'):
            m = n - i
            return i * (i + 1) // 2 + m * (2 * m - 1), 2 * i * m, i * (i - 1) // 2
        m = n - i
        return i * (i - 1) // 2 + m * (2 * m + 1), 2 * i * m, i * (i + 1) // 2

    def __eq__(self, other):
        return isinstance(other, ModelSpec) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'ModelSpec({!r})'.format(self.name)


def describe_family(prefix):
    # type: (str) -> str
    """``prefix:n:i (constraints)`` for a catalog prefix"""
    _, parameters, constraint = _NAMING[prefix]
    return '{}:{} ({})'.format(prefix, ':'.join(parameters), constraint)


def _as_spec(spec):
    # type: (object) -> ModelSpec
    return spec if isinstance(spec, ModelSpec) else ModelSpec.parse(str(spec))


class ModelCatalog(MappingWithInitCheck):
    """Catalog name -> :class:`ModelSpec`

    Holds the default models; names that are not in it are parsed on lookup, so any valid name can be looked up.
    """

    def _init_map(self):
        names = ['maximal:{}'.format(n) for n in (1, 2, 3)]
        names += ['sl:{}:{}'.format(n, i) for n in range(4, 8) for i in (1, 2) if 2 * i < n]
        names += ['so-odd:{}:2'.format(n) for n in (3, 4, 5)]
        names += ['so-even:{}:2'.format(n) for n in (4, 5, 6)]
        names += ['so-even-spin:{}'.format(n) for n in (3, 5)]
        names += ['sp:{}:{}'.format(n, i) for n in range(2, 6) for i in range(1, n)]
        for name in names:
            self[name] = ModelSpec.parse(name)

    def __missing__(self, key):
        return ModelSpec.parse(str(key))

    @staticmethod
    def families():
        # type: () -> List[str]
        """Every catalog name pattern with its constraints"""
        return [describe_family(prefix) for prefix in _NAMING]


CATALOG = ModelCatalog()


class AmbientModel(object):
    """A matrix Lie algebra with a basis of matrices and the sl2-triple of a model"""

    def __init__(self, spec, matrices, labels, form, triple_matrices):
        # type: (ModelSpec, List[ExactMatrix], List[str], Optional[ExactMatrix], Tuple[ExactMatrix, ...]) -> None
        self.spec = spec
        self.matrices = matrices
        self.form = form  #: the invariant bilinear form of the matrices, None for sl_n
        self.algebra = from_matrix_basis(matrices, labels)  # type: LieAlgebra
        span = Span([flatten(m) for m in matrices], spec.size * spec.size)
        coordinates = []
        for name, value in zip('ehf', triple_matrices):
            coords = span.coordinates(flatten(value))
            if coords is None:
                raise InvalidStructure("{} of {} is not in the algebra".format(name, spec.name))
            coordinates.append(coords)
        self.triple = Sl2Triple(*coordinates)
        self.triple_matrices = triple_matrices  #: (e, h, f) as matrices

    def element_matrix(self, vector):
        # type: (VectorLike) -> ExactMatrix
        """The matrix of an element given by coordinates in the basis"""
        vector = sparse(vector)
        size = self.spec.size
        return linear_combination([self.matrices[k] for k in vector], list(vector.values()), (size, size))


def _sl_basis(size):
    # type: (int) -> Tuple[List[ExactMatrix], List[str]]
    matrices, labels = [], []
    for p in range(size):
        for q in range(size):
            if p != q:
                matrices.append(matrix([[1 if (r, c) == (p, q) else 0 for c in range(size)] for r in range(size)]))
                labels.append('E[{},{}]'.format(p + 1, q + 1))
    for p in range(size - 1):
        diagonal = [1 if r == p else -1 if r == p + 1 else 0 for r in range(size)]
        matrices.append(matrix([[diagonal[r] if r == c else 0 for c in range(size)] for r in range(size)]))
        labels.append('H[{}]'.format(p + 1))
    return matrices, labels


def side_diagonal_form(size):
    # type: (int) -> ExactMatrix
    """The symmetric form with ones on the antidiagonal"""
    return matrix([[1 if r + c == size - 1 else 0 for c in range(size)] for r in range(size)])


def _block(spec):
    # type: (ModelSpec) -> List[int]
    """Diagonal of B"""
    i = spec.i
    if spec.family in ('sl', 'sp'):
        return [1] * i
    return [1] * (i // 2) + [-1] * (i // 2)


def _triple_matrices(spec):
    # type: (ModelSpec) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]
    size, i = spec.size, spec.i
    block = _block(spec)
    e = [[0] * size for _ in range(size)]
    h = [[0] * size for _ in range(size)]
    f = [[0] * size for _ in range(size)]
    for p in range(i):
        e[p][size - i + p] = block[p]
        f[size - i + p][p] = block[p]
        h[p][p] = 1
        h[size - 1 - p][size - 1 - p] = -1
    return matrix(e), matrix(h), matrix(f)


@functools.lru_cache(maxsize=None)
def ambient_model(spec):
    # type: (ModelSpec) -> AmbientModel
    """The matrix algebra of a model with its explicit triple"""
    spec = _as_spec(spec)
    size = spec.size
    if spec.family == 'sl':
        matrices, labels = _sl_basis(size)
        form = None
    else:
        if spec.family == 'sp':
            form = standard_symplectic_form(spec.n)
        else:
            form = side_diagonal_form(size)
        matrices = invariant_operators(form, sign=1)
        labels = ['M[{}]'.format(k + 1) for k in range(len(matrices))]
    model = AmbientModel(spec, matrices, labels, form, _triple_matrices(spec))
    if not model.triple.is_triple(model.algebra):
        raise InvalidStructure("{}: e, h, f do not form an sl2-triple".format(spec.name))
    logger.debug('%s: ambient algebra of dimension %d', spec.name, model.algebra.dim)
    return model


def ambient_algebra(spec):
    # type: (object) -> Tuple[LieAlgebra, Sl2Triple]
    """The matrix Lie algebra of a model, in its natural basis, and the model's sl2-triple

    :param spec: a :class:`ModelSpec` or a catalog name
    :raises InvalidParameters: if the parameters break the family's constraints
    """
    model = ambient_model(_as_spec(spec))
    return model.algebra, model.triple


@functools.lru_cache(maxsize=None)
def catalog_extraction(spec):
    # type: (ModelSpec) -> Extraction
    spec = _as_spec(spec)
    model = ambient_model(spec)
    return extract(model.algebra, model.triple, check_simple=False)


def catalog_structure(spec):
    # type: (object) -> LieJordanStructure
    """The symplectic Lie-Jordan structure of a model, extracted from its matrices"""
    return catalog_extraction(_as_spec(spec)).structure


def ambient_form_scale(spec):
    # type: (object) -> object
    """The c for which c·tr(XY) is the invariant form the extraction uses, (e, f) = dim J1 / 2

    This is n - 2i for sl_n.
    """
    spec = _as_spec(spec)
    e, _, f = _triple_matrices(spec)
    return QQ(spec.expected_dims[1], 2) / trace_product(e, f)


def oracle_check(spec, structure=None):
    # type: (object, Optional[LieJordanStructure]) -> Report
    """Compares the algebra built from a model's structure with the matrix commutators of the model

    Every basis element of the built algebra is sent into the matrix algebra through the extraction embedding, and
    every bracket of the built algebra must match the commutator of the images exactly.

    :param spec: a :class:`ModelSpec` or a catalog name
    :param structure: a structure to build instead of the extracted one, on the same J1
    :return: a report with a ``dimension`` and a ``brackets`` check, the witness being the first mismatching pair
    """
    spec = _as_spec(spec)
    model = ambient_model(spec)
    extraction = catalog_extraction(spec)
    if structure is None:
        structure = extraction.structure
    built = build(structure, check=False)
    embedding = extraction.embedding
    report = Report('oracle {}'.format(spec.name))
    if not report.add('dimension', built.dim == len(embedding) == model.algebra.dim,
                      detail='built {}, ambient {}'.format(built.dim, model.algebra.dim)).passed:
        return report
    first = None
    mismatches = checked = 0
    for i in range(built.dim):
        for j in range(i + 1, built.dim):
            checked += 1
            expected = model.algebra.bracket(embedding[i], embedding[j])
            value = {}  # type: Dict[int, object]
            for k, coeff in built.bracket_basis(i, j).items():
                add_scaled(value, embedding[k], coeff)
            if value != expected:
                mismatches += 1
                if first is None:
                    first = [built.labels[i], built.labels[j]]
    report.add('brackets', not mismatches, first,
               '{} of {} pairs differ'.format(mismatches, checked) if mismatches else '')
    logger.debug('oracle %s: %d pairs, %d mismatches', spec.name, checked, mismatches)
    return report


def sl_closed_forms(spec, a, b):
    # type: (object, int, int) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]
    """φ, δ and δ0 of the sl_n model on two J1 basis vectors, as n x n matrices from the closed formulas

    With y = (a₁, b₁) and y' = (a₂, b₂) read off the blocks of g¹:

    * φ = ½(a₂b₁ - a₁b₂), placed where e has its block
    * δ = (-½(a₁b₂ + a₂b₁), b₁a₂ + b₂a₁, -½(a₁b₂ + a₂b₁)) block diagonal
    * δ0 = (-tr(a₁b₂ + a₂b₁)/(2i)·𝕀, b₁a₂ + b₂a₁, the same scalar) block diagonal
    """
    spec = _as_spec(spec)
    if spec.family != 'sl':
        raise InvalidParameters("closed forms are only known for sl models, not {}".format(spec.name))
    size, i = spec.size, spec.i
    middle = size - 2 * i
    extraction = catalog_extraction(spec)
    model = ambient_model(spec)
    n_d = len(extraction.structure.g0_basis)
    y = extraction.embedding[n_d:n_d + extraction.structure.dim]
    first, second = (model.element_matrix(y[k]).to_list() for k in (a, b))
    a1 = matrix([row[i:i + middle] for row in first[:i]], middle)
    b1 = matrix([row[size - i:] for row in first[i:i + middle]], i)
    a2 = matrix([row[i:i + middle] for row in second[:i]], middle)
    b2 = matrix([row[size - i:] for row in second[i:i + middle]], i)
    half = QQ(1, 2)
    phi_block = a2.matmul(b1).sub(a1.matmul(b2)).scalarmul(half)
    outer = a1.matmul(b2).add(a2.matmul(b1))
    inner = b1.matmul(a2).add(b2.matmul(a1))
    scalar = -sum((outer.to_list()[r][r] for r in range(i)), QQ.zero) / (2 * i)
    phi_matrix = _place(size, [(0, size - i, phi_block)])
    delta_matrix = _place(size, [(0, 0, outer.scalarmul(-half)), (i, i, inner),
                                 (size - i, size - i, outer.scalarmul(-half))])
    delta0_matrix = _place(size, [(0, 0, identity(i).scalarmul(scalar)), (i, i, inner),
                                  (size - i, size - i, identity(i).scalarmul(scalar))])
    return phi_matrix, delta_matrix, delta0_matrix


def _place(size, blocks):
    # type: (int, List[Tuple[int, int, ExactMatrix]]) -> ExactMatrix
    """A size x size matrix with blocks placed at the given offsets"""
    rows = [[QQ.zero] * size for _ in range(size)]
    for top, left, block in blocks:
        for r, row in block.to_dod().items():
            for c, value in row.items():
                rows[top + r][left + c] += value
    return matrix(rows)
