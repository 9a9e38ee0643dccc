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
"""Finite dimensional Lie algebras given by sparse structure constants

A :class:`LieAlgebra` stores [e_i, e_j] = Σ c_ij^k e_k for i < j only, each bracket as a sorted tuple of (k, c)
pairs. Elements are sparse coordinate dicts. Algebras built from a Lie-Jordan structure carry :class:`BasisLabel`
labels; algebras from anywhere else carry opaque string labels.
"""

import logging
import re
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from numpy.random import default_rng
from sympy import QQ

from ._constants import DEFAULT_SEED, FULL_JACOBI_MAX_DIM, JACOBI_SAMPLES, Scalar, SparseVector, Terms
from ._errors import MalformedInput
from ._foundation import (ExactMatrix, Span, VectorLike, add_scaled, as_matrix, flatten, from_sparse_rows, rank,
                          rational, row_basis, sparse, trace_product)
from ._report import Report

logger = logging.getLogger(__name__)

SL2_NAMES = ('e', 'h', 'f')
_SL2_GRADES = {'e': 2, 'h': 0, 'f': -2}
_LABEL_RE = re.compile(r'^(?:g0\[(?P<g0>\d+)\]|v1\[(?P<weight>[+-]1),(?P<j1>\d+)\]|v2\[(?P<sl2>[ehf]),(?P<j2>\d+)\])$')


class BasisLabel(object):
    """Label of a basis element of g = g0 ⊕ (Q²⊗J1) ⊕ (sl2⊗J2)

    Exactly one of three kinds: ``g0`` with the index of a g0 basis element, ``v1`` with a weight ±1 and a J1 index,
    or ``v2`` with one of e, h, f and a J2 index. Indices are zero based; the string form is one based, e.g.
    ``v1[+1,3]`` for e₁⊗a_2.
    """

    def __init__(self, kind, index, tag=None):
        # type: (str, int, Optional[object]) -> None
        if kind == 'g0':
            tag = None
        elif kind == 'v1':
            if tag not in (1, -1):
                raise ValueError("v1 labels need weight +1 or -1, got {!r}".format(tag))
        elif kind == 'v2':
            if tag not in SL2_NAMES:
                raise ValueError("v2 labels need one of e, h, f, got {!r}".format(tag))
        else:
            raise ValueError("unknown label kind {!r}".format(kind))
        if index < 0:
            raise ValueError("label index must be non-negative, got {}".format(index))
        self.__kind = kind
        self.__index = index
        self.__tag = tag

    @classmethod
    def g0(cls, index):
        return cls('g0', index)

    @classmethod
    def v1(cls, weight, index):
        return cls('v1', index, weight)

    @classmethod
    def v2(cls, name, index):
        return cls('v2', index, name)

    @classmethod
    def parse(cls, text):
        # type: (str) -> Optional[BasisLabel]
        """The label a string describes, or None for an opaque label"""
        match = _LABEL_RE.match(text)
        if match is None:
            return None
        if match.group('g0') is not None:
            return cls.g0(int(match.group('g0')) - 1)
        if match.group('weight') is not None:
            return cls.v1(int(match.group('weight')), int(match.group('j1')) - 1)
        return cls.v2(match.group('sl2'), int(match.group('j2')) - 1)

    @property
    def kind(self):
        # type: () -> str
        return self.__kind

    @property
    def index(self):
        # type: () -> int
        return self.__index

    @property
    def tag(self):
        """The weight of a v1 label or the sl2 basis name of a v2 label"""
        return self.__tag

    @property
    def grade(self):
        # type: () -> int
        """Eigenvalue of ad(h⊗𝕀) on this basis element"""
        if self.__kind == 'g0':
            return 0
        if self.__kind == 'v1':
            return self.__tag
        return _SL2_GRADES[self.__tag]

    def __str__(self):
        if self.__kind == 'g0':
            return 'g0[{}]'.format(self.__index + 1)
        if self.__kind == 'v1':
            return 'v1[{:+d},{}]'.format(self.__tag, self.__index + 1)
        return 'v2[{},{}]'.format(self.__tag, self.__index + 1)

    def __repr__(self):
        return 'BasisLabel({!r})'.format(str(self))

    def __eq__(self, other):
        return isinstance(other, BasisLabel) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))


def _normalise_terms(terms):
    # type: (Iterable) -> Terms
    if isinstance(terms, Mapping):
        terms = terms.items()
    collected = {}  # type: SparseVector
    for k, value in terms:
        add_scaled(collected, {int(k): rational(value)})
    return tuple(sorted(collected.items()))


class LieAlgebra(object):
    """A Lie algebra with a fixed basis and sparse structure constants

    Instances are immutable. The Jacobi identity is not assumed, see :func:`verify_jacobi`.
    """

    def __init__(self, dim, brackets, labels=None):
        # type: (int, Mapping[Tuple[int, int], Iterable], Optional[Sequence]) -> None
        """
        :param dim: dimension of the algebra
        :param brackets: mapping (i, j) -> terms of [e_i, e_j] for i < j, terms being (k, coefficient) pairs or a
            k -> coefficient mapping; missing pairs are zero
        :param labels: one label per basis element, strings or :class:`BasisLabel`; defaults to ``e1, e2, ...``
        :raises MalformedInput: if a key is not a pair i < j in range, a term index is out of range or the labels do
            not match the dimension
        """
        if dim < 0:
            raise MalformedInput("dimension must be non-negative, got {}".format(dim))
        self.__dim = dim
        if labels is None:
            labels = ['e{}'.format(i + 1) for i in range(dim)]
        if len(labels) != dim:
            raise MalformedInput("{} labels given for an algebra of dimension {}".format(len(labels), dim))
        self.__labels = tuple(str(label) for label in labels)
        if len(set(self.__labels)) != dim:
            raise MalformedInput("labels are not unique")
        self.__brackets = {}  # type: Dict[Tuple[int, int], Terms]
        for key, terms in brackets.items():
            i, j = key
            if not 0 <= i < j < dim:
                raise MalformedInput("bracket key ({}, {}) is not a pair i < j below {}".format(i, j, dim))
            normalised = _normalise_terms(terms)
            if any(not 0 <= k < dim for k, _ in normalised):
                raise MalformedInput("bracket ({}, {}) has a term outside the basis".format(i, j))
            if normalised:
                self.__brackets[i, j] = normalised
        self.__table = None  # type: Optional[List[Dict[int, SparseVector]]]
        self.__ad = {}  # type: Dict[int, ExactMatrix]
        self.__index = {label: i for i, label in enumerate(self.__labels)}

    @property
    def dim(self):
        # type: () -> int
        return self.__dim

    @property
    def labels(self):
        # type: () -> Tuple[str, ...]
        return self.__labels

    @property
    def brackets(self):
        # type: () -> Dict[Tuple[int, int], Terms]
        """A copy of the stored brackets, keyed by (i, j) with i < j"""
        return dict(self.__brackets)

    def basis_labels(self):
        # type: () -> Optional[List[BasisLabel]]
        """The labels parsed as :class:`BasisLabel`, or None if any label is opaque"""
        parsed = [BasisLabel.parse(label) for label in self.__labels]
        if any(label is None for label in parsed):
            return None
        return parsed

    def index(self, label):
        # type: (object) -> int
        """Position of a basis element given its label"""
        return self.__index[str(label)]

    def basis_vector(self, i):
        # type: (int) -> SparseVector
        return {i: QQ.one}

    def _table(self):
        # type: () -> List[Dict[int, SparseVector]]
        """Full structure constant table, table[i][j] = [e_i, e_j] for every pair with a nonzero bracket"""
        if self.__table is None:
            table = [{} for _ in range(self.__dim)]  # type: List[Dict[int, SparseVector]]
            for (i, j), terms in self.__brackets.items():
                table[i][j] = dict(terms)
                table[j][i] = {k: -value for k, value in terms}
            self.__table = table
        return self.__table

    def bracket_basis(self, i, j):
        # type: (int, int) -> SparseVector
        """[e_i, e_j] as a new sparse vector"""
        return dict(self._table()[i].get(j, {}))

    def bracket(self, x, y):
        # type: (VectorLike, VectorLike) -> SparseVector
        """[x, y] for sparse or dense coordinate vectors"""
        table = self._table()
        y = sparse(y)
        result = {}  # type: SparseVector
        for i, x_i in sparse(x).items():
            row = table[i]
            for j, y_j in y.items():
                if j in row:
                    add_scaled(result, row[j], x_i * y_j)
        return result

    def ad_basis(self, i):
        # type: (int) -> ExactMatrix
        """Matrix of ad(e_i), column j holding the coordinates of [e_i, e_j]"""
        if i not in self.__ad:
            rows = {}  # type: Dict[int, SparseVector]
            for j, value in self._table()[i].items():
                for k, coeff in value.items():
                    rows.setdefault(k, {})[j] = coeff
            self.__ad[i] = from_sparse_rows([rows.get(k, {}) for k in range(self.__dim)], self.__dim)
        return self.__ad[i]

    def ad(self, x):
        # type: (VectorLike) -> ExactMatrix
        """Matrix of ad(x)"""
        rows = {}  # type: Dict[int, SparseVector]
        for i, x_i in sparse(x).items():
            for r, row in self.ad_basis(i).to_dod().items():
                add_scaled(rows.setdefault(r, {}), row, x_i)
        return from_sparse_rows([rows.get(k, {}) for k in range(self.__dim)], self.__dim)

    def __repr__(self):
        return 'LieAlgebra(dim={}, brackets={})'.format(self.__dim, len(self.__brackets))


def from_matrix_basis(matrices, labels=None):
    # type: (Sequence[ExactMatrix], Optional[Sequence]) -> LieAlgebra
    """The Lie algebra spanned by some matrices, with commutators expressed in that basis

    :raises ValueError: if the matrices are linearly dependent or their span is not closed under commutators
    """
    matrices = [as_matrix(m) for m in matrices]
    dim = len(matrices)
    if not dim:
        return LieAlgebra(0, {}, labels)
    size = matrices[0].shape[0] * matrices[0].shape[1]
    span = Span([flatten(m) for m in matrices], size)
    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            value = matrices[i].matmul(matrices[j]).sub(matrices[j].matmul(matrices[i]))
            coords = span.coordinates(flatten(value))
            if coords is None:
                raise ValueError("commutator of basis elements {} and {} leaves the span".format(i, j))
            brackets[i, j] = sparse(coords)
    return LieAlgebra(dim, brackets, labels)


class Sl2Triple(object):
    """Elements e, h, f of a Lie algebra, meant to satisfy [e, f] = h, [h, e] = 2e and [h, f] = -2f"""

    def __init__(self, e, h, f):
        # type: (VectorLike, VectorLike, VectorLike) -> None
        self.e = sparse(e)
        self.h = sparse(h)
        self.f = sparse(f)

    def check(self, algebra):
        # type: (LieAlgebra) -> Report
        """Checks the three defining relations inside an algebra"""
        report = Report('sl2-triple')
        two = QQ(2)
        report.add('e_f', algebra.bracket(self.e, self.f) == self.h)
        report.add('h_e', algebra.bracket(self.h, self.e) == {k: two * v for k, v in self.e.items()})
        report.add('h_f', algebra.bracket(self.h, self.f) == {k: -two * v for k, v in self.f.items()})
        return report

    def is_triple(self, algebra):
        # type: (LieAlgebra) -> bool
        return self.check(algebra).passed

    def __repr__(self):
        return 'Sl2Triple(e={}, h={}, f={})'.format(self.e, self.h, self.f)


class JacobiReport(Report):
    """Outcome of :func:`verify_jacobi`"""

    def __init__(self, mode, triples_checked, violations, first_violation=None):
        # type: (str, int, int, Optional[Tuple[str, str, str]]) -> None
        super().__init__('Jacobi identity ({})'.format(mode))
        self.mode = mode
        self.triples_checked = triples_checked
        self.violations = violations
        self.first_violation = first_violation
        self.add('jacobi', violations == 0, list(first_violation) if first_violation else None,
                 '{} of {} triples violate'.format(violations, triples_checked) if violations else '')

    def to_dict(self):
        result = super().to_dict()
        result.update(mode=self.mode, triples_checked=self.triples_checked, violations=self.violations)
        return result


def _jacobiator(table, i, j, k):
    # type: (List[Dict[int, SparseVector]], int, int, int) -> SparseVector
    """[[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]"""
    result = {}  # type: SparseVector
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for m, coeff in table[a].get(b, {}).items():
            inner = table[m].get(c)
            if inner:
                add_scaled(result, inner, coeff)
    return result


def verify_jacobi(algebra, mode=None, samples=JACOBI_SAMPLES, seed=DEFAULT_SEED):
    # type: (LieAlgebra, Optional[str], int, int) -> JacobiReport
    """Checks the Jacobi identity on basis triples

    :param algebra: the algebra to check
    :param mode: ``'full'`` checks every triple i < j < k, ``'sampled'`` checks random triples of distinct basis
        elements; by default full for dimensions up to 80 and sampled above
    :param samples: number of triples in sampled mode
    :param seed: seed of the random generator in sampled mode
    :return: the report, with the labels of the first violating triple if there is one
    """
    dim = algebra.dim
    if mode is None:
        mode = 'full' if dim <= FULL_JACOBI_MAX_DIM else 'sampled'
    if mode == 'full':
        triples = ((i, j, k) for i in range(dim) for j in range(i + 1, dim) for k in range(j + 1, dim))
    elif mode == 'sampled':
        triples = _sampled_triples(dim, samples, seed)
    else:
        raise ValueError("unknown Jacobi mode {!r}".format(mode))
    table = algebra._table()
    checked = violations = 0
    first = None
    for i, j, k in triples:
        checked += 1
        if _jacobiator(table, i, j, k):
            violations += 1
            if first is None:
                first = (algebra.labels[i], algebra.labels[j], algebra.labels[k])
    logger.debug('Jacobi (%s): %d triples checked, %d violations', mode, checked, violations)
    return JacobiReport(mode, checked, violations, first)


def _sampled_triples(dim, samples, seed):
    if dim < 3:
        return
    rng = default_rng(seed)
    for _ in range(samples):
        yield tuple(sorted(int(i) for i in rng.choice(dim, size=3, replace=False)))


def killing_form(algebra):
    # type: (LieAlgebra) -> ExactMatrix
    """K(x, y) = tr(ad x · ad y) on basis elements"""
    dim = algebra.dim
    ads = [algebra.ad_basis(i) for i in range(dim)]
    rows = [{} for _ in range(dim)]  # type: List[SparseVector]
    for i in range(dim):
        for j in range(i, dim):
            value = trace_product(ads[i], ads[j])
            if value:
                rows[i][j] = value
                rows[j][i] = value
    return from_sparse_rows(rows, dim)


def form_value(form, x, y):
    # type: (ExactMatrix, VectorLike, VectorLike) -> Scalar
    """xᵀ·B·y for a bilinear form matrix B"""
    y = sparse(y)
    total = QQ.zero
    dod = form.to_dod()
    for i, x_i in sparse(x).items():
        for j, value in dod.get(i, {}).items():
            if j in y:
                total += x_i * value * y[j]
    return total


def _gradings(algebra):
    # type: (LieAlgebra) -> List[List[Scalar]]
    """Eigenvalue lists of derivations that are diagonal in the basis

    These are the grade of TKK labels, when the brackets respect it, and ad(e_i) for every basis element whose adjoint
    matrix is diagonal.
    """
    gradings = []
    labels = algebra.basis_labels()
    if labels is not None:
        grades = [QQ(label.grade) for label in labels]
        if all(grades[k] == grades[i] + grades[j] for (i, j), terms in algebra.brackets.items() for k, _ in terms):
            gradings.append(grades)
    for i in range(algebra.dim):
        dod = algebra.ad_basis(i).to_dod()
        if dod and all(set(row) == {r} for r, row in dod.items()):
            gradings.append([dod.get(j, {}).get(j, QQ.zero) for j in range(algebra.dim)])
    return gradings


def commutant_dimension(algebra):
    # type: (LieAlgebra) -> int
    """Dimension of {T : T·ad(x) = ad(x)·T for all x}

    T has to preserve the joint eigenspaces of every diagonal derivation found by :func:`_gradings`, so only the
    entries of T inside those blocks are unknowns. A grading read off the labels is a derivation, hence inner, only
    for semisimple algebras; :func:`is_simple` checks the Killing form first. Generators of nonzero weight go first;
    equations are reduced as they come in and the computation stops as soon as only the scalars are left.
    """
    dim = algebra.dim
    gradings = _gradings(algebra)
    weights = [tuple(grading[j] for grading in gradings) for j in range(dim)]
    blocks = {}  # type: Dict[tuple, List[int]]
    for j, weight in enumerate(weights):
        blocks.setdefault(weight, []).append(j)
    unknowns = {}  # type: Dict[Tuple[int, int], int]
    for members in blocks.values():
        for p in members:
            for r in members:
                unknowns[p, r] = len(unknowns)
    size = len(unknowns)
    if not size:
        return 0
    zero_weight = tuple(QQ.zero for _ in gradings)
    order = [i for i in range(dim) if weights[i] != zero_weight] + [i for i in range(dim) if weights[i] == zero_weight]
    reduced = []  # type: List[SparseVector]
    for generator in order:
        ad = algebra.ad_basis(generator).to_dod()
        equations = {}  # type: Dict[Tuple[int, int], SparseVector]
        for r, row in ad.items():
            for q, value in row.items():
                # (T·ad)[p][q] gets T[p][r]·ad[r][q]
                for p in blocks[weights[r]]:
                    add_scaled(equations.setdefault((p, q), {}), {unknowns[p, r]: value})
                # (ad·T)[r][s] gets ad[r][q]·T[q][s]
                for s in blocks[weights[q]]:
                    add_scaled(equations.setdefault((r, s), {}), {unknowns[q, s]: -value})
        new_rows = [row for row in equations.values() if row]
        if new_rows:
            reduced = [sparse(v) for v in row_basis(reduced + new_rows, size)]
        if len(reduced) == size - 1:
            break
    return size - len(reduced)


def is_simple(algebra):
    # type: (LieAlgebra) -> bool
    """Whether the algebra is simple: nondegenerate Killing form and a one dimensional commutant of the adjoint action"""
    if algebra.dim == 0:
        return False
    killing = killing_form(algebra)
    if rank(killing) != algebra.dim:
        logger.debug('Killing form is degenerate')
        return False
    dimension = commutant_dimension(algebra)
    logger.debug('commutant of the adjoint action has dimension %d', dimension)
    return dimension == 1


def killing_value(algebra, x, y):
    # type: (LieAlgebra, VectorLike, VectorLike) -> Scalar
    """K(x, y) for two elements, without forming the whole Killing form"""
    return trace_product(algebra.ad(x), algebra.ad(y))
