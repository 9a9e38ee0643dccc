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
"""Exact rational scalars and the linear algebra every other module is built on

Scalars are elements of :data:`sympy.QQ` (``gmpy2.mpq`` when gmpy2 is installed) and matrices are sparse
:class:`sympy.polys.matrices.DomainMatrix` instances over ``QQ``. Keeping every matrix in the sparse format means
they can always be added and multiplied together, and the structure constant tables used elsewhere stay cheap.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

from numpy.random import Generator
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ._constants import RANDOM_BOUND, Scalar, SparseVector, Vector
from ._errors import DegenerateForm, MalformedInput

ExactMatrix = DomainMatrix  #: Matrices are sympy DomainMatrix objects over QQ, sparse format

VectorLike = Union[Sequence, SparseVector]


def rational(value):
    # type: (Union[int, str, Fraction, Scalar]) -> Scalar
    """Converts ints, fractions and "p/q" strings to an exact rational

    :param value: the value to convert
    :return: the value as an element of QQ
    :raises MalformedInput: if a string is not of the form "p" or "p/q", or the denominator is zero
    """
    if isinstance(value, bool):
        raise MalformedInput("booleans are not rational numbers: {!r}".format(value))
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        parts = value.strip().split('/')
        try:
            if len(parts) == 1:
                return QQ(int(parts[0]))
            if len(parts) == 2 and int(parts[1]) != 0:
                return QQ(int(parts[0]), int(parts[1]))
        except ValueError:
            pass
        raise MalformedInput("cannot parse {!r} as a rational number".format(value))
    if QQ.of_type(value):
        return value
    raise MalformedInput("cannot convert {!r} to a rational number".format(value))


def format_rational(value):
    # type: (Scalar) -> str
    """Formats a rational as "p/q", or "p" when the denominator is one"""
    value = rational(value)
    if value.denominator == 1:
        return '{}'.format(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def sparse(vector):
    # type: (VectorLike) -> SparseVector
    """Returns a new index -> coefficient dict holding only the nonzero entries of a vector"""
    if isinstance(vector, dict):
        items = vector.items()
    else:
        items = enumerate(vector)
    result = {}
    for index, value in items:
        value = rational(value)
        if value:
            result[index] = value
    return result


def dense(vector, dim):
    # type: (VectorLike, int) -> Vector
    """Returns the vector as a list of length dim"""
    result = [QQ.zero] * dim
    for index, value in sparse(vector).items():
        result[index] = value
    return result


def add_scaled(target, source, scale=QQ.one):
    # type: (SparseVector, SparseVector, Scalar) -> SparseVector
    """Adds scale * source to target in place, dropping coefficients that cancel, and returns target"""
    if not scale:
        return target
    for index, value in source.items():
        total = target.get(index, QQ.zero) + scale * value
        if total:
            target[index] = total
        else:
            target.pop(index, None)
    return target


def combination(vectors, coefficients):
    # type: (Sequence[SparseVector], Iterable[Scalar]) -> SparseVector
    """Returns sum(c * v) over paired coefficients and sparse vectors"""
    result = {}  # type: SparseVector
    for vector, coefficient in zip(vectors, coefficients):
        add_scaled(result, vector, coefficient)
    return result


def matrix(rows, cols=None):
    # type: (Sequence[Sequence], Optional[int]) -> ExactMatrix
    """Builds a sparse exact matrix from a list of rows

    :param rows: rows of anything :func:`rational` accepts
    :param cols: column count, only needed when there are no rows
    """
    if cols is None:
        cols = len(rows[0]) if rows else 0
    dod = {}
    for r, row in enumerate(rows):
        if len(row) != cols:
            raise ValueError("row {} has {} entries, expected {}".format(r, len(row), cols))
        entries_ = sparse(row)
        if entries_:
            dod[r] = entries_
    return DomainMatrix.from_dod(dod, (len(rows), cols), QQ)


def from_sparse_rows(rows, cols):
    # type: (Sequence[SparseVector], int) -> ExactMatrix
    """Builds a sparse exact matrix whose rows are the given sparse vectors"""
    dod = {r: dict(row) for r, row in enumerate(rows) if row}
    return DomainMatrix.from_dod(dod, (len(rows), cols), QQ)


def from_columns(columns, rows):
    # type: (Sequence[VectorLike], int) -> ExactMatrix
    """Builds a sparse exact matrix from its columns"""
    dod = {}  # type: dict
    for c, column_ in enumerate(columns):
        for r, value in sparse(column_).items():
            dod.setdefault(r, {})[c] = value
    return DomainMatrix.from_dod(dod, (rows, len(columns)), QQ)


def as_matrix(value):
    # type: (Union[ExactMatrix, Sequence[Sequence]]) -> ExactMatrix
    """Accepts either an exact matrix or a list of rows"""
    if isinstance(value, DomainMatrix):
        if value.domain != QQ:
            value = value.convert_to(QQ)
        return value.to_sparse()
    return matrix(value)


def identity(dim):
    # type: (int) -> ExactMatrix
    return DomainMatrix.eye(dim, QQ)


def zero_matrix(rows, cols=None):
    # type: (int, Optional[int]) -> ExactMatrix
    return DomainMatrix.zeros((rows, rows if cols is None else cols), QQ)


def entries(value):
    # type: (ExactMatrix) -> List[Vector]
    """The matrix as a list of rows"""
    return as_matrix(value).to_list()


def column(value, index):
    # type: (ExactMatrix, int) -> SparseVector
    """A column of the matrix as a sparse vector"""
    return {r: row[index] for r, row in value.to_dod().items() if index in row}


def apply(value, vector):
    # type: (ExactMatrix, VectorLike) -> Vector
    """Returns M·v as a dense vector"""
    vector = sparse(vector)
    result = [QQ.zero] * value.shape[0]
    for r, row in value.to_dod().items():
        result[r] = sum((coeff * vector[c] for c, coeff in row.items() if c in vector), QQ.zero)
    return result


def trace(value):
    # type: (ExactMatrix) -> Scalar
    return sum((row[r] for r, row in value.to_dod().items() if r in row), QQ.zero)


def trace_product(first, second):
    # type: (ExactMatrix, ExactMatrix) -> Scalar
    """Returns tr(AB) without forming the product"""
    second_dod = second.to_dod()
    total = QQ.zero
    for i, row in first.to_dod().items():
        for k, value in row.items():
            partner = second_dod.get(k)
            if partner and i in partner:
                total += value * partner[i]
    return total


def commutator(first, second):
    # type: (ExactMatrix, ExactMatrix) -> ExactMatrix
    """Returns [A, B] = AB - BA"""
    return first.matmul(second).sub(second.matmul(first))


def scaled(value, scale):
    # type: (ExactMatrix, Scalar) -> ExactMatrix
    """Returns scale * M, scale being anything :func:`rational` accepts"""
    return value.scalarmul(rational(scale))


def linear_combination(matrices, coefficients, shape):
    # type: (Sequence[ExactMatrix], Iterable[Scalar], tuple) -> ExactMatrix
    """Returns sum(c * M) over paired coefficients and matrices, all of the given shape"""
    dod = {}  # type: dict
    for value, coefficient in zip(matrices, coefficients):
        coefficient = rational(coefficient)
        if not coefficient:
            continue
        for r, row in value.to_dod().items():
            target = dod.setdefault(r, {})
            add_scaled(target, row, coefficient)
    return DomainMatrix.from_dod({r: row for r, row in dod.items() if row}, shape, QQ)


def flatten(value):
    # type: (ExactMatrix) -> SparseVector
    """The entries of an n x m matrix as a sparse vector of length n*m, in row-major order"""
    cols = value.shape[1]
    return {r * cols + c: coeff for r, row in value.to_dod().items() for c, coeff in row.items()}


def _reduce(value):
    """Reduced row echelon form and pivots, coping with empty matrices"""
    if not value.shape[0] or not value.shape[1] or value.is_zero_matrix:
        return DomainMatrix.zeros(value.shape, QQ), ()
    return value.to_sparse().rref()


def rank(value):
    # type: (Union[ExactMatrix, Sequence[Sequence]]) -> int
    """Exact rank over the rationals"""
    return len(_reduce(as_matrix(value))[1])


def kernel(value):
    # type: (Union[ExactMatrix, Sequence[Sequence]]) -> List[Vector]
    """Basis of the null space of a matrix

    The basis is read off the reduced row echelon form: one vector per non-pivot column f, with coefficient 1 at f and
    zero at every other non-pivot column. The result is therefore deterministic and already reduced, which the
    isotypic extraction relies on to reproduce bases exactly.

    :param value: the matrix A
    :return: vectors v with A·v = 0, as many as cols(A) - rank(A)
    """
    value = as_matrix(value)
    cols = value.shape[1]
    reduced, pivots = _reduce(value)
    dod = reduced.to_dod()
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [QQ.zero] * cols
        vector[free] = QQ.one
        for r, pivot in enumerate(pivots):
            coeff = dod.get(r, {}).get(free)
            if coeff:
                vector[pivot] = -coeff
        basis.append(vector)
    return basis


def solve(value, rhs):
    # type: (Union[ExactMatrix, Sequence[Sequence]], VectorLike) -> Optional[Vector]
    """Solves A·x = b exactly

    Free variables are set to zero, so the solution returned is deterministic.

    :param value: the matrix A
    :param rhs: the vector b, one entry per row of A
    :return: a solution x, or None if the system is inconsistent
    """
    value = as_matrix(value)
    rows, cols = value.shape
    if isinstance(rhs, dict):
        rhs_entries = sparse(rhs)
        if any(index >= rows for index in rhs_entries):
            raise ValueError("right hand side has entries beyond row {}".format(rows))
    else:
        if len(rhs) != rows:
            raise ValueError("matrix has {} rows but right hand side has {} entries".format(rows, len(rhs)))
        rhs_entries = sparse(rhs)
    dod = value.to_dod()
    for r, coeff in rhs_entries.items():
        dod.setdefault(r, {})[cols] = coeff
    augmented = DomainMatrix.from_dod(dod, (rows, cols + 1), QQ)
    reduced, pivots = _reduce(augmented)
    if pivots and pivots[-1] == cols:
        return None
    reduced_dod = reduced.to_dod()
    solution = [QQ.zero] * cols
    for r, pivot in enumerate(pivots):
        solution[pivot] = reduced_dod.get(r, {}).get(cols, QQ.zero)
    return solution


def row_basis(vectors, dim):
    # type: (Sequence[VectorLike], int) -> List[Vector]
    """Reduced basis of the span of some vectors: the nonzero rows of their reduced row echelon form"""
    reduced, pivots = _reduce(from_sparse_rows([sparse(v) for v in vectors], dim))
    dod = reduced.to_dod()
    return [dense(dod.get(r, {}), dim) for r in range(len(pivots))]


def orthogonal_complement(form, subspace):
    # type: (Union[ExactMatrix, Sequence[Sequence]], Sequence[VectorLike]) -> List[Vector]
    """Basis of {v : form(v, s) = 0 for all s in subspace}

    :param form: square matrix F of the bilinear form, form(v, s) = vᵀ·F·s
    :param subspace: vectors spanning the subspace
    :raises DegenerateForm: if the form is singular on the ambient space
    """
    form = as_matrix(form)
    dim = form.shape[0]
    if form.shape != (dim, dim):
        raise ValueError("form must be square, got shape {}".format(form.shape))
    if rank(form) != dim:
        raise DegenerateForm("form of rank {} is singular on the {}-dimensional space".format(rank(form), dim))
    equations = [sparse(apply(form, vector)) for vector in subspace]
    return kernel(from_sparse_rows(equations, dim))


def gram_matrix(elements, form):
    """Matrix of form(x_i, x_j) over a list of elements"""
    return matrix([[form(x, y) for y in elements] for x in elements], len(elements))


class Span:
    """Coordinates of vectors with respect to a fixed basis of a subspace

    The reduction of the basis is done once, with an identity block alongside so the coordinates with respect to the
    original basis vectors can be recovered from the pivot entries of any vector in the span.
    """

    def __init__(self, basis, dim):
        # type: (Sequence[VectorLike], int) -> None
        """
        :param basis: linearly independent vectors
        :param dim: dimension of the ambient space
        :raises ValueError: if the vectors are linearly dependent
        """
        self.__basis = [sparse(vector) for vector in basis]
        self.__dim = dim
        size = len(self.__basis)
        dod = {}
        for r, vector in enumerate(self.__basis):
            row = dict(vector)
            row[dim + r] = QQ.one
            dod[r] = row
        reduced, pivots = _reduce(DomainMatrix.from_dod(dod, (size, dim + size), QQ))
        if any(pivot >= dim for pivot in pivots):
            raise ValueError("basis vectors are linearly dependent")
        reduced_dod = reduced.to_dod()
        self.__pivots = pivots
        self.__transform = [
            {c - dim: value for c, value in reduced_dod.get(r, {}).items() if c >= dim} for r in range(size)
        ]

    @property
    def basis(self):
        # type: () -> List[SparseVector]
        return list(self.__basis)

    @property
    def dimension(self):
        # type: () -> int
        return len(self.__basis)

    def coordinates(self, vector):
        # type: (VectorLike) -> Optional[Vector]
        """Coordinates of a vector in the basis, or None if the vector is outside the span"""
        vector = sparse(vector)
        coords = {}  # type: SparseVector
        for pivot, transform in zip(self.__pivots, self.__transform):
            if pivot in vector:
                add_scaled(coords, transform, vector[pivot])
        if combination(self.__basis, dense(coords, len(self.__basis))) != vector:
            return None
        return dense(coords, len(self.__basis))

    def __contains__(self, vector):
        return self.coordinates(vector) is not None


def random_rational(rng, bound=RANDOM_BOUND):
    # type: (Generator, int) -> Scalar
    """A random rational with numerator in [-bound, bound] and denominator in [1, bound]"""
    return QQ(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))


def random_vector(rng, dim, bound=RANDOM_BOUND):
    # type: (Generator, int, int) -> Vector
    return [random_rational(rng, bound) for _ in range(dim)]


def random_integer_vector(rng, dim, bound=RANDOM_BOUND):
    # type: (Generator, int, int) -> Vector
    """Random integer coefficients in [-bound, bound], as rationals"""
    return [QQ(int(value)) for value in rng.integers(-bound, bound + 1, size=dim)]


def invariant_operators(form, sign=1):
    # type: (Union[ExactMatrix, Sequence[Sequence]], int) -> List[ExactMatrix]
    """Basis of {M : Mᵀ·form + sign·form·M = 0}

    With a skew form, sign 1 gives the Lie algebra of the form and sign -1 the operators that are symmetric with
    respect to it. The basis is the :func:`kernel` basis of the defining equations over the entries of M in
    row-major order.
    """
    form = as_matrix(form)
    dim = form.shape[0]
    form_dod = form.to_dod()
    equations = []
    for p in range(dim):
        for q in range(dim):
            row = {}  # type: SparseVector
            # (MᵀJ)[p][q] = sum_r M[r][p] J[r][q]
            for r, form_row in form_dod.items():
                if q in form_row:
                    add_scaled(row, {r * dim + p: form_row[q]})
            # (JM)[p][q] = sum_r J[p][r] M[r][q]
            for r, value in form_dod.get(p, {}).items():
                add_scaled(row, {r * dim + q: value}, QQ(sign))
            if row:
                equations.append(row)
    solutions = kernel(from_sparse_rows(equations, dim * dim))
    return [from_sparse_rows([sparse(vector[r * dim:(r + 1) * dim]) for r in range(dim)], dim)
            for vector in solutions]
