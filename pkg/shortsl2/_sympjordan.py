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
"""The symplectic space J1, the operator algebras sym(J1) and sp(J1), and symplectic Lie-Jordan structures

A structure is the quadruple (J1; J2; g0; δ0): a symplectic space, a Jordan algebra of symmetric operators on it that
contains the identity, a Lie algebra of skew operators normalising it, and a symmetric g0-equivariant map δ0 into the
part i0 of g0 that commutes with J2. From these come the maps

    φ(a, b) = π2 φ_m(a, b),    δ(a, b) = δ0(a, b) + πc δ_m(a, b),

and the structure is valid when F(a, b, c) = δ(a, b)c + φ(b, c)a + φ(a, c)b is totally symmetric.

Vectors of J1 are coordinate lists, operators are sparse exact matrices and elements of J2 and g0 are returned as
coordinates with respect to the bases the structure was built with.
"""

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from numpy.random import default_rng
from sympy import QQ

from ._constants import DEFAULT_SEED, PROPERTY_SAMPLES, Scalar, SparseVector, Vector
from ._errors import DegenerateForm, DegenerateRestriction, InvalidStructure, NotSymmetric
from ._foundation import (ExactMatrix, Span, VectorLike, add_scaled, apply, as_matrix, column, combination,
                          commutator, dense, flatten, from_sparse_rows, identity, invariant_operators,
                          linear_combination, matrix, orthogonal_complement, random_vector, rank, rational, row_basis,
                          sparse, trace_product)
from ._report import Report
from ._sl2kit import skew2

logger = logging.getLogger(__name__)

Delta0Table = Dict[Tuple[int, int], Tuple[Scalar, ...]]  #: (i, j) -> i0-coordinates of δ0(e_i, e_j)


def _dot(first, second):
    # type: (Sequence[Scalar], Sequence[Scalar]) -> Scalar
    return sum((x * y for x, y in zip(first, second) if x and y), QQ.zero)


def standard_symplectic_form(n):
    # type: (int) -> ExactMatrix
    """Ω = [[0, Ω_n], [-Ω_n, 0]] on a space of dimension 2n, Ω_n being the n x n matrix with ones on the antidiagonal"""
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][2 * n - 1 - i] = 1
        rows[n + i][n - 1 - i] = -1
    return matrix(rows, 2 * n)


class SymplecticSpace(object):
    """J1 together with its skew form ⟨a, b⟩ = aᵀΩb"""

    def __init__(self, omega):
        """
        :param omega: the Gram matrix Ω, as an exact matrix or a list of rows
        :raises InvalidStructure: if Ω is not square, of positive even size, antisymmetric and nondegenerate
        """
        omega = as_matrix(omega)
        problem = _symplectic_problem(omega)
        if problem:
            raise InvalidStructure(problem)
        self.__omega = omega
        self.__dim = omega.shape[0]

    @property
    def omega(self):
        # type: () -> ExactMatrix
        return self.__omega

    @property
    def dim(self):
        # type: () -> int
        return self.__dim

    def pairing(self, a, b):
        # type: (VectorLike, VectorLike) -> Scalar
        """⟨a, b⟩"""
        return _dot(dense(a, self.__dim), apply(self.__omega, b))

    def is_symmetric(self, operator):
        # type: (ExactMatrix) -> bool
        """Whether ⟨Aa, b⟩ = ⟨a, Ab⟩ for all a, b, i.e. AᵀΩ = ΩA"""
        operator = as_matrix(operator)
        return operator.transpose().matmul(self.__omega) == self.__omega.matmul(operator)

    def is_skew(self, operator):
        # type: (ExactMatrix) -> bool
        """Whether ⟨Da, b⟩ = -⟨a, Db⟩ for all a, b, i.e. DᵀΩ = -ΩD"""
        operator = as_matrix(operator)
        return operator.transpose().matmul(self.__omega) == -self.__omega.matmul(operator)

    def sym_basis(self):
        # type: () -> List[ExactMatrix]
        """A basis of sym(J1)"""
        return invariant_operators(self.__omega, -1)

    def sp_basis(self):
        # type: () -> List[ExactMatrix]
        """A basis of sp(J1)"""
        return invariant_operators(self.__omega, 1)

    def __repr__(self):
        return 'SymplecticSpace({!r})'.format(self.__omega.to_list())


def _symplectic_problem(omega):
    # type: (ExactMatrix) -> Optional[str]
    rows, cols = omega.shape
    if rows != cols:
        return "omega must be square, got shape {}".format(omega.shape)
    if rows == 0 or rows % 2:
        return "a symplectic space needs positive even dimension, got {}".format(rows)
    if omega.transpose() != -omega:
        return "omega is not antisymmetric"
    if rank(omega) != rows:
        return "omega is degenerate"
    return None


def rank_one(a, b, space):
    # type: (VectorLike, VectorLike, SymplecticSpace) -> ExactMatrix
    """R(a, b), the operator c -> ⟨c, a⟩b"""
    # ⟨c, a⟩ = cᵀ·(Ωa), so R(a, b) = b·(Ωa)ᵀ
    functional = sparse(apply(space.omega, a))
    rows = [{c: b_r * value for c, value in functional.items()} if b_r else {} for b_r in dense(b, space.dim)]
    return from_sparse_rows(rows, space.dim)


def phi_m(a, b, space):
    # type: (VectorLike, VectorLike, SymplecticSpace) -> ExactMatrix
    """φ_m(a, b) = ½(R(b, a) - R(a, b)), an element of sym(J1)"""
    return rank_one(b, a, space).sub(rank_one(a, b, space)).scalarmul(QQ(1, 2))


def delta_m(a, b, space):
    # type: (VectorLike, VectorLike, SymplecticSpace) -> ExactMatrix
    """δ_m(a, b) = ½(R(b, a) + R(a, b)), an element of sp(J1)"""
    return rank_one(b, a, space).add(rank_one(a, b, space)).scalarmul(QQ(1, 2))


def jordan_product(first, second, space):
    # type: (ExactMatrix, ExactMatrix, SymplecticSpace) -> ExactMatrix
    """A∘B = ½(AB + BA)

    :raises NotSymmetric: if either operator is not in sym(J1)
    """
    first, second = as_matrix(first), as_matrix(second)
    for name, operator in (('first', first), ('second', second)):
        if not space.is_symmetric(operator):
            raise NotSymmetric("{} operand of the Jordan product is not in sym(J1): {}".format(
                name, operator.to_list()))
    return _jordan(first, second)


def _jordan(first, second):
    return first.matmul(second).add(second.matmul(first)).scalarmul(QQ(1, 2))


class G0Split(object):
    """The decomposition g0 = i0 ⊕ [J2, J2], in g0-coordinates"""

    def __init__(self, i0, der, g0_dim):
        # type: (List[Vector], List[Vector], int) -> None
        self.i0 = i0
        self.der = der
        self.__span = Span(list(i0) + list(der), g0_dim)

    def decompose(self, coordinates):
        # type: (VectorLike) -> Tuple[Vector, Vector]
        """Splits g0-coordinates into (i0-coordinates, [J2, J2]-coordinates)"""
        coords = self.__span.coordinates(coordinates)
        if coords is None:
            raise ValueError("vector is not in g0: {}".format(coordinates))
        return coords[:len(self.i0)], coords[len(self.i0):]

    def from_i0(self, coordinates):
        # type: (VectorLike) -> SparseVector
        return combination([sparse(v) for v in self.i0], dense(coordinates, len(self.i0)))

    def from_der(self, coordinates):
        # type: (VectorLike) -> SparseVector
        return combination([sparse(v) for v in self.der], dense(coordinates, len(self.der)))


class LieJordanStructure(object):
    """The quadruple (J1; J2; g0; δ0)

    Instances are immutable. Construction only checks shapes and linear independence; whether the quadruple really is
    a symplectic Lie-Jordan structure is decided by :func:`validate`. Derived data (the split of g0, Gram inverses, the
    values of φ and δ on basis vectors) is computed on first use and cached.
    """

    def __init__(self, space, j2_basis, g0_basis, delta0, unit):
        # type: (SymplecticSpace, Sequence[ExactMatrix], Sequence[ExactMatrix], Mapping, Sequence) -> None
        """
        :param space: the symplectic space J1
        :param j2_basis: linearly independent symmetric operators spanning J2
        :param g0_basis: linearly independent skew operators spanning g0
        :param delta0: mapping (i, j) -> i0-coordinates of δ0(e_i, e_j), the i0 basis being the one
            :func:`split_g0` produces; missing pairs are zero
        :param unit: coordinates of the identity operator in ``j2_basis``
        :raises InvalidStructure: on mismatched sizes or linearly dependent bases
        """
        self.__space = space
        dim = space.dim
        self.__j2 = tuple(as_matrix(op) for op in j2_basis)
        self.__g0 = tuple(as_matrix(op) for op in g0_basis)
        for name, basis in (('J2', self.__j2), ('g0', self.__g0)):
            for index, op in enumerate(basis):
                if op.shape != (dim, dim):
                    raise InvalidStructure("{} basis element {} has shape {}, expected {}".format(
                        name, index, op.shape, (dim, dim)))
        if not self.__j2:
            raise InvalidStructure("J2 basis is empty")
        self.__unit = tuple(rational(value) for value in unit)
        if len(self.__unit) != len(self.__j2):
            raise InvalidStructure("unit has {} coordinates but J2 has dimension {}".format(
                len(self.__unit), len(self.__j2)))
        self.__delta0 = {}  # type: Delta0Table
        for key, value in delta0.items():
            i, j = key
            self.__delta0[int(i), int(j)] = tuple(rational(v) for v in value)
        try:
            self.__j2_span = Span([flatten(op) for op in self.__j2], dim * dim)
            self.__g0_span = Span([flatten(op) for op in self.__g0], dim * dim)
        except ValueError as error:
            raise InvalidStructure(str(error))

        self.__split = None  # type: Optional[G0Split]
        self.__j2_gram_inverse = None  # type: Optional[ExactMatrix]
        self.__der_gram_inverse = None  # type: Optional[ExactMatrix]
        self.__der_operators = None  # type: Optional[List[ExactMatrix]]
        self.__phi_values = {}  # type: Dict[Tuple[int, int], Vector]
        self.__delta_values = {}  # type: Dict[Tuple[int, int], Vector]

    @property
    def space(self):
        # type: () -> SymplecticSpace
        return self.__space

    @property
    def dim(self):
        # type: () -> int
        """Dimension of J1"""
        return self.__space.dim

    @property
    def j2_basis(self):
        # type: () -> Tuple[ExactMatrix, ...]
        return self.__j2

    @property
    def g0_basis(self):
        # type: () -> Tuple[ExactMatrix, ...]
        return self.__g0

    @property
    def unit(self):
        # type: () -> Tuple[Scalar, ...]
        return self.__unit

    @property
    def delta0(self):
        # type: () -> Delta0Table
        """A copy of the δ0 table as given"""
        return dict(self.__delta0)

    def j2_element(self, coordinates):
        # type: (VectorLike) -> ExactMatrix
        return linear_combination(self.__j2, dense(coordinates, len(self.__j2)), (self.dim, self.dim))

    def g0_element(self, coordinates):
        # type: (VectorLike) -> ExactMatrix
        return linear_combination(self.__g0, dense(coordinates, len(self.__g0)), (self.dim, self.dim))

    def j2_coordinates(self, operator):
        # type: (ExactMatrix) -> Optional[Vector]
        """Coordinates in the J2 basis, or None if the operator is not in J2"""
        return self.__j2_span.coordinates(flatten(as_matrix(operator)))

    def g0_coordinates(self, operator):
        # type: (ExactMatrix) -> Optional[Vector]
        """Coordinates in the g0 basis, or None if the operator is not in g0"""
        return self.__g0_span.coordinates(flatten(as_matrix(operator)))

    def identity_element(self):
        # type: () -> ExactMatrix
        """The operator the unit coordinates describe"""
        return self.j2_element(self.__unit)

    def split(self):
        # type: () -> G0Split
        """The split of g0, see :func:`split_g0`"""
        if self.__split is None:
            self.__split = _compute_split(self)
        return self.__split

    @property
    def i0_dim(self):
        # type: () -> int
        return len(self.split().i0)

    def delta0_value(self, i, j):
        # type: (int, int) -> Vector
        """i0-coordinates of δ0(e_i, e_j), read from the table in either order"""
        value = self.__delta0.get((i, j))
        if value is None:
            value = self.__delta0.get((j, i))
        if value is None:
            return [QQ.zero] * self.i0_dim
        return list(value)

    def delta0_coordinates(self, a, b):
        # type: (VectorLike, VectorLike) -> Vector
        """i0-coordinates of δ0(a, b)"""
        result = {}  # type: SparseVector
        b = sparse(b)
        for i, a_i in sparse(a).items():
            for j, b_j in b.items():
                add_scaled(result, sparse(self.delta0_value(i, j)), a_i * b_j)
        return dense(result, self.i0_dim)

    def _j2_gram_inverse(self):
        if self.__j2_gram_inverse is None:
            self.__j2_gram_inverse = _gram_inverse(self.__j2, 'J2')
        return self.__j2_gram_inverse

    def _der_operators(self):
        if self.__der_operators is None:
            self.__der_operators = [self.g0_element(v) for v in self.split().der]
        return self.__der_operators

    def _der_gram_inverse(self):
        if self.__der_gram_inverse is None:
            self.__der_gram_inverse = _gram_inverse(self._der_operators(), '[J2, J2]')
        return self.__der_gram_inverse

    def _phi_value(self, i, j):
        # type: (int, int) -> Vector
        """J2-coordinates of φ(e_i, e_j)"""
        if i > j:
            return [-value for value in self._phi_value(j, i)]
        key = (i, j)
        if key not in self.__phi_values:
            self.__phi_values[key] = project_pi2(phi_m({i: QQ.one}, {j: QQ.one}, self.__space), self)
        return self.__phi_values[key]

    def _delta_value(self, i, j):
        # type: (int, int) -> Vector
        """g0-coordinates of δ(e_i, e_j)"""
        if i > j:
            return self._delta_value(j, i)
        key = (i, j)
        if key not in self.__delta_values:
            split = self.split()
            value = split.from_i0(self.delta0_value(i, j))
            add_scaled(value, split.from_der(project_pic(delta_m({i: QQ.one}, {j: QQ.one}, self.__space), self)))
            self.__delta_values[key] = dense(value, len(self.__g0))
        return self.__delta_values[key]

    def __repr__(self):
        return 'LieJordanStructure(dim_j1={}, dim_j2={}, dim_g0={})'.format(
            self.dim, len(self.__j2), len(self.__g0))


def _gram_inverse(operators, name):
    # type: (Sequence[ExactMatrix], str) -> ExactMatrix
    size = len(operators)
    gram = matrix([[trace_product(x, y) for y in operators] for x in operators], size)
    if rank(gram) != size:
        raise DegenerateRestriction("trace form is degenerate on {} (rank {} < {})".format(name, rank(gram), size))
    if not size:
        return gram
    return gram.inv()


def _project(operator, operators, gram_inverse):
    rhs = [trace_product(operator, other) for other in operators]
    return apply(gram_inverse, rhs)


def project_pi2(operator, structure):
    # type: (ExactMatrix, LieJordanStructure) -> Vector
    """J2-coordinates of the trace-orthogonal projection of a symmetric operator onto J2

    :raises DegenerateRestriction: if the trace form is degenerate on J2
    """
    return _project(as_matrix(operator), structure.j2_basis, structure._j2_gram_inverse())


def project_pic(operator, structure):
    # type: (ExactMatrix, LieJordanStructure) -> Vector
    """[J2, J2]-coordinates of the trace-orthogonal projection of a skew operator onto [J2, J2]

    The coordinates refer to the basis of [J2, J2] from :func:`split_g0`.

    :raises DegenerateRestriction: if the trace form is degenerate on [J2, J2]
    """
    return _project(as_matrix(operator), structure._der_operators(), structure._der_gram_inverse())


def phi(a, b, structure):
    # type: (VectorLike, VectorLike, LieJordanStructure) -> Vector
    """J2-coordinates of φ(a, b) = π2 φ_m(a, b)"""
    result = {}  # type: SparseVector
    b = sparse(b)
    for i, a_i in sparse(a).items():
        for j, b_j in b.items():
            if i != j:
                add_scaled(result, sparse(structure._phi_value(i, j)), a_i * b_j)
    return dense(result, len(structure.j2_basis))


def delta(a, b, structure):
    # type: (VectorLike, VectorLike, LieJordanStructure) -> Vector
    """g0-coordinates of δ(a, b) = δ0(a, b) + πc δ_m(a, b)"""
    result = {}  # type: SparseVector
    b = sparse(b)
    for i, a_i in sparse(a).items():
        for j, b_j in b.items():
            add_scaled(result, sparse(structure._delta_value(i, j)), a_i * b_j)
    return dense(result, len(structure.g0_basis))


def phi_operator(a, b, structure):
    # type: (VectorLike, VectorLike, LieJordanStructure) -> ExactMatrix
    return structure.j2_element(phi(a, b, structure))


def delta_operator(a, b, structure):
    # type: (VectorLike, VectorLike, LieJordanStructure) -> ExactMatrix
    return structure.g0_element(delta(a, b, structure))


def compute_F(a, b, c, structure):
    # type: (VectorLike, VectorLike, VectorLike, LieJordanStructure) -> Vector
    """F(a, b, c) = δ(a, b)c + φ(b, c)a + φ(a, c)b"""
    result = sparse(apply(delta_operator(a, b, structure), c))
    add_scaled(result, sparse(apply(phi_operator(b, c, structure), a)))
    add_scaled(result, sparse(apply(phi_operator(a, c, structure), b)))
    return dense(result, structure.dim)


def curvature(a, b, c, d, structure):
    # type: (VectorLike, VectorLike, VectorLike, VectorLike, LieJordanStructure) -> Scalar
    """F̄(a, b, c, d) = ⟨F(a, b, c), d⟩"""
    return structure.space.pairing(compute_F(a, b, c, structure), d)


def _compute_split(structure):
    # type: (LieJordanStructure) -> G0Split
    g0_dim = len(structure.g0_basis)
    j2 = structure.j2_basis
    brackets = []
    for k in range(len(j2)):
        for l in range(k + 1, len(j2)):
            coords = structure.g0_coordinates(commutator(j2[k], j2[l]))
            if coords is None:
                raise InvalidStructure("[J2, J2] is not contained in g0: witness ({}, {})".format(k, l))
            brackets.append(coords)
    der = row_basis(brackets, g0_dim)
    gram = matrix([[trace_product(x, y) for y in structure.g0_basis] for x in structure.g0_basis], g0_dim)
    try:
        i0 = orthogonal_complement(gram, der)
    except DegenerateForm as error:
        raise DegenerateRestriction("trace form is degenerate on g0: {}".format(error))
    try:
        return G0Split(i0, der, g0_dim)
    except ValueError:
        raise DegenerateRestriction("trace form is degenerate on [J2, J2], i0 and [J2, J2] intersect")


def split_g0(structure):
    # type: (LieJordanStructure) -> Tuple[List[ExactMatrix], List[ExactMatrix]]
    """Splits g0 into i0, the trace-orthogonal complement of [J2, J2], and [J2, J2] itself

    [J2, J2] is spanned by the commutators of pairs of J2 basis elements, reduced to echelon form in g0-coordinates.

    :return: (i0 basis, [J2, J2] basis), as operators
    :raises DegenerateRestriction: if the trace form is degenerate on g0 or on [J2, J2]
    """
    split = structure.split()
    return [structure.g0_element(v) for v in split.i0], [structure.g0_element(v) for v in split.der]


def _multiplication_operators(structure):
    # type: (LieJordanStructure) -> Optional[List[ExactMatrix]]
    """Matrices of L_A on J2-coordinates for each basis element A, or None if J2 is not closed"""
    j2 = structure.j2_basis
    size = len(j2)
    result = []
    for first in j2:
        columns = []
        for second in j2:
            coords = structure.j2_coordinates(_jordan(first, second))
            if coords is None:
                return None
            columns.append(coords)
        result.append(matrix([[columns[c][r] for c in range(size)] for r in range(size)], size))
    return result


def commutant_dimension(operators, size):
    # type: (Sequence[ExactMatrix], int) -> int
    """Dimension of the space of size x size matrices T commuting with every given operator"""
    equations = []
    for op in operators:
        dod = op.to_dod()
        for p in range(size):
            for q in range(size):
                row = {}  # type: SparseVector
                # (TL)[p][q] = sum_r T[p][r] L[r][q]
                for r, op_row in dod.items():
                    if q in op_row:
                        add_scaled(row, {p * size + r: op_row[q]})
                # (LT)[p][q] = sum_r L[p][r] T[r][q]
                for r, value in dod.get(p, {}).items():
                    add_scaled(row, {r * size + q: -value})
                if row:
                    equations.append(row)
    return size * size - rank(from_sparse_rows(equations, size * size))


def jordan_is_simple(structure):
    # type: (LieJordanStructure) -> bool
    """Whether J2 is a simple Jordan algebra

    Decided as: the trace form on J2 is nondegenerate and only scalars commute with every multiplication operator L_A.
    """
    j2 = structure.j2_basis
    gram = matrix([[trace_product(x, y) for y in j2] for x in j2], len(j2))
    if rank(gram) != len(j2):
        return False
    operators = _multiplication_operators(structure)
    if operators is None:
        return False
    return commutant_dimension(operators, len(j2)) == 1


def _first_failure(pairs, predicate):
    for pair in pairs:
        if not predicate(*pair):
            return pair
    return None


def validate(structure):
    # type: (LieJordanStructure) -> Report
    """Checks every axiom of a symplectic Lie-Jordan structure, in order

    The checks are: Ω symplectic, J2 ⊆ sym(J1), g0 ⊆ sp(J1), the unit is the identity, J2 is closed under ∘, g0 is
    closed under brackets, [J2, J2] ⊆ g0, [g0, J2] ⊆ J2, the split of g0, the shape of the δ0 table, equivariance of
    δ0, δ0(Aa, b) = δ0(a, Ab), total symmetry of F and simplicity of J2. Once a structural check fails the remaining
    ones cannot be evaluated and are skipped, with a note saying so.

    Whether the δ0 table pairs with i0 as the trace form would predict is reported as a note, never a failure.

    :param structure: the structure to check
    :return: the report, a failure being data rather than an exception
    """
    report = Report('Lie-Jordan structure')
    space = structure.space
    dim = structure.dim
    j2, g0 = structure.j2_basis, structure.g0_basis
    j2_pairs = [(k, l) for k in range(len(j2)) for l in range(k, len(j2))]

    report.add('symplectic_form', _symplectic_problem(space.omega) is None)
    bad = [k for k, op in enumerate(j2) if not space.is_symmetric(op)]
    report.add('j2_symmetric', not bad, bad[0] if bad else None)
    bad = [d for d, op in enumerate(g0) if not space.is_skew(op)]
    report.add('g0_skew', not bad, bad[0] if bad else None)
    unit = structure.identity_element()
    report.add('unit', unit == identity(dim), None,
               '' if unit == identity(dim) else 'unit coordinates give {}'.format(unit.to_list()))
    witness = _first_failure(j2_pairs, lambda k, l: structure.j2_coordinates(_jordan(j2[k], j2[l])) is not None)
    report.add('jordan_closed', witness is None, witness)
    witness = _first_failure(
        ((d, e) for d in range(len(g0)) for e in range(d + 1, len(g0))),
        lambda d, e: structure.g0_coordinates(commutator(g0[d], g0[e])) is not None)
    report.add('g0_subalgebra', witness is None, witness)
    witness = _first_failure(j2_pairs, lambda k, l: structure.g0_coordinates(commutator(j2[k], j2[l])) is not None)
    report.add('derivations_in_g0', witness is None, witness)
    witness = _first_failure(((d, k) for d in range(len(g0)) for k in range(len(j2))),
                             lambda d, k: structure.j2_coordinates(commutator(g0[d], j2[k])) is not None)
    report.add('g0_preserves_j2', witness is None, witness)
    if not report.passed:
        report.notes.append('remaining checks skipped after a structural failure')
        return report

    try:
        split = structure.split()
    except DegenerateRestriction as error:
        report.add('g0_split', False, None, str(error))
        report.notes.append('remaining checks skipped after a structural failure')
        return report
    i0_ops = [structure.g0_element(v) for v in split.i0]
    witness = _first_failure(((s, k) for s in range(len(i0_ops)) for k in range(len(j2))),
                             lambda s, k: commutator(i0_ops[s], j2[k]).is_zero_matrix)
    report.add('g0_split', witness is None, witness)

    witness = _delta0_table_problem(structure)
    report.add('delta0_table', witness is None, witness)
    if not report.passed:
        report.notes.append('remaining checks skipped after a structural failure')
        return report

    witness = _delta0_equivariance_problem(structure, split, i0_ops)
    report.add('delta0_equivariant', witness is None, witness)
    witness = _delta0_j2_problem(structure)
    report.add('delta0_j2_symmetric', witness is None, witness)
    witness = _f_symmetry_problem(structure)
    report.add('F_symmetric', witness is None, witness)
    report.add('j2_simple', jordan_is_simple(structure))

    mismatch = _i0_pairing_mismatch(structure, i0_ops)
    if mismatch is not None:
        note = 'delta0 table is not the trace-form pairing on i0, first at (i0 element, i, j) = {}'.format(mismatch)
        logger.warning(note)
        report.notes.append(note)
    logger.debug('validated structure with J1 of dimension %d: %s', dim, 'pass' if report.passed else 'FAIL')
    return report


def _delta0_table_problem(structure):
    # type: (LieJordanStructure) -> Optional[Tuple[int, int]]
    dim, size = structure.dim, structure.i0_dim
    table = structure.delta0
    for (i, j), value in sorted(table.items()):
        if not (0 <= i < dim and 0 <= j < dim) or len(value) != size:
            return i, j
        other = table.get((j, i))
        if other is not None and other != value:
            return i, j
    return None


def _column_combination(structure, operator, fixed, position):
    """i0-coordinates of δ0(X e_fixed, ...) style sums: Σ_r X[r][position] δ0(e_r, e_fixed)"""
    result = {}  # type: SparseVector
    for r, value in column(operator, position).items():
        add_scaled(result, sparse(structure.delta0_value(r, fixed)), value)
    return result


def _delta0_equivariance_problem(structure, split, i0_ops):
    # type: (LieJordanStructure, G0Split, List[ExactMatrix]) -> Optional[Tuple[int, int, int]]
    """[D, δ0(e_i, e_j)] = δ0(De_i, e_j) + δ0(e_i, De_j), compared in i0-coordinates"""
    dim, size = structure.dim, structure.i0_dim
    for d, operator in enumerate(structure.g0_basis):
        # ad(D) restricted to i0, column s being [D, I_s]
        ad_columns = []
        for s, i0_op in enumerate(i0_ops):
            coords = structure.g0_coordinates(commutator(operator, i0_op))
            i0_part, der_part = split.decompose(coords)
            if any(der_part):
                return d, -1, s
            ad_columns.append(sparse(i0_part))
        for i in range(dim):
            for j in range(i, dim):
                lhs = combination(ad_columns, structure.delta0_value(i, j))
                rhs = _column_combination(structure, operator, j, i)
                add_scaled(rhs, _column_combination(structure, operator, i, j))
                if lhs != rhs:
                    return d, i, j
    return None


def _delta0_j2_problem(structure):
    # type: (LieJordanStructure) -> Optional[Tuple[int, int, int]]
    """δ0(Ae_i, e_j) = δ0(e_i, Ae_j)"""
    dim = structure.dim
    for k, operator in enumerate(structure.j2_basis):
        for i in range(dim):
            for j in range(dim):
                if _column_combination(structure, operator, j, i) != _column_combination(structure, operator, i, j):
                    return k, i, j
    return None


def _f_symmetry_problem(structure):
    # type: (LieJordanStructure) -> Optional[Tuple[int, int, int]]
    """F(e_i, e_j, e_k) = F(e_k, e_j, e_i); with the built-in symmetry in the first two slots this is total symmetry"""
    dim = structure.dim
    delta_ops = {}  # type: Dict[Tuple[int, int], ExactMatrix]
    phi_ops = {}  # type: Dict[Tuple[int, int], ExactMatrix]

    def delta_op(i, j):
        key = (min(i, j), max(i, j))
        if key not in delta_ops:
            delta_ops[key] = structure.g0_element(structure._delta_value(*key))
        return delta_ops[key]

    def phi_op(i, j):
        if (i, j) not in phi_ops:
            phi_ops[i, j] = structure.j2_element(structure._phi_value(i, j))
        return phi_ops[i, j]

    def value(i, j, k):
        result = column(delta_op(i, j), k)
        add_scaled(result, column(phi_op(j, k), i))
        add_scaled(result, column(phi_op(i, k), j))
        return result

    for i in range(dim):
        for j in range(dim):
            for k in range(i + 1, dim):
                if value(i, j, k) != value(k, j, i):
                    return i, j, k
    return None


def _i0_pairing_mismatch(structure, i0_ops):
    # type: (LieJordanStructure, List[ExactMatrix]) -> Optional[Tuple[int, int, int]]
    """First (s, i, j) with tr(I_s δ0(e_i, e_j)) != ⟨I_s e_i, e_j⟩"""
    if not i0_ops:
        return None
    dim = structure.dim
    space = structure.space
    for i in range(dim):
        for j in range(i, dim):
            value = linear_combination(i0_ops, structure.delta0_value(i, j), (dim, dim))
            for s, i0_op in enumerate(i0_ops):
                if trace_product(i0_op, value) != space.pairing(column(i0_op, i), {j: QQ.one}):
                    return s, i, j
    return None


# Property suite


def _random_element(rng, basis, dim):
    if not basis:
        return identity(dim).scalarmul(QQ.zero)
    return linear_combination(basis, random_vector(rng, len(basis)), (dim, dim))


PROPERTY_NAMES = ('prop1', 'prop2', 'prop3', 'prop4', 'iid1', 'id2', 'id3', 'newid', 'bianchi', 'curvature_symmetric',
                  'rank_one')


def property_suite(structure, samples=PROPERTY_SAMPLES, seed=DEFAULT_SEED):
    # type: (LieJordanStructure, int, int) -> Report
    """Checks the scalar product identities and the commutation identities on random inputs

    * prop1: (A, φ(a, b)) = ⟨Aa, b⟩ = ⟨a, Ab⟩
    * prop2: (D, δ(a, b)) = ⟨Da, b⟩ = -⟨a, Db⟩ for D in [J2, J2]
    * prop3: (D, [A, B]) = ([D, A], B) for D in g0
    * prop4: (A∘B, C) = (A, B∘C)
    * iid1: [A, φ(a, b)] = δ(Aa, b) - δ(a, Ab)
    * id2: [A, δ(a, b)] = φ(Aa, b) - φ(a, Ab)
    * id3: [D, δ(a, b)] = δ(Da, b) + δ(a, Db) for D in g0
    * newid: A∘φ(a, b) = ½(φ(Aa, b) + φ(a, Ab))
    * bianchi: ⟨u1, u2⟩⟨u3, u4⟩F̄(a, b, c, d) + ⟨u2, u3⟩⟨u1, u4⟩F̄(b, c, a, d)
      + ⟨u3, u1⟩⟨u2, u4⟩F̄(c, a, b, d) = 0
    * curvature_symmetric: F̄(a, b, c, d) = F̄(b, c, a, d) = F̄(c, a, b, d)
    * rank_one: R(b, a) = φ_m(a, b) + δ_m(a, b)

    :param structure: a validated structure
    :param samples: number of random inputs per identity
    :param seed: seed of the random generator
    """
    rng = default_rng(seed)
    space = structure.space
    dim = structure.dim
    j2 = list(structure.j2_basis)
    g0 = list(structure.g0_basis)
    der = [structure.g0_element(v) for v in structure.split().der]
    failures = {}  # type: Dict[str, int]

    def fail(name, sample):
        failures.setdefault(name, sample)

    for sample in range(samples):
        a, b, c, d = (random_vector(rng, dim) for _ in range(4))
        u = [random_vector(rng, 2) for _ in range(4)]
        first, second, third = (_random_element(rng, j2, dim) for _ in range(3))
        derivation = _random_element(rng, g0, dim)
        inner = _random_element(rng, der, dim)
        phi_ab = phi_operator(a, b, structure)
        delta_ab = delta_operator(a, b, structure)
        a1, b1 = apply(first, a), apply(first, b)

        if not (trace_product(first, phi_ab) == space.pairing(a1, b) == space.pairing(a, b1)):
            fail('prop1', sample)
        if not (trace_product(inner, delta_ab) == space.pairing(apply(inner, a), b)
                == -space.pairing(a, apply(inner, b))):
            fail('prop2', sample)
        if trace_product(derivation, commutator(first, second)) != trace_product(commutator(derivation, first),
                                                                                 second):
            fail('prop3', sample)
        if trace_product(_jordan(first, second), third) != trace_product(first, _jordan(second, third)):
            fail('prop4', sample)
        if commutator(first, phi_ab) != delta_operator(a1, b, structure).sub(delta_operator(a, b1, structure)):
            fail('iid1', sample)
        if commutator(first, delta_ab) != phi_operator(a1, b, structure).sub(phi_operator(a, b1, structure)):
            fail('id2', sample)
        if commutator(derivation, delta_ab) != delta_operator(apply(derivation, a), b, structure).add(
                delta_operator(a, apply(derivation, b), structure)):
            fail('id3', sample)
        if _jordan(first, phi_ab) != phi_operator(a1, b, structure).add(
                phi_operator(a, b1, structure)).scalarmul(QQ(1, 2)):
            fail('newid', sample)
        f_abc = curvature(a, b, c, d, structure)
        f_bca = curvature(b, c, a, d, structure)
        f_cab = curvature(c, a, b, d, structure)
        jacobi = (skew2(u[0], u[1]) * skew2(u[2], u[3]) * f_abc + skew2(u[1], u[2]) * skew2(u[0], u[3]) * f_bca
                  + skew2(u[2], u[0]) * skew2(u[1], u[3]) * f_cab)
        if jacobi:
            fail('bianchi', sample)
        if not f_abc == f_bca == f_cab:
            fail('curvature_symmetric', sample)
        if rank_one(b, a, space) != phi_m(a, b, space).add(delta_m(a, b, space)):
            fail('rank_one', sample)

    report = Report('Lie-Jordan identities')
    for name in PROPERTY_NAMES:
        report.add(name, name not in failures, None if name not in failures else {'sample': failures[name]})
    return report


# The maximal structure


def maximal_structure(n):
    # type: (int) -> LieJordanStructure
    """The structure with J1 of dimension 2n, J2 = sym(J1) and g0 = sp(J1)

    Here φ = φ_m and δ = δ_m, δ0 being the i0-component of δ_m. For n = 1, i0 is all of sp2; for larger n it is zero.

    :param n: half the dimension of J1, at least 1
    """
    if n < 1:
        raise InvalidStructure("the maximal structure needs n >= 1, got {}".format(n))
    space = SymplecticSpace(standard_symplectic_form(n))
    j2 = space.sym_basis()
    g0 = space.sp_basis()
    draft = LieJordanStructure(space, j2, g0, {}, _unit_coordinates(space, j2))
    split = draft.split()
    table = {}  # type: Delta0Table
    if split.i0:
        for i in range(space.dim):
            for j in range(i, space.dim):
                coords = draft.g0_coordinates(delta_m({i: QQ.one}, {j: QQ.one}, space))
                i0_part, _ = split.decompose(coords)
                if any(i0_part):
                    table[i, j] = tuple(i0_part)
    return LieJordanStructure(space, j2, g0, table, draft.unit)


def _unit_coordinates(space, j2_basis):
    # type: (SymplecticSpace, Sequence[ExactMatrix]) -> Vector
    coords = Span([flatten(op) for op in j2_basis], space.dim ** 2).coordinates(flatten(identity(space.dim)))
    if coords is None:
        raise InvalidStructure("the identity operator is not in J2")
    return coords
