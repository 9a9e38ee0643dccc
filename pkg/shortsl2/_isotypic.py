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
"""The way back: from a Lie algebra with a short sl2-triple to its grading, its isotypic components and its
symplectic Lie-Jordan structure

With g^k the eigenspaces of ad(h), the components are g_0 (the invariants, inside g^0), g_1 = g^1 ⊕ g^-1 and
g_2 = g^2 ⊕ [g^2, f] ⊕ g^-2. The extracted J1 is g^1 with basis y_a, paired with z_a = [f, y_a] in g^-1.
"""

import logging
from typing import Dict, List, Tuple

from sympy import QQ

from ._constants import SparseVector, Vector
from ._errors import InvalidStructure, NonUnitalJ2, NotSemisimpleElement, NotShort, NotSimple
from ._foundation import (Span, VectorLike, add_scaled, dense, from_columns, from_sparse_rows, identity, kernel,
                          sparse, trace_product)
from ._lie import LieAlgebra, Sl2Triple, is_simple, killing_value
from ._sympjordan import LieJordanStructure, SymplecticSpace

logger = logging.getLogger(__name__)

GRADES = (-2, -1, 0, 1, 2)


class Grading(object):
    """Bases of the eigenspaces g^k of ad(h), k = -2, ..., 2"""

    def __init__(self, eigenspaces):
        # type: (Dict[int, List[Vector]]) -> None
        self.eigenspaces = {k: list(eigenspaces.get(k, [])) for k in GRADES}

    def basis(self, k):
        # type: (int) -> List[Vector]
        return self.eigenspaces[k]

    def dim(self, k):
        # type: (int) -> int
        return len(self.eigenspaces[k])

    @property
    def dims(self):
        # type: () -> Tuple[int, ...]
        """Dimensions of g^k for k = -2, ..., 2"""
        return tuple(self.dim(k) for k in GRADES)

    def __repr__(self):
        return 'Grading(dims={})'.format(self.dims)


def grade(algebra, h):
    # type: (LieAlgebra, VectorLike) -> Grading
    """Splits the algebra into eigenspaces of ad(h)

    :param algebra: the algebra
    :param h: coordinates of h
    :raises NotShort: if ad(h) has a rational eigenvalue that is not an integer in -2, ..., 2
    :raises NotSemisimpleElement: if ad(h) is not diagonalisable over the rationals
    """
    dim = algebra.dim
    ad = algebra.ad(h)
    eigenspaces = {}
    for k in GRADES:
        eigenspaces[k] = kernel(ad.sub(identity(dim).scalarmul(QQ(k))))
    grading = Grading(eigenspaces)
    if sum(grading.dims) == dim:
        logger.debug('grading dimensions %s', grading.dims)
        return grading
    for factor, _ in ad.charpoly_factor_list():
        if len(factor) > 2:
            raise NotSemisimpleElement("ad(h) has eigenvalues outside the rationals")
        root = -QQ.convert(factor[1]) / QQ.convert(factor[0])
        if root.denominator != 1 or abs(root) > 2:
            raise NotShort("ad(h) has eigenvalue {}".format(root))
    raise NotSemisimpleElement("ad(h) is not diagonalisable, eigenspaces have dimensions {}".format(grading.dims))


class IsotypicData(object):
    """Multiplicities of the trivial, two and three dimensional sl2-modules, with bases of the components"""

    def __init__(self, grading, invariants):
        # type: (Grading, List[SparseVector]) -> None
        self.grading = grading
        self.m2 = grading.dim(2)
        self.m1 = grading.dim(1)
        self.m0 = grading.dim(0) - grading.dim(2)
        self.invariants = invariants  #: basis of g_0
        self.highest = [sparse(v) for v in grading.basis(2)]  #: basis of g^2, the highest vectors of g_2
        self.odd = [sparse(v) for v in grading.basis(1)] + [sparse(v) for v in grading.basis(-1)]  #: basis of g_1

    @property
    def multiplicities(self):
        # type: () -> Tuple[int, int, int]
        return self.m0, self.m1, self.m2

    def __repr__(self):
        return 'IsotypicData(m0={}, m1={}, m2={})'.format(self.m0, self.m1, self.m2)


def _in_basis(vectors, coordinates):
    # type: (List[Vector], VectorLike) -> SparseVector
    """Σ c_i v_i"""
    result = {}  # type: SparseVector
    for vector, coeff in zip(vectors, dense(coordinates, len(vectors))):
        add_scaled(result, sparse(vector), coeff)
    return result


def decompose(algebra, triple):
    # type: (LieAlgebra, Sl2Triple) -> IsotypicData
    """Isotypic decomposition of the adjoint module under the triple

    :raises InvalidStructure: if the triple does not satisfy the sl2 relations
    :raises NotShort: if the grading is not short or its pieces do not fit together as an sl2-module
    """
    report = triple.check(algebra)
    if not report.passed:
        raise InvalidStructure("not an sl2-triple: {}".format(', '.join(c.name for c in report.failures)))
    grading = grade(algebra, triple.h)
    if grading.dim(1) != grading.dim(-1) or grading.dim(2) != grading.dim(-2):
        raise NotShort("grading dimensions {} are not symmetric".format(grading.dims))
    zero = grading.basis(0)
    equations = []
    for x in (triple.e, triple.f):
        images = [algebra.bracket(x, v) for v in zero]
        rows = sorted({r for image in images for r in image})
        equations.extend({c: images[c][r] for c in range(len(zero)) if r in images[c]} for r in rows)
    solutions = kernel(from_sparse_rows(equations, len(zero)))
    invariants = [_in_basis(zero, s) for s in solutions]
    data = IsotypicData(grading, invariants)
    if len(invariants) != data.m0:
        raise NotShort("invariants have dimension {} but the grading predicts {}".format(len(invariants), data.m0))
    logger.debug('isotypic multiplicities %s', data.multiplicities)
    return data


class Extraction(object):
    """An extracted structure and the images in the algebra of the basis of the algebra built from it

    ``embedding`` follows the basis order of the built algebra: g0 basis, e₁⊗a, e₋₁⊗a, e⊗A, h⊗A, f⊗A.
    """

    def __init__(self, structure, embedding, data):
        # type: (LieJordanStructure, List[SparseVector], IsotypicData) -> None
        self.structure = structure
        self.embedding = embedding
        self.data = data


def _coordinates_in(span, vector, what):
    coords = span.coordinates(vector)
    if coords is None:
        raise NotShort("bracket leaves {}".format(what))
    return coords


def extract(algebra, triple, check_simple=True):
    # type: (LieAlgebra, Sl2Triple, bool) -> Extraction
    """Extracts the symplectic Lie-Jordan structure of a simple algebra with a short sl2-triple

    J1 is g^1 with basis y_a from the grading and z_a = [f, y_a]. With the invariant form (,) = λK normalised by
    (e, f) = dim J1 / 2:

    * ⟨a, b⟩ = (y_a, z_b)
    * A_k acts by y_b-coordinates of [w_k, z_b], w_k running over the basis of g^2
    * D_i acts by y-coordinates of [D_i, y_a], D_i running over the invariants g_0
    * δ(a, b) is the g_0 part of [y_a, z_b] against the complement spanned by H_k = [w_k, f]
    * δ0 is the i0 part of δ

    :param algebra: a simple Lie algebra
    :param triple: a short sl2-triple in it
    :param check_simple: test simplicity first; catalog code that knows the answer skips it
    :raises NotSimple: if the algebra is not simple
    :raises NonUnitalJ2: if e does not act as the identity on J1
    """
    if check_simple and not is_simple(algebra):
        raise NotSimple("algebra is not simple")
    data = decompose(algebra, triple)
    dim = algebra.dim
    y = [sparse(v) for v in data.grading.basis(1)]
    z = [algebra.bracket(triple.f, v) for v in y]
    w = data.highest
    d_basis = data.invariants
    n = len(y)
    if not n:
        raise NotShort("g^1 is zero, there is no J1")
    normaliser = killing_value(algebra, triple.e, triple.f)
    if not normaliser:
        raise NotSimple("Killing form vanishes on e, f")
    scale = QQ(n, 2) / normaliser
    y_ads = [algebra.ad(v) for v in y]
    z_ads = [algebra.ad(v) for v in z]
    omega = [[scale * trace_product(y_ad, z_ad) for z_ad in z_ads] for y_ad in y_ads]
    space = SymplecticSpace(omega)

    y_span = Span(y, dim)

    j2 = [from_columns([_coordinates_in(y_span, algebra.bracket(w_k, z_b), 'g^1') for z_b in z], n) for w_k in w]
    g0 = [from_columns([_coordinates_in(y_span, algebra.bracket(d, y_a), 'g^1') for y_a in y], n) for d in d_basis]
    unit = _coordinates_in(Span(w, dim), triple.e, 'g^2')
    structure = LieJordanStructure(space, j2, g0, {}, unit)
    if structure.identity_element() != identity(n):
        raise NonUnitalJ2("e does not act as the identity on J1")

    h_basis = [algebra.bracket(w_k, triple.f) for w_k in w]
    zero_span = Span(list(d_basis) + h_basis, dim)
    split = structure.split()
    table = {}
    for a in range(n):
        for b in range(a, n):
            coords = _coordinates_in(zero_span, algebra.bracket(y[a], z[b]), 'g^0')
            i0_part, _ = split.decompose(coords[:len(d_basis)])
            if any(i0_part):
                table[a, b] = tuple(i0_part)
    structure = LieJordanStructure(space, j2, g0, table, unit)

    half = QQ(1, 2)
    f_basis = [{k: half * v for k, v in algebra.bracket(triple.f, h_k).items()} for h_k in h_basis]
    embedding = list(d_basis) + y + z + list(w) + h_basis + f_basis
    logger.debug('extracted structure with dim J1 = %d, dim J2 = %d, dim g0 = %d', n, len(j2), len(g0))
    return Extraction(structure, embedding, data)
