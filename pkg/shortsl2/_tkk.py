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
"""Building the Lie algebra g = g0 ⊕ (Q²⊗J1) ⊕ (sl2⊗J2) of a symplectic Lie-Jordan structure

The basis of the built algebra is, in this order: the g0 basis, e₁⊗a_i, e₋₁⊗a_i, e⊗A_k, h⊗A_k and f⊗A_k, with
a_i the standard basis of J1 and A_k the J2 basis. The brackets are

* [D, u⊗a] = u⊗Da and [D, X⊗A] = X⊗[D, A]
* [u⊗a, v⊗b] = S(u, v)⊗φ(a, b) + ⟨u, v⟩δ(a, b)
* [X⊗A, v⊗b] = Xv⊗Ab
* [X⊗A, Y⊗B] = [X, Y]⊗(A∘B) + ½(X, Y)[A, B]
"""

import logging
from typing import Dict, List, Tuple

from sympy import QQ

from ._constants import SparseVector
from ._errors import InvalidStructure, NotBuilt
from ._foundation import ExactMatrix, add_scaled, column, commutator, from_sparse_rows, rank, scaled, sparse
from ._lie import SL2_NAMES, BasisLabel, LieAlgebra, Sl2Triple, form_value, killing_form
from ._report import Report
from ._sl2kit import E_MINUS, E_PLUS, SL2_BASIS, act, s_map, skew2, sl2_coordinates, trace_form
from ._sympjordan import LieJordanStructure, delta, jordan_product, phi, validate

logger = logging.getLogger(__name__)

_WEIGHT_VECTORS = {1: E_PLUS, -1: E_MINUS}
_SL2 = dict(SL2_BASIS)


class TkkLayout(object):
    """Positions of the basis elements of the built algebra"""

    def __init__(self, g0_dim, j1_dim, j2_dim):
        # type: (int, int, int) -> None
        self.g0_dim = g0_dim
        self.j1_dim = j1_dim
        self.j2_dim = j2_dim

    @classmethod
    def of(cls, structure):
        # type: (LieJordanStructure) -> TkkLayout
        return cls(len(structure.g0_basis), structure.dim, len(structure.j2_basis))

    @property
    def dim(self):
        # type: () -> int
        return self.g0_dim + 2 * self.j1_dim + 3 * self.j2_dim

    def g0(self, index):
        # type: (int) -> int
        return index

    def v1(self, weight, index):
        # type: (int, int) -> int
        return self.g0_dim + (0 if weight == 1 else self.j1_dim) + index

    def v2(self, name, index):
        # type: (str, int) -> int
        return self.g0_dim + 2 * self.j1_dim + SL2_NAMES.index(name) * self.j2_dim + index

    def position(self, label):
        # type: (BasisLabel) -> int
        if label.kind == 'g0':
            return self.g0(label.index)
        if label.kind == 'v1':
            return self.v1(label.tag, label.index)
        return self.v2(label.tag, label.index)

    def labels(self):
        # type: () -> List[BasisLabel]
        result = [BasisLabel.g0(d) for d in range(self.g0_dim)]
        result.extend(BasisLabel.v1(weight, a) for weight in (1, -1) for a in range(self.j1_dim))
        result.extend(BasisLabel.v2(name, k) for name in SL2_NAMES for k in range(self.j2_dim))
        return result

    @classmethod
    def from_labels(cls, labels):
        # type: (List[BasisLabel]) -> TkkLayout
        """The layout the labels of a built algebra describe

        :raises NotBuilt: if the labels are not exactly the ones :func:`build` produces
        """
        counts = {'g0': 0, 'v1': 0, 'v2': 0}
        for label in labels:
            counts[label.kind] += 1
        layout = cls(counts['g0'], counts['v1'] // 2, counts['v2'] // 3)
        if [str(label) for label in layout.labels()] != [str(label) for label in labels]:
            raise NotBuilt("labels are not in the order of a built algebra")
        return layout


def _add_to(target, positions, values, scale=QQ.one):
    # type: (SparseVector, callable, SparseVector, object) -> None
    """target += scale * Σ values[i] e_positions(i)"""
    add_scaled(target, {positions(i): value for i, value in values.items()}, scale)


def _v1_v1(structure, layout, first, second):
    # type: (LieJordanStructure, TkkLayout, Tuple[int, int], Tuple[int, int]) -> SparseVector
    (u, a), (v, b) = first, second
    result = {}  # type: SparseVector
    phi_ab = sparse(phi({a: QQ.one}, {b: QQ.one}, structure))
    s_coords = sl2_coordinates(s_map(_WEIGHT_VECTORS[u], _WEIGHT_VECTORS[v]))
    for name, coeff in zip(SL2_NAMES, s_coords):
        if coeff:
            _add_to(result, lambda k: layout.v2(name, k), phi_ab, coeff)
    pairing = skew2(_WEIGHT_VECTORS[u], _WEIGHT_VECTORS[v])
    if pairing:
        _add_to(result, layout.g0, sparse(delta({a: QQ.one}, {b: QQ.one}, structure)), pairing)
    return result


def _v1_v2(structure, layout, first, second):
    # type: (LieJordanStructure, TkkLayout, Tuple[int, int], Tuple[str, int]) -> SparseVector
    """[u⊗a, X⊗A] = -(Xu)⊗(Aa)"""
    (u, a), (name, k) = first, second
    result = {}  # type: SparseVector
    moved = act(_SL2[name], _WEIGHT_VECTORS[u])
    image = column(structure.j2_basis[k], a)
    for weight, coeff in zip((1, -1), moved):
        if coeff:
            _add_to(result, lambda r: layout.v1(weight, r), image, -coeff)
    return result


def build(structure, check=True):
    # type: (LieJordanStructure, bool) -> LieAlgebra
    """Builds the Lie algebra of a symplectic Lie-Jordan structure

    :param structure: the structure
    :param check: validate the structure first
    :return: an algebra of dimension |g0| + 2·dim J1 + 3·dim J2 with TKK labels
    :raises InvalidStructure: if the structure fails validation
    """
    if check:
        report = validate(structure)
        if not report.passed:
            raise InvalidStructure("structure fails validation: {}".format(
                ', '.join(str(failure) for failure in report.failures)))
    layout = TkkLayout.of(structure)
    g0, j2 = structure.g0_basis, structure.j2_basis
    m, n, p = layout.g0_dim, layout.j1_dim, layout.j2_dim
    space = structure.space
    brackets = {}  # type: Dict[Tuple[int, int], SparseVector]

    def store(i, j, value):
        if value:
            brackets[i, j] = value

    j2_brackets = {}  # type: Dict[Tuple[int, int], SparseVector]
    j2_products = {}  # type: Dict[Tuple[int, int], SparseVector]
    for k in range(p):
        for l in range(k, p):
            j2_brackets[k, l] = sparse(structure.g0_coordinates(commutator(j2[k], j2[l])))
            j2_products[k, l] = sparse(structure.j2_coordinates(jordan_product(j2[k], j2[l], space)))

    # g0 with everything
    for d in range(m):
        for e in range(d + 1, m):
            value = {}  # type: SparseVector
            _add_to(value, layout.g0, sparse(structure.g0_coordinates(commutator(g0[d], g0[e]))))
            store(layout.g0(d), layout.g0(e), value)
        for weight in (1, -1):
            for a in range(n):
                value = {}
                _add_to(value, lambda r: layout.v1(weight, r), column(g0[d], a))
                store(layout.g0(d), layout.v1(weight, a), value)
        for k in range(p):
            moved = sparse(structure.j2_coordinates(commutator(g0[d], j2[k])))
            for name in SL2_NAMES:
                value = {}
                _add_to(value, lambda l: layout.v2(name, l), moved)
                store(layout.g0(d), layout.v2(name, k), value)
    logger.debug('g0 brackets done')

    # Q²⊗J1 with itself and with sl2⊗J2
    v1_basis = [(weight, a) for weight in (1, -1) for a in range(n)]
    for position, first in enumerate(v1_basis):
        for second in v1_basis[position + 1:]:
            store(layout.v1(*first), layout.v1(*second), _v1_v1(structure, layout, first, second))
        for name in SL2_NAMES:
            for k in range(p):
                store(layout.v1(*first), layout.v2(name, k), _v1_v2(structure, layout, first, (name, k)))
    logger.debug('Q2 x J1 brackets done')

    # sl2⊗J2 with itself
    v2_basis = [(name, k) for name in SL2_NAMES for k in range(p)]
    for position, (x_name, k) in enumerate(v2_basis):
        for y_name, l in v2_basis[position + 1:]:
            x, y = _SL2[x_name], _SL2[y_name]
            key = (min(k, l), max(k, l))
            value = {}  # type: SparseVector
            for name, coeff in zip(SL2_NAMES, sl2_coordinates(commutator(x, y))):
                if coeff:
                    _add_to(value, lambda r: layout.v2(name, r), j2_products[key], coeff)
            pairing = trace_form(x, y)
            if pairing:
                sign = 1 if k <= l else -1
                _add_to(value, layout.g0, j2_brackets[key], pairing * QQ(sign, 2))
            store(layout.v2(x_name, k), layout.v2(y_name, l), value)
    logger.debug('built algebra of dimension %d with %d nonzero brackets', layout.dim, len(brackets))
    return LieAlgebra(layout.dim, brackets, layout.labels())


def _layout_of(algebra):
    # type: (LieAlgebra) -> TkkLayout
    labels = algebra.basis_labels()
    if labels is None:
        raise NotBuilt("algebra does not carry the labels of a built algebra")
    return TkkLayout.from_labels(labels)


def canonical_triple(algebra, structure):
    # type: (LieAlgebra, LieJordanStructure) -> Sl2Triple
    """The sl2-triple (e⊗𝕀, h⊗𝕀, f⊗𝕀) of an algebra built from the structure

    :raises NotBuilt: if the algebra does not carry the labels of a built algebra
    """
    layout = _layout_of(algebra)
    unit = sparse(structure.unit)
    elements = []
    for name in SL2_NAMES:
        elements.append({layout.v2(name, k): value for k, value in unit.items()})
    e, h, f = elements
    return Sl2Triple(e, h, f)


def invariant_form(algebra, structure):
    # type: (LieAlgebra, LieJordanStructure) -> ExactMatrix
    """λ·K, the multiple of the Killing form that induces the trace form tr(AB) on J2

    With the induced form (X⊗A, Y⊗B) = ½(X, Y)β(A, B), asking β(𝕀, 𝕀) = dim J1 fixes λ through
    λ·K(e⊗𝕀, f⊗𝕀) = dim J1 / 2.

    :raises NotBuilt: if the algebra does not carry the labels of a built algebra
    :raises InvalidStructure: if the Killing form vanishes on e⊗𝕀, f⊗𝕀
    """
    triple = canonical_triple(algebra, structure)
    killing = killing_form(algebra)
    value = form_value(killing, triple.e, triple.f)
    if not value:
        raise InvalidStructure("Killing form vanishes on e⊗1, f⊗1")
    return scaled(killing, QQ(structure.dim, 2) / value)


def subalgebra_report(algebra):
    # type: (LieAlgebra) -> Report
    """Checks the very short grading of a built algebra

    * even_subalgebra: h = g0 ⊕ sl2⊗J2 is closed under brackets
    * odd_brackets: [Q²⊗J1, Q²⊗J1] ⊆ h and [h, Q²⊗J1] ⊆ Q²⊗J1
    * faithful: ad restricted to Q²⊗J1 is injective on h
    * components_orthogonal: the Killing form vanishes between g0, Q²⊗J1 and sl2⊗J2

    :raises NotBuilt: if the algebra does not carry the labels of a built algebra
    """
    _layout_of(algebra)
    labels = algebra.basis_labels()
    odd = [label.kind == 'v1' for label in labels]
    report = Report('very short grading')
    bad_even = bad_odd = None
    for (i, j), terms in sorted(algebra.brackets.items()):
        parity = odd[i] != odd[j]
        for k, _ in terms:
            if odd[k] != parity:
                if not odd[i] and not odd[j]:
                    bad_even = bad_even or (algebra.labels[i], algebra.labels[j])
                else:
                    bad_odd = bad_odd or (algebra.labels[i], algebra.labels[j])
    report.add('even_subalgebra', bad_even is None, bad_even)
    report.add('odd_brackets', bad_odd is None, bad_odd)

    odd_positions = [i for i in range(algebra.dim) if odd[i]]
    even_positions = [i for i in range(algebra.dim) if not odd[i]]
    restricted = []
    for i in even_positions:
        dod = algebra.ad_basis(i).to_dod()
        row = {}
        for r_pos, r in enumerate(odd_positions):
            for c_pos, c in enumerate(odd_positions):
                value = dod.get(r, {}).get(c)
                if value:
                    row[r_pos * len(odd_positions) + c_pos] = value
        restricted.append(row)
    faithful = rank(from_sparse_rows(restricted, len(odd_positions) ** 2)) == len(even_positions)
    report.add('faithful', faithful)

    killing = killing_form(algebra).to_dod()
    witness = None
    for i, row in sorted(killing.items()):
        for j in sorted(row):
            if labels[i].kind != labels[j].kind:
                witness = (algebra.labels[i], algebra.labels[j])
                break
        if witness:
            break
    report.add('components_orthogonal', witness is None, witness)
    return report
