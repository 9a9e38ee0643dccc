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
"""The two small sl2-modules everything is tensored with: V1 = Q² and V2 = sl2

Fixed conventions: e = [[0, 1], [0, 0]], f = [[0, 0], [1, 0]], h = diag(1, -1), e₁ = (1, 0), e₋₁ = (0, 1),
⟨u, v⟩ = det(u, v), (X, Y) = tr(XY) and S(u, v)w = ⟨w, u⟩v + ⟨w, v⟩u. With these S(e₁, e₋₁) = h.
"""

import itertools
from typing import Sequence, Tuple

from numpy.random import default_rng
from sympy import QQ

from ._constants import DEFAULT_SEED, PROPERTY_SAMPLES, Scalar, Vector
from ._foundation import ExactMatrix, apply, commutator, identity, matrix, random_rational, rational, trace_product
from ._report import Report

Vec2 = Tuple[Scalar, Scalar]  #: Coordinates in the basis e₁, e₋₁

E = matrix([[0, 1], [0, 0]])
F = matrix([[0, 0], [1, 0]])
H = matrix([[1, 0], [0, -1]])
SL2_BASIS = (('e', E), ('h', H), ('f', F))  #: Order used for sl2 coordinates everywhere

E_PLUS = (QQ.one, QQ.zero)
E_MINUS = (QQ.zero, QQ.one)
V1_BASIS = (('+1', E_PLUS), ('-1', E_MINUS))


def vec2(u):
    # type: (Sequence) -> Vec2
    first, second = u
    return rational(first), rational(second)


def skew2(u, v):
    # type: (Sequence, Sequence) -> Scalar
    """⟨u, v⟩ = det(u, v), the SL2-invariant skew form on Q²"""
    u, v = vec2(u), vec2(v)
    return u[0] * v[1] - u[1] * v[0]


def trace_form(x, y):
    # type: (ExactMatrix, ExactMatrix) -> Scalar
    """(X, Y) = tr(XY)"""
    return trace_product(x, y)


def outer(u, v):
    # type: (Sequence, Sequence) -> ExactMatrix
    """The operator u⊗v*, acting as w -> ⟨w, v⟩u"""
    u, v = vec2(u), vec2(v)
    # ⟨e₁, v⟩ = v[1] and ⟨e₋₁, v⟩ = -v[0]
    return matrix([[u[0] * v[1], -u[0] * v[0]], [u[1] * v[1], -u[1] * v[0]]])


def s_map(u, v):
    # type: (Sequence, Sequence) -> ExactMatrix
    """S(u, v) = u⊗v* + v⊗u*, a symmetric map Q² x Q² -> sl2"""
    return outer(u, v).add(outer(v, u))


def act(x, u):
    # type: (ExactMatrix, Sequence) -> Vec2
    """X·u for X in sl2 and u in Q²"""
    first, second = apply(x, vec2(u))
    return first, second


def sl2_coordinates(x):
    # type: (ExactMatrix) -> Vector
    """Coordinates of a traceless 2x2 matrix in the basis (e, h, f)"""
    (a, b), (c, d) = x.to_list()
    if a + d:
        raise ValueError("matrix is not traceless: {}".format(x.to_list()))
    return [b, a, c]


def sl2_matrix(coordinates):
    # type: (Sequence) -> ExactMatrix
    e, h, f = (rational(value) for value in coordinates)
    return matrix([[h, e], [f, -h]])


def _random_vec2(rng):
    return random_rational(rng), random_rational(rng)


def _random_sl2(rng):
    return sl2_matrix([random_rational(rng) for _ in range(3)])


def _identity_failures(u, v, w, x, y):
    """Names of the identities that fail for one choice of inputs"""
    failures = []
    if skew2(act(x, u), v) != -skew2(u, act(x, v)):
        failures.append('a')
    if trace_form(x, s_map(u, v)) != 2 * skew2(act(x, u), v):
        failures.append('c')
    cyclic = [skew2(u, v) * w[i] + skew2(v, w) * u[i] + skew2(w, u) * v[i] for i in range(2)]
    if any(cyclic):
        failures.append('d')
    if outer(u, v).sub(outer(v, u)) != identity(2).scalarmul(skew2(u, v)):
        failures.append('e')
    if commutator(x, s_map(u, v)) != s_map(u, act(x, v)).add(x.scalarmul(skew2(u, v))).scalarmul(QQ(2)):
        failures.append('f')
    if s_map(act(x, u), v).sub(s_map(u, act(x, v))) != x.scalarmul(2 * skew2(u, v)):
        failures.append('g')
    anticommutator = x.matmul(y).add(y.matmul(x))
    if apply(anticommutator, w) != [trace_form(x, y) * value for value in w]:
        failures.append('anticommutator')
    return failures


IDENTITY_NAMES = ('a', 'c', 'd', 'e', 'f', 'g', 'anticommutator')


def identity_suite(samples=PROPERTY_SAMPLES, seed=DEFAULT_SEED):
    # type: (int, int) -> Report
    """Checks the sl2 identities on every combination of basis elements and on random rational inputs

    The identities, for u, v, w in Q² and X, Y in sl2:

    * a: ⟨Xu, v⟩ = -⟨u, Xv⟩
    * c: (X, S(u, v)) = 2⟨Xu, v⟩
    * d: ⟨u, v⟩w + ⟨v, w⟩u + ⟨w, u⟩v = 0
    * e: u⊗v* - v⊗u* = ⟨u, v⟩·id
    * f: [X, S(u, v)] = 2(S(u, Xv) + ⟨u, v⟩X)
    * g: S(Xu, v) - S(u, Xv) = 2⟨u, v⟩X
    * anticommutator: (XY + YX)w = (X, Y)w

    :param samples: number of random input tuples
    :param seed: seed of the random generator
    :return: one check per identity, the witness being the first failing input
    """
    first_failure = {}
    vectors = [vector for _, vector in V1_BASIS]
    operators = [op for _, op in SL2_BASIS]
    basis_inputs = itertools.product(vectors, vectors, vectors, operators, operators)
    rng = default_rng(seed)
    random_inputs = (
        (_random_vec2(rng), _random_vec2(rng), _random_vec2(rng), _random_sl2(rng), _random_sl2(rng))
        for _ in range(samples)
    )
    for inputs in itertools.chain(basis_inputs, random_inputs):
        for name in _identity_failures(*inputs):
            first_failure.setdefault(name, inputs)

    report = Report('sl2 identities')
    for name in IDENTITY_NAMES:
        witness = first_failure.get(name)
        if witness is not None:
            u, v, w, x, y = witness
            witness = {'u': [str(c) for c in u], 'v': [str(c) for c in v], 'w': [str(c) for c in w],
                       'X': [str(c) for c in sl2_coordinates(x)], 'Y': [str(c) for c in sl2_coordinates(y)]}
        report.add(name, name not in first_failure, witness)
    return report
