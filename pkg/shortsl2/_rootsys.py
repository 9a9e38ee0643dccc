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
"""Root systems of the simple Lie algebras, their Chevalley bases and the classification of short sl2-structures

Simple roots are numbered so that the highest roots read

=====  ==========================
A_n    (1, 1, ..., 1)
B_n    (1, 2, ..., 2), α_n short
C_n    (2, ..., 2, 1), α_n long
D_n    (1, 2, ..., 2, 1, 1)
G_2    (3, 2), α_1 short
F_4    (2, 4, 3, 2), α_1 and α_2 short
E_6    (1, 2, 3, 2, 1, 2), α_6 joined to α_3
E_7    (1, 2, 3, 4, 3, 2, 2), α_7 joined to α_4
E_8    (2, 3, 4, 5, 6, 4, 2, 3), α_8 joined to α_5
=====  ==========================

For the classical types this is Bourbaki's numbering. F_4 is Bourbaki's read backwards, and for E_n the chain
α_1 ... α_{n-1} is Bourbaki's chain read from the far end with α_n Bourbaki's α_2.
"""

import functools
import logging
from collections import namedtuple
from typing import Dict, List, Optional, Sequence, Tuple

from numpy.random import default_rng
from sympy import QQ

from ._constants import DEFAULT_SEED, DEFAULT_TRIALS, NOT_EXISTS_RETRIES, Scalar, SparseVector
from ._errors import InvalidType, WitnessNotFound
from ._foundation import ExactMatrix, from_columns, kernel, matrix, rank, random_integer_vector, solve
from ._lie import LieAlgebra, Sl2Triple

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]  #: Coefficients of a root in the simple roots

_MIN_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 4}
_EXCEPTIONAL_RANKS = {'E': (6, 7, 8), 'F': (4,), 'G': (2,)}


def _diagram(kind, rank_):
    # type: (str, int) -> Tuple[List[int], List[Tuple[int, int]]]
    """Squared lengths of the simple roots and the edges of the Dynkin diagram, zero based

    Short roots have squared length 2, so adjacent roots always meet in -(longer squared length)/2.
    """
    chain = [(i, i + 1) for i in range(rank_ - 1)]
    if kind == 'A':
        return [2] * rank_, chain
    if kind == 'B':
        return [4] * (rank_ - 1) + [2], chain
    if kind == 'C':
        return [2] * (rank_ - 1) + [4], chain
    if kind == 'D':
        return [2] * rank_, chain[:-1] + [(rank_ - 3, rank_ - 1)]
    if kind == 'G':
        return [2, 6], chain
    if kind == 'F':
        return [2, 2, 4, 4], chain
    branch = {6: 2, 7: 3, 8: 4}[rank_]
    return [2] * rank_, chain[:-1] + [(branch, rank_ - 1)]


class RootSystem(object):
    """The root system of a simple Lie algebra in the basis of simple roots

    Roots are tuples of integer coefficients. Positive roots are ordered by height and, within a height, with larger
    coefficients on earlier simple roots first, so the simple roots come first in their own order.
    """

    def __init__(self, kind, rank_):
        # type: (str, int) -> None
        """
        :param kind: one of ``A`` to ``G``
        :param rank_: the rank
        :raises InvalidType: if there is no simple Lie algebra of that type and rank
        """
        kind = str(kind).upper()
        if kind in _MIN_RANK:
            valid = rank_ >= _MIN_RANK[kind]
        else:
            valid = rank_ in _EXCEPTIONAL_RANKS.get(kind, ())
        if not valid:
            raise InvalidType("there is no simple Lie algebra of type {}{}".format(kind, rank_))
        self.__kind = kind
        self.__rank = rank_
        lengths, edges = _diagram(kind, rank_)
        form = [[0] * rank_ for _ in range(rank_)]
        for i in range(rank_):
            form[i][i] = lengths[i]
        for i, j in edges:
            form[i][j] = form[j][i] = -(max(lengths[i], lengths[j]) // 2)
        self.__form = form
        self.__cartan = tuple(tuple(2 * form[i][j] // form[i][i] for j in range(rank_)) for i in range(rank_))
        self.__positive = self.__find_positive_roots()
        self.__positive_set = frozenset(self.__positive)
        self.__index = {root: k for k, root in enumerate(self.__positive)}

    def __find_positive_roots(self):
        # type: () -> List[Root]
        """Grows root strings upwards from the simple roots"""
        simple = [self.simple_root(i) for i in range(self.__rank)]
        found = set(simple)
        level = list(simple)
        while level:
            next_level = []
            for root in level:
                for i, alpha in enumerate(simple):
                    down = 0
                    while _shift(root, alpha, -(down + 1)) in found:
                        down += 1
                    up = down - self.pairing(root, i)
                    if up > 0:
                        raised = _shift(root, alpha, 1)
                        if raised not in found:
                            found.add(raised)
                            next_level.append(raised)
            level = next_level
        return sorted(found, key=lambda root: (sum(root), tuple(-c for c in root)))

    @property
    def kind(self):
        # type: () -> str
        return self.__kind

    @property
    def rank(self):
        # type: () -> int
        return self.__rank

    @property
    def name(self):
        # type: () -> str
        return '{}{}'.format(self.__kind, self.__rank)

    @property
    def cartan_matrix(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        """a_ij = α_j(h_i) = 2(α_i, α_j)/(α_i, α_i)"""
        return self.__cartan

    @property
    def squared_lengths(self):
        # type: () -> Tuple[int, ...]
        return tuple(self.__form[i][i] for i in range(self.__rank))

    @property
    def positive_roots(self):
        # type: () -> List[Root]
        return list(self.__positive)

    @property
    def roots(self):
        # type: () -> List[Root]
        """Positive roots followed by their negatives"""
        return self.__positive + [negate(root) for root in self.__positive]

    @property
    def highest_root(self):
        # type: () -> Root
        return self.__positive[-1]

    @property
    def dimension(self):
        # type: () -> int
        """Dimension of the simple Lie algebra"""
        return 2 * len(self.__positive) + self.__rank

    def simple_root(self, i):
        # type: (int) -> Root
        return tuple(1 if j == i else 0 for j in range(self.__rank))

    def is_root(self, root):
        # type: (Sequence[int]) -> bool
        root = tuple(root)
        return root in self.__positive_set or negate(root) in self.__positive_set

    def is_positive(self, root):
        # type: (Sequence[int]) -> bool
        return tuple(root) in self.__positive_set

    def position(self, root):
        # type: (Sequence[int]) -> int
        """Position of a positive root in :attr:`positive_roots`"""
        return self.__index[tuple(root)]

    def inner(self, first, second):
        # type: (Sequence[int], Sequence[int]) -> int
        """(x, y), with squared length 2 for the short roots"""
        return sum(first[i] * self.__form[i][j] * second[j]
                   for i in range(self.__rank) if first[i]
                   for j in range(self.__rank) if second[j])

    def pairing(self, root, i):
        # type: (Sequence[int], int) -> int
        """⟨x, α_i^∨⟩ = 2(x, α_i)/(α_i, α_i), the value of x on the simple coroot h_i"""
        return sum(c * self.__cartan[i][j] for j, c in enumerate(root))

    def coroot(self, root):
        # type: (Sequence[int]) -> List[Scalar]
        """Coefficients of h_x = 2x/(x, x) in the simple coroots"""
        length = QQ(self.inner(root, root))
        return [QQ(c * self.__form[i][i]) / length for i, c in enumerate(root)]

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.__kind, self.__rank) == (other.kind, other.rank)

    def __hash__(self):
        return hash((self.__kind, self.__rank))

    def __repr__(self):
        return 'RootSystem({!r}, {})'.format(self.__kind, self.__rank)


def negate(root):
    # type: (Sequence[int]) -> Root
    return tuple(-c for c in root)


def _shift(root, other, times):
    # type: (Sequence[int], Sequence[int], int) -> Root
    return tuple(a + times * b for a, b in zip(root, other))


def build_root_system(kind, rank_):
    # type: (str, int) -> RootSystem
    """The root system of type ``kind`` and rank ``rank_``

    :raises InvalidType: if the pair does not name a simple Lie algebra
    """
    return RootSystem(kind, rank_)


def coroot_form(rs):
    # type: (RootSystem) -> ExactMatrix
    """The invariant form on the Cartan subalgebra in the basis of simple coroots, (h_i, h_j) = (α_i^∨, α_j^∨)"""
    lengths = rs.squared_lengths
    simple = [rs.simple_root(i) for i in range(rs.rank)]
    return matrix([[QQ(4 * rs.inner(simple[i], simple[j]), lengths[i] * lengths[j]) for j in range(rs.rank)]
                   for i in range(rs.rank)])


class _StructureConstants(object):
    """N_{x,y} with [e_x, e_y] = N_{x,y} e_{x+y}, from the extraspecial pairs

    Every positive root ζ that is not simple gets the pair (α_i, ζ - α_i) with i as small as possible, and N is +(p+1)
    on it, p being the largest k with ζ - α_i - kα_i a root. Everything else follows from antisymmetry,
    N_{-x,-y} = -N_{x,y}, the relation N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y) for x + y + z = 0 and the four
    root relation for x + y + z + w = 0.
    """

    def __init__(self, rs):
        # type: (RootSystem) -> None
        self.__rs = rs
        self.__extraspecial = {}  # type: Dict[Root, Tuple[Root, Root]]
        for root in rs.positive_roots[rs.rank:]:
            for i in range(rs.rank):
                alpha = rs.simple_root(i)
                rest = _shift(root, alpha, -1)
                if rs.is_positive(rest):
                    self.__extraspecial[root] = (alpha, rest)
                    break
        self.__values = {}  # type: Dict[Tuple[Root, Root], Scalar]

    def __length(self, root):
        return QQ(self.__rs.inner(root, root))

    def __string_below(self, alpha, beta):
        # type: (Root, Root) -> int
        """Largest k with β - kα a root"""
        down = 0
        while self.__rs.is_root(_shift(beta, alpha, -(down + 1))):
            down += 1
        return down

    def value(self, x, y):
        # type: (Root, Root) -> Scalar
        """N_{x,y}, zero when x + y is not a root"""
        key = (x, y)
        if key not in self.__values:
            total = _shift(x, y, 1)
            if not self.__rs.is_root(total):
                self.__values[key] = QQ.zero
            else:
                self.__values[key] = self.__compute(x, y, total)
        return self.__values[key]

    def __compute(self, x, y, total):
        rs = self.__rs
        x_positive, y_positive = rs.is_positive(x), rs.is_positive(y)
        if not x_positive and not y_positive:
            return -self.value(negate(x), negate(y))
        if x_positive and y_positive:
            if rs.position(x) > rs.position(y):
                return -self.value(y, x)
            return self.__positive_pair(x, y, total)
        if not x_positive:
            return -self.value(y, x)
        # x positive, y negative
        if rs.is_positive(total):
            # N_{x,y}/(z,z) = N_{y,-z}/(x,x) with z = x + y, and N_{y,-z} = -N_{-y,z}
            return -self.__length(total) / self.__length(x) * self.value(negate(y), total)
        # N_{x,y}/(z,z) = N_{-z,x}/(y,y)
        return self.__length(total) / self.__length(y) * self.value(negate(total), x)

    def __positive_pair(self, xi, eta, zeta):
        alpha, beta = self.__extraspecial[zeta]
        extraspecial = QQ(self.__string_below(alpha, beta) + 1)
        if (xi, eta) == (alpha, beta):
            return extraspecial
        rs = self.__rs
        total = QQ.zero
        first = _shift(beta, xi, -1)
        if rs.is_root(first):
            total += self.value(beta, negate(xi)) * self.value(alpha, negate(eta)) / self.__length(first)
        second = _shift(alpha, xi, -1)
        if rs.is_root(second):
            total += self.value(negate(xi), alpha) * self.value(beta, negate(eta)) / self.__length(second)
        return self.__length(zeta) / extraspecial * total


def root_label(root):
    # type: (Sequence[int]) -> str
    return 'x[{}]'.format(','.join(str(c) for c in root))


def root_position(rs, root):
    # type: (RootSystem, Sequence[int]) -> int
    """Basis position of e_x in :func:`chevalley_algebra`"""
    root = tuple(root)
    count = len(rs.positive_roots)
    if rs.is_positive(root):
        return rs.position(root)
    return count + rs.rank + rs.position(negate(root))


def cartan_position(rs, i):
    # type: (RootSystem, int) -> int
    """Basis position of the simple coroot h_i in :func:`chevalley_algebra`"""
    return len(rs.positive_roots) + i


@functools.lru_cache(maxsize=None)
def _chevalley(kind, rank_):
    # type: (str, int) -> LieAlgebra
    rs = RootSystem(kind, rank_)
    constants = _StructureConstants(rs)
    roots = rs.roots
    positions = {root: root_position(rs, root) for root in roots}
    brackets = {}  # type: Dict[Tuple[int, int], SparseVector]

    def store(i, j, terms):
        if i > j:
            i, j = j, i
            terms = {k: -value for k, value in terms.items()}
        if terms:
            brackets[i, j] = terms

    for a, x in enumerate(roots):
        for y in roots[a + 1:]:
            total = _shift(x, y, 1)
            if not any(total):
                coroot = rs.coroot(x)
                store(positions[x], positions[y],
                      {cartan_position(rs, i): c for i, c in enumerate(coroot) if c})
            elif rs.is_root(total):
                store(positions[x], positions[y], {positions[total]: constants.value(x, y)})
        for i in range(rs.rank):
            value = rs.pairing(x, i)
            if value:
                store(cartan_position(rs, i), positions[x], {positions[x]: QQ(value)})
    labels = [root_label(root) for root in rs.positive_roots]
    labels += ['h[{}]'.format(i + 1) for i in range(rs.rank)]
    labels += [root_label(negate(root)) for root in rs.positive_roots]
    logger.debug('Chevalley basis of %s: %d nonzero brackets', rs.name, len(brackets))
    return LieAlgebra(rs.dimension, brackets, labels)


def chevalley_algebra(rs):
    # type: (RootSystem) -> LieAlgebra
    """The simple Lie algebra of a root system in its Chevalley basis

    The basis is e_x for the positive roots in order, then the simple coroots h_1, ..., h_r, then e_{-x} for the
    positive roots in order, labelled ``x[1,0,1]``, ``h[1]`` and ``x[-1,0,-1]``. The brackets are
    [h_i, e_x] = ⟨x, α_i^∨⟩e_x, [e_x, e_-x] = h_x and [e_x, e_y] = N_{x,y} e_{x+y}, all integers. Algebras are cached
    per type and rank.
    """
    return _chevalley(rs.kind, rs.rank)


class Marking(object):
    """Values p_i = α_i(h) of a grading element on the simple roots"""

    def __init__(self, p):
        # type: (Sequence[int]) -> None
        self.__p = tuple(int(value) for value in p)
        if any(value < 0 for value in self.__p):
            raise ValueError("marking values must be non-negative, got {}".format(self.__p))

    @property
    def p(self):
        # type: () -> Tuple[int, ...]
        return self.__p

    @property
    def nodes(self):
        # type: () -> Tuple[int, ...]
        """One based numbers of the marked simple roots"""
        return tuple(i + 1 for i, value in enumerate(self.__p) if value)

    def value(self, root):
        # type: (Sequence[int]) -> int
        """x(h) for a root x"""
        return sum(c * value for c, value in zip(root, self.__p))

    def __str__(self):
        return '+'.join(('' if value == 1 else str(value)) + 'a{}'.format(i + 1)
                        for i, value in enumerate(self.__p) if value)

    def __repr__(self):
        return 'Marking({})'.format(list(self.__p))

    def __eq__(self, other):
        return isinstance(other, Marking) and self.__p == other.p

    def __hash__(self):
        return hash(self.__p)


def marking_element(rs, marking):
    # type: (RootSystem, Marking) -> SparseVector
    """The element h of the Cartan subalgebra with α_i(h) = p_i, in the coordinates of :func:`chevalley_algebra`"""
    # α_i(Σ c_j h_j) = Σ c_j a_ji
    transpose = matrix([[rs.cartan_matrix[j][i] for j in range(rs.rank)] for i in range(rs.rank)])
    coefficients = solve(transpose, list(marking.p))
    return {cartan_position(rs, j): c for j, c in enumerate(coefficients) if c}


def _solutions(levels, total):
    # type: (Sequence[int], int) -> List[Tuple[int, ...]]
    """Every p >= 0 with Σ l_i p_i = total"""
    if not levels:
        return [()] if total == 0 else []
    head, rest = levels[0], levels[1:]
    if head <= 0:
        raise ValueError("levels have to be positive, got {}".format(head))
    found = []
    for value in range(total // head + 1):
        for tail in _solutions(rest, total - head * value):
            found.append((value,) + tail)
    return found


def enumerate_markings(rs):
    # type: (RootSystem) -> List[Marking]
    """Markings with α_max(h) = 2 whose grading has g¹ ≠ 0, ordered by their marked nodes"""
    markings = []
    for p in _solutions(rs.highest_root, 2):
        marking = Marking(p)
        if any(marking.value(root) == 1 for root in rs.positive_roots):
            markings.append(marking)
    markings.sort(key=lambda m: (len(m.nodes), m.nodes))
    return markings


def diagram_automorphisms(rs):
    # type: (RootSystem) -> List[Tuple[int, ...]]
    """Permutations σ of the simple roots with a_σ(i)σ(j) = a_ij, the identity first"""
    cartan = rs.cartan_matrix
    size = rs.rank
    found = []

    def extend(images):
        if len(images) == size:
            found.append(tuple(images))
            return
        i = len(images)
        for candidate in range(size):
            if candidate in images or cartan[candidate][candidate] != cartan[i][i]:
                continue
            if all(cartan[candidate][images[j]] == cartan[i][j] and cartan[images[j]][candidate] == cartan[j][i]
                   for j in range(i)):
                extend(images + [candidate])

    extend([])
    found.sort(key=lambda perm: perm != tuple(range(size)))
    return found


def equivalent_to(rs, markings):
    # type: (RootSystem, Sequence[Marking]) -> List[Optional[int]]
    """For each marking, the position of the first earlier marking a diagram automorphism maps onto it"""
    automorphisms = diagram_automorphisms(rs)[1:]
    result = []  # type: List[Optional[int]]
    for k, marking in enumerate(markings):
        match = None
        for j in range(k):
            earlier = markings[j].p
            if any(all(marking.p[perm[i]] == earlier[i] for i in range(rs.rank)) for perm in automorphisms):
                match = j
                break
        result.append(match)
    return result


def grading_dims(rs, marking):
    # type: (RootSystem, Marking) -> Tuple[int, ...]
    """Dimensions of g^k for k = -2, ..., 2, by counting roots"""
    counts = {k: 0 for k in (0, 1, 2)}
    for root in rs.positive_roots:
        value = marking.value(root)
        if value not in counts:
            raise ValueError("marking {} gives the root {} the value {}".format(marking, root, value))
        counts[value] += 1
    zero = rs.rank + 2 * counts[0]
    return counts[2], counts[1], zero, counts[1], counts[2]


G2Module = namedtuple('G2Module', 'dim pairings')
G2Module.__doc__ = """dim g² and ⟨α_max, α_j^∨⟩ for every unmarked simple root, keyed by its one based number"""


def g2_module_info(rs, marking):
    # type: (RootSystem, Marking) -> G2Module
    """The g̃⁰-module g²: its dimension and the highest root's pairings with the unmarked simple roots"""
    dim = sum(1 for root in rs.positive_roots if marking.value(root) == 2)
    pairings = {i + 1: rs.pairing(rs.highest_root, i) for i, value in enumerate(marking.p) if not value}
    return G2Module(dim, pairings)


Sl2Decision = namedtuple('Sl2Decision', 'exists witness')
Sl2Decision.__doc__ = """Whether h lies in an sl2-triple, and a triple (e, h, f) when it does"""


class _GradedPieces(object):
    """Positions and spanning sets of the pieces of the grading the decision needs"""

    def __init__(self, rs, marking):
        # type: (RootSystem, Marking) -> None
        self.h = marking_element(rs, marking)
        self.top = [root_position(rs, root) for root in rs.positive_roots if marking.value(root) == 2]
        self.bottom = [root_position(rs, negate(root)) for root in rs.positive_roots if marking.value(root) == 2]
        zero_roots = [root for root in rs.roots if marking.value(root) == 0]
        # the Cartan part of g̃⁰ is the orthogonal complement of h
        form = coroot_form(rs).to_dod()
        h_coords = [self.h.get(cartan_position(rs, i), QQ.zero) for i in range(rs.rank)]
        normal = [sum((value * h_coords[j] for j, value in form.get(i, {}).items()), QQ.zero) for i in range(rs.rank)]
        cartan = [{cartan_position(rs, i): c for i, c in enumerate(vector) if c}
                  for vector in kernel(matrix([normal]))]
        self.reduced_zero = cartan + [{root_position(rs, root): QQ.one} for root in zero_roots]


def _generic_rank(algebra, pieces, rng, trials):
    # type: (LieAlgebra, _GradedPieces, object, int) -> int
    """Largest rank of D -> [D, e] on g̃⁰ over random e in g²"""
    size = len(pieces.top)
    local = {position: k for k, position in enumerate(pieces.top)}
    best = 0
    for _ in range(trials):
        e = dict(zip(pieces.top, random_integer_vector(rng, size)))
        images = [algebra.bracket(d, e) for d in pieces.reduced_zero]
        columns = [{local[position]: value for position, value in image.items()} for image in images]
        best = max(best, rank(from_columns(columns, size)))
        if best == size:
            break
    return best


def _find_witness(algebra, pieces, rng, attempts):
    # type: (LieAlgebra, _GradedPieces, object, int) -> Optional[Sl2Triple]
    """Tries random e in g² until [e, f] = h has a solution f in g^-2"""
    for _ in range(attempts):
        e = {position: value for position, value in zip(pieces.top, random_integer_vector(rng, len(pieces.top)))
             if value}
        if not e:
            continue
        columns = [algebra.bracket(e, {position: QQ.one}) for position in pieces.bottom]
        coefficients = solve(from_columns(columns, algebra.dim), pieces.h)
        if coefficients is None:
            continue
        f = {position: c for position, c in zip(pieces.bottom, coefficients) if c}
        triple = Sl2Triple(e, pieces.h, f)
        if triple.is_triple(algebra):
            return triple
    return None


def sl2_exists(rs, marking, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, retries=NOT_EXISTS_RETRIES):
    # type: (RootSystem, Marking, int, int, int) -> Sl2Decision
    """Decides whether the grading element of a marking lies in an sl2-triple

    The triple exists exactly when g̃⁰, the orthogonal complement of h in g^0, has no open orbit on g², that is when
    the generic rank of D -> [D, e] stays below dim g². The generic rank is the largest rank seen over ``trials``
    random integer e. When a triple exists one is returned, found by solving [e, f] = h for random e; a "does not
    exist" answer is cross-checked with ``retries`` further witness attempts.

    :raises WitnessNotFound: if the rank says a triple exists but none of the attempts finds one
    """
    algebra = chevalley_algebra(rs)
    pieces = _GradedPieces(rs, marking)
    rng = default_rng(seed)
    generic = _generic_rank(algebra, pieces, rng, trials)
    exists = generic < len(pieces.top)
    logger.debug('%s %s: generic rank %d on g² of dimension %d', rs.name, marking, generic, len(pieces.top))
    witness = _find_witness(algebra, pieces, rng, max(trials, retries) if exists else retries)
    if exists and witness is None:
        raise WitnessNotFound("{} marking {}: generic rank {} < {} but no triple found in {} attempts".format(
            rs.name, marking, generic, len(pieces.top), max(trials, retries)))
    if not exists and witness is not None:
        logger.warning('%s marking %s: a triple was found although the generic rank is full', rs.name, marking)
        exists = True
    return Sl2Decision(exists, witness)


# g0 as tabulated for the exceptional algebras, keyed by type, rank and marked nodes
REFERENCE_G0 = {
    ('G', 2, (2,)): ('sl2', 3),
    ('F', 4, (1,)): ('so6', 15),
    ('F', 4, (4,)): ('sp6', 21),
    ('E', 6, (6,)): ('sl6', 35),
    ('E', 6, (1, 5)): ('so7', 21),
    ('E', 7, (2,)): ('sl2+so9', 39),
    ('E', 7, (6,)): ('so12', 66),
    ('E', 8, (1,)): ('E7', 133),
    ('E', 8, (7,)): ('so13', 78),
}


class ClassificationRow(object):
    """One marking of a classification"""

    def __init__(self, marking, exists, dims, g2_dim, witness=None, equivalent=None, notes=None):
        # type: (Marking, bool, Tuple[int, int, int], int, Optional[Sl2Triple], Optional[int], Optional[List[str]]) -> None
        self.marking = marking
        self.exists = exists
        self.dims = dims  #: (dim g0, dim J1, dim J2) = (dim g^0 - dim g², dim g¹, dim g²)
        self.g2_dim = g2_dim
        self.witness = witness
        self.equivalent_to = equivalent
        self.notes = list(notes or [])

    def __repr__(self):
        return 'ClassificationRow({}, exists={}, dims={})'.format(self.marking, self.exists, self.dims)


def classify(kind, rank_, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    # type: (str, int, int, int) -> List[ClassificationRow]
    """One row per marking of :func:`enumerate_markings`, with the existence decision and the dimensions

    Every row uses its own generator seeded from ``seed`` and the row number, so the rows do not depend on each other.
    """
    rs = build_root_system(kind, rank_)
    markings = enumerate_markings(rs)
    equivalents = equivalent_to(rs, markings)
    rows = []
    for k, marking in enumerate(markings):
        decision = sl2_exists(rs, marking, trials, seed=_row_seed(seed, k))
        _, odd, zero, _, top = grading_dims(rs, marking)
        dims = (zero - top, odd, top)
        row = ClassificationRow(marking, decision.exists, dims, top, decision.witness, equivalents[k])
        reference = REFERENCE_G0.get((rs.kind, rs.rank, marking.nodes))
        if reference is not None and decision.exists and reference[1] != dims[0]:
            row.notes.append('tabulated g0 = {} has dimension {} but the grading gives {}; the difference is central'
                             .format(reference[0], reference[1], dims[0]))
            logger.info('%s marking %s: %s', rs.name, marking, row.notes[-1])
        logger.debug('%s marking %s: exists=%s dims=%s', rs.name, marking, decision.exists, dims)
        rows.append(row)
    return rows


def _row_seed(seed, row):
    # type: (int, int) -> int
    return seed * 1000 + row
