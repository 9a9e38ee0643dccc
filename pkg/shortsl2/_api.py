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
"""Short SL2-structures on simple Lie algebras - all package-level names come through here.

A short SL2-structure on a Lie algebra g splits it under an sl2-triple (e, h, f) into irreducibles of dimension 1, 2
and 3 only, g = g0 ⊕ (Q²⊗J1) ⊕ (sl2⊗J2). The multiplicity spaces carry a symplectic Lie-Jordan structure
(J1; J2; g0; δ0), and the structure determines g. The package works in both directions, with exact rational
arithmetic throughout:

* :func:`build` turns a :class:`LieJordanStructure` into a :class:`LieAlgebra`
* :func:`extract` reads the structure back off a simple algebra with a short sl2-triple
* :func:`classify` decides, for every marking of a Dynkin diagram with Σ l_i p_i = 2, whether the grading it defines
  comes from an sl2-triple
* :data:`CATALOG` holds matrix models of the classical structures and :func:`oracle_check` compares each of them with
  its matrix commutators

Structures and algebras are read and written as JSON with :func:`load_structure`, :func:`dump_lie` and friends, and
the ``shortsl2`` command wraps everything for the shell.

Checks that can fail return a :class:`Report`; errors that stop a computation are subclasses of
:class:`ShortSl2Error`, each with the exit code the command line uses for it.
"""

from ._errors import (DegenerateForm, DegenerateRestriction, InvalidParameters, InvalidStructure, InvalidType,
                      MalformedInput, NonUnitalJ2, NotBuilt, NotSemisimpleElement, NotShort, NotSimple, NotSymmetric,
                      ShortSl2Error, WitnessNotFound)
from ._foundation import (Span, commutator, format_rational, identity, invariant_operators, kernel, matrix, rank,
                          rational, solve, trace_product)
from ._isotypic import Extraction, Grading, IsotypicData, decompose, extract, grade
from ._lie import (BasisLabel, JacobiReport, LieAlgebra, Sl2Triple, commutant_dimension, from_matrix_basis,
                   is_simple, killing_form, verify_jacobi)
from ._models import (CATALOG, AmbientModel, ModelCatalog, ModelSpec, ambient_algebra, ambient_form_scale,
                      catalog_structure, oracle_check, sl_closed_forms)
from ._report import Check, Report
from ._rootsys import (ClassificationRow, Marking, RootSystem, build_root_system, chevalley_algebra, classify,
                       coroot_form, diagram_automorphisms, enumerate_markings, g2_module_info, grading_dims,
                       marking_element, sl2_exists)
from ._serialization import (dump_classification, dump_lie, dump_structure, dump_triple, load_classification,
                             load_lie, load_structure, load_triple)
from ._sl2kit import act, identity_suite, outer, s_map, skew2, trace_form
from ._sympjordan import (LieJordanStructure, SymplecticSpace, compute_F, curvature, delta, delta_m, jordan_product,
                          maximal_structure, phi, phi_m, project_pi2, project_pic, property_suite, rank_one, split_g0,
                          standard_symplectic_form, validate)
from ._tkk import TkkLayout, build, canonical_triple, invariant_form, subalgebra_report

__all__ = [
    # exact linear algebra
    'Span', 'commutator', 'format_rational', 'identity', 'invariant_operators', 'kernel', 'matrix', 'rank',
    'rational', 'solve', 'trace_product',
    # sl2 and Q²
    'act', 'identity_suite', 'outer', 's_map', 'skew2', 'trace_form',
    # structures
    'LieJordanStructure', 'SymplecticSpace', 'compute_F', 'curvature', 'delta', 'delta_m', 'jordan_product',
    'maximal_structure', 'phi', 'phi_m', 'project_pi2', 'project_pic', 'property_suite', 'rank_one', 'split_g0',
    'standard_symplectic_form', 'validate',
    # Lie algebras
    'BasisLabel', 'JacobiReport', 'LieAlgebra', 'Sl2Triple', 'commutant_dimension', 'from_matrix_basis', 'is_simple',
    'killing_form', 'verify_jacobi',
    'TkkLayout', 'build', 'canonical_triple', 'invariant_form', 'subalgebra_report',
    'Extraction', 'Grading', 'IsotypicData', 'decompose', 'extract', 'grade',
    # root systems
    'ClassificationRow', 'Marking', 'RootSystem', 'build_root_system', 'chevalley_algebra', 'classify', 'coroot_form',
    'diagram_automorphisms', 'enumerate_markings', 'g2_module_info', 'grading_dims', 'marking_element', 'sl2_exists',
    # models
    'CATALOG', 'AmbientModel', 'ModelCatalog', 'ModelSpec', 'ambient_algebra', 'ambient_form_scale',
    'catalog_structure', 'oracle_check', 'sl_closed_forms',
    # files
    'dump_classification', 'dump_lie', 'dump_structure', 'dump_triple', 'load_classification', 'load_lie',
    'load_structure', 'load_triple',
    # results and errors
    'Check', 'Report',
    'DegenerateForm', 'DegenerateRestriction', 'InvalidParameters', 'InvalidStructure', 'InvalidType',
    'MalformedInput', 'NonUnitalJ2', 'NotBuilt', 'NotSemisimpleElement', 'NotShort', 'NotSimple', 'NotSymmetric',
    'ShortSl2Error', 'WitnessNotFound',
   ]
