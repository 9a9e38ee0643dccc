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
"""The ``shortsl2`` command"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from ._constants import (DEFAULT_LOG_LEVEL, DEFAULT_SEED, DEFAULT_TRIALS, EXIT_CHECK_FAILED, EXIT_OK, JACOBI_SAMPLES,
                         PROPERTY_SAMPLES)
from ._errors import InvalidParameters, MalformedInput, ShortSl2Error
from ._foundation import rank
from ._isotypic import extract
from ._lie import commutant_dimension, is_simple, killing_form, verify_jacobi
from ._models import CATALOG, ModelCatalog, ambient_model, catalog_extraction, oracle_check
from ._report import Report
from ._rootsys import classify
from ._serialization import (dump_classification, dump_lie, dump_structure, dump_triple, load_lie, load_structure,
                             load_triple)
from ._sympjordan import property_suite, validate
from ._tkk import build, canonical_triple

logger = logging.getLogger(__name__)

CHECKS = ('jacobi', 'killing', 'simple')


def _read(path):
    # type: (str) -> str
    try:
        with open(path, encoding='utf-8') as stream:
            return stream.read()
    except OSError as error:
        raise MalformedInput("cannot read {}: {}".format(path, error.strerror))


def _write(path, text):
    # type: (Optional[str], str) -> None
    """Writes to a file, or to stdout when there is no path or the path is -"""
    if path is None or path == '-':
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as stream:
        stream.write(text)
    logger.info('wrote %s', path)


def _emit(report, args):
    # type: (Report, argparse.Namespace) -> int
    if args.json:
        print(json.dumps(report.to_dict(), indent=1, ensure_ascii=False))
    else:
        print(report)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _structure_of(args):
    """The structure named by --model or read from --structure"""
    if args.model:
        return catalog_extraction(CATALOG[args.model]).structure
    return load_structure(_read(args.structure))


def _build(args):
    # type: (argparse.Namespace) -> int
    structure = _structure_of(args)
    algebra = build(structure, check=not args.no_check)
    _write(args.out, dump_lie(algebra))
    if args.triple_out:
        _write(args.triple_out, dump_triple(canonical_triple(algebra, structure), algebra.dim))
    logger.info('built an algebra of dimension %d', algebra.dim)
    return EXIT_OK


def _verify(args):
    # type: (argparse.Namespace) -> int
    checks = [name.strip() for name in args.checks.split(',') if name.strip()]
    unknown = [name for name in checks if name not in CHECKS]
    if unknown or not checks:
        raise InvalidParameters("unknown checks {}, choose from {}".format(', '.join(unknown), ', '.join(CHECKS)))
    algebra = load_lie(_read(args.file))
    report = Report('verify {}'.format(args.file))
    if 'jacobi' in checks:
        jacobi = verify_jacobi(algebra, args.mode, args.samples, args.seed)
        report.extend(jacobi)
        report.notes.append('{} triples checked ({})'.format(jacobi.triples_checked, jacobi.mode))
    if 'killing' in checks:
        killing_rank = rank(killing_form(algebra))
        report.add('killing', killing_rank == algebra.dim,
                   detail='' if killing_rank == algebra.dim else 'Killing form has rank {} of {}'.format(
                       killing_rank, algebra.dim))
    if 'simple' in checks:
        simple = is_simple(algebra)
        report.add('simple', simple, detail='' if simple else 'degenerate Killing form or commutant dimension {}'
                   .format(commutant_dimension(algebra)))
    return _emit(report, args)


def _classify(args):
    # type: (argparse.Namespace) -> int
    kind = args.type.upper()
    rows = classify(kind, args.rank, trials=args.trials, seed=args.seed)
    text = dump_classification(kind, args.rank, rows)
    if args.out:
        _write(args.out, text)
    if args.json:
        if not args.out:
            _write(None, text)
        return EXIT_OK
    print('{}{}: {} marking(s)'.format(kind, args.rank, len(rows)))
    for k, row in enumerate(rows):
        status = 'exists' if row.exists else 'none'
        line = '  {:>2} {:<12} {:<7} g0={:<4} J1={:<4} J2={:<4}'.format(k, str(row.marking), status, *row.dims)
        if row.equivalent_to is not None:
            line += ' same as {}'.format(row.equivalent_to)
        print(line)
        for note in row.notes:
            print('     note: ' + note)
    return EXIT_OK


def _decompose(args):
    # type: (argparse.Namespace) -> int
    algebra = load_lie(_read(args.file))
    triple = load_triple(_read(args.triple), algebra.dim)
    extraction = extract(algebra, triple, check_simple=not args.no_check)
    _write(args.out, dump_structure(extraction.structure))
    return EXIT_OK


def _models(args):
    # type: (argparse.Namespace) -> int
    if args.check:
        return _emit(oracle_check(CATALOG[args.check]), args)
    if args.json:
        listing = {
            'families': ModelCatalog.families(),
            'models': [{'name': name, 'family': spec.family, 'size': spec.size,
                        'dims': list(spec.expected_dims)} for name, spec in CATALOG.items()],
        }
        print(json.dumps(listing, indent=1, ensure_ascii=False))
        return EXIT_OK
    print('families:')
    for family in ModelCatalog.families():
        print('  ' + family)
    print('catalog:')
    for name, spec in CATALOG.items():
        g0, j1, j2 = spec.expected_dims
        print('  {:<16} {}x{} matrices, g0={} J1={} J2={}'.format(name, spec.size, spec.size, g0, j1, j2))
    return EXIT_OK


def _export(args):
    # type: (argparse.Namespace) -> int
    if args.format == 'ljs':
        _write(args.out, dump_structure(_structure_of(args)))
    elif args.format == 'lie':
        _write(args.out, dump_lie(build(_structure_of(args), check=False)))
    else:
        if not args.model:
            raise InvalidParameters("--format ambient needs --model")
        model = ambient_model(CATALOG[args.model])
        _write(args.out, dump_lie(model.algebra))
        if args.triple_out:
            _write(args.triple_out, dump_triple(model.triple, model.algebra.dim))
    return EXIT_OK


def _validate(args):
    # type: (argparse.Namespace) -> int
    structure = load_structure(_read(args.file))
    report = validate(structure)
    if args.properties and report.passed:
        report.extend(property_suite(structure, args.samples, args.seed))
    return _emit(report, args)


def _add_source(parser, required=True):
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument('--model', help='catalog model, e.g. maximal:1 or sl:5:1')
    source.add_argument('--structure', help='ljs-v1 file')


def make_parser():
    # type: () -> argparse.ArgumentParser
    parser = argparse.ArgumentParser(prog='shortsl2', description='Short SL2-structures on simple Lie algebras')
    parser.add_argument('--json', action='store_true', help='machine readable output')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', '-v', action='store_true', help='log debug messages')
    verbosity.add_argument('--quiet', '-q', action='store_true', help='log errors only')
    # --json after the command as well
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--json', action='store_true', default=argparse.SUPPRESS, help='machine readable output')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    build_parser = commands.add_parser('build', parents=[output],
                                       help='build the Lie algebra of a structure as lie-v1')
    _add_source(build_parser)
    build_parser.add_argument('--out', help='output file, stdout by default')
    build_parser.add_argument('--triple-out', help='also write the canonical sl2-triple to this file')
    build_parser.add_argument('--no-check', action='store_true', help='skip validation of the structure')
    build_parser.set_defaults(handler=_build)

    verify_parser = commands.add_parser('verify', parents=[output],
                                        help='check the Jacobi identity, Killing form or simplicity')
    verify_parser.add_argument('file', help='lie-v1 file')
    verify_parser.add_argument('--checks', default='jacobi', help='comma separated subset of ' + ','.join(CHECKS))
    verify_parser.add_argument('--mode', choices=('full', 'sampled'), help='Jacobi mode, by dimension by default')
    verify_parser.add_argument('--samples', type=int, default=JACOBI_SAMPLES, help='triples in sampled mode')
    verify_parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    verify_parser.set_defaults(handler=_verify)

    classify_parser = commands.add_parser('classify', parents=[output],
                                          help='decide every marking of a Dynkin diagram')
    classify_parser.add_argument('--type', required=True, choices=tuple('ABCDEFGabcdefg'))
    classify_parser.add_argument('--rank', required=True, type=int)
    classify_parser.add_argument('--trials', type=int, default=DEFAULT_TRIALS, help='random elements per rank test')
    classify_parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    classify_parser.add_argument('--out', help='write cls-v1 to this file')
    classify_parser.set_defaults(handler=_classify)

    decompose_parser = commands.add_parser('decompose', parents=[output],
                                           help='extract the structure of an algebra with a triple')
    decompose_parser.add_argument('file', help='lie-v1 file')
    decompose_parser.add_argument('--triple', required=True, help='file with the e, h and f coordinates')
    decompose_parser.add_argument('--out', help='output ljs-v1 file, stdout by default')
    decompose_parser.add_argument('--no-check', action='store_true', help='skip the simplicity test')
    decompose_parser.set_defaults(handler=_decompose)

    models_parser = commands.add_parser('models', parents=[output], help='list the model catalog')
    models_parser.add_argument('--list', action='store_true', help='list families and models (the default)')
    models_parser.add_argument('--check', metavar='NAME', help='compare a model with its matrix commutators')
    models_parser.set_defaults(handler=_models)

    export_parser = commands.add_parser('export', parents=[output],
                                        help='write a model or structure as ljs-v1 or lie-v1')
    _add_source(export_parser)
    export_parser.add_argument('--format', choices=('ljs', 'lie', 'ambient'), default='ljs',
                               help='ambient writes the matrix algebra of a model in its matrix basis')
    export_parser.add_argument('--out', help='output file, stdout by default')
    export_parser.add_argument('--triple-out', help='with --format ambient, also write the model triple')
    export_parser.set_defaults(handler=_export)

    validate_parser = commands.add_parser('validate', parents=[output], help='check the axioms of an ljs-v1 structure')
    validate_parser.add_argument('file', help='ljs-v1 file')
    validate_parser.add_argument('--properties', action='store_true', help='also run the identity suite')
    validate_parser.add_argument('--samples', type=int, default=PROPERTY_SAMPLES)
    validate_parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    validate_parser.set_defaults(handler=_validate)
    return parser


def _configure_logging(args):
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = getattr(logging, DEFAULT_LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    # type: (Optional[List[str]]) -> int
    """Runs the command line and returns the exit code

    0 on success, 1 when a check fails, 2 on malformed input and 3 on invalid parameters.
    """
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    _configure_logging(args)
    try:
        return args.handler(args)
    except ShortSl2Error as error:
        logger.error('%s', error)
        return error.exit_code


def run():
    sys.exit(main())
