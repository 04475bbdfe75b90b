#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Command line entry point """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import argparse
import json
import logging
import sys
import typing

from gclink import __version__
from gclink.classify import census, classify_with_evidence
from gclink.config import Settings
from gclink.constants import SCHEMA
from gclink.dpq import (
    DpqParams,
    axis_schedule,
    build,
    diagram_document,
    render_svg,
    standard_diagram,
)
from gclink.enums import Handedness, OutputFormat
from gclink.errors import GCLinkError, InvalidDocument
from gclink.gclink_core import link_from_document
from gclink.hopf_proj import HopfBundle, configuration
from gclink.quat_s3 import I, J, K, PureUnit
from gclink.twobridge import (
    KnotFraction,
    NoExpansion,
    Slope,
    certify_vhaken,
    equivalent,
    even_cf,
    reducible_fillings,
    two_expansion,
)
from gclink.utils import to_json_text
from gclink.wedge_surface import surface_document

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
NAMED_AXES = {'i': I, 'j': J, 'k': K}


# ---------------------------------------------------------------------------
# Argument types
# ---------------------------------------------------------------------------
def _axis(text: str) -> PureUnit:
    text = text.strip().lower()
    if text in NAMED_AXES:
        return NAMED_AXES[text]
    try:
        vector = [float(part) for part in text.split(',')]
        if len(vector) != 3:
            raise ValueError(text)
        return PureUnit.from_vector(vector)
    except (ValueError, GCLinkError):
        raise argparse.ArgumentTypeError(f'expected i, j, k or three comma-separated numbers: {text!r}')


def _indices(text: str) -> set:
    if not text.strip():
        return set()
    try:
        return {int(part) for part in text.split(',')}
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated component indices: {text!r}')


def _knot(text: str) -> KnotFraction:
    try:
        return KnotFraction.parse(text)
    except GCLinkError as err:
        raise argparse.ArgumentTypeError(err.message)


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except GCLinkError as err:
        raise argparse.ArgumentTypeError(err.message)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected an integer: {text!r}')
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer: {text!r}')
    return value


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='gclink', description='Great circle links in S^3')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug')
    commands = parser.add_subparsers(dest='command', required=True)

    classify_cmd = commands.add_parser('classify', help='classify a link document')
    classify_cmd.add_argument('--input', default='-', help='link JSON path, - for stdin')
    classify_cmd.add_argument('--exhaustive', action='store_true', help='check every triple')
    classify_cmd.set_defaults(handler=_run_classify)

    census_cmd = commands.add_parser('census', help='classify random links')
    census_cmd.add_argument('--n', type=int, required=True)
    census_cmd.add_argument('--samples', type=_positive, required=True)
    census_cmd.add_argument('--seed', type=int, default=None)
    census_cmd.add_argument('--workers', type=_positive, default=None)
    census_cmd.set_defaults(handler=_run_census)

    dpq_cmd = commands.add_parser('dpq', help='the link D(p/q)')
    dpq_cmd.add_argument('--p', type=int, required=True)
    dpq_cmd.add_argument('--q', type=int, required=True)
    dpq_cmd.add_argument(
        '--out', type=OutputFormat.parse, default=OutputFormat.JSON, help='json, gauss or svg'
    )
    dpq_cmd.set_defaults(handler=_run_dpq)

    project_cmd = commands.add_parser('project', help='project a link along a Hopf bundle')
    project_cmd.add_argument('--input', default='-', help='link JSON path, - for stdin')
    project_cmd.add_argument('--axis', type=_axis, default=I, help='i, j, k or x,y,z')
    project_cmd.add_argument('--handedness', type=Handedness.parse, default=Handedness.RIGHT)
    project_cmd.add_argument('--fibers', type=_indices, default=set(), help='e.g. 0,1,2')
    project_cmd.set_defaults(handler=_run_project)

    surface_cmd = commands.add_parser('surface', help='surface and wedge census for D(p/q)')
    surface_cmd.add_argument('--p', type=int, required=True)
    surface_cmd.add_argument('--q', type=int, required=True)
    surface_cmd.add_argument('--start', type=int, default=0)
    surface_cmd.set_defaults(handler=_run_surface)

    twobridge_cmd = commands.add_parser('twobridge', help='two-bridge knot arithmetic')
    verbs = twobridge_cmd.add_subparsers(dest='verb', required=True)
    equiv_cmd = verbs.add_parser('equiv', help='same knot?')
    equiv_cmd.add_argument('first', type=_knot)
    equiv_cmd.add_argument('second', type=_knot)
    fibered_cmd = verbs.add_parser('fibered', help='fibered knot?')
    fibered_cmd.add_argument('fraction', type=_knot)
    cf_cmd = verbs.add_parser('cf', help='even continued fraction')
    cf_cmd.add_argument('fraction', type=_knot)
    reducible_cmd = verbs.add_parser('reducible', help='reducible filling slopes')
    reducible_cmd.add_argument('fraction', type=_knot)
    certify_cmd = verbs.add_parser('certify', help='virtually Haken certificate for a filling')
    certify_cmd.add_argument('fraction', type=_knot)
    certify_cmd.add_argument('slope', type=_slope)
    for verb in (equiv_cmd, fibered_cmd, cf_cmd, reducible_cmd, certify_cmd):
        verb.add_argument('--json', action='store_true', help='JSON instead of text')
    twobridge_cmd.set_defaults(handler=_run_twobridge)
    return parser


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------
def _read_link(path: str):
    if path == '-':
        text = sys.stdin.read()
    else:
        with open(path, encoding='utf-8') as handle:
            text = handle.read()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidDocument(f'Input is not JSON: {err}')
    return link_from_document(document)


def _run_classify(args, settings: Settings) -> str:
    link = _read_link(args.input)
    return to_json_text(classify_with_evidence(link, exhaustive=args.exhaustive).to_dict())


def _run_census(args, settings: Settings) -> str:
    seed = settings.seed if args.seed is None else args.seed
    workers = settings.workers if args.workers is None else args.workers
    return to_json_text(census(args.n, args.samples, seed=seed, workers=workers).to_dict())


def _run_dpq(args, settings: Settings) -> str:
    params = DpqParams.create(args.p, args.q)
    diagram = standard_diagram(params)
    if args.out is OutputFormat.SVG:
        return render_svg(diagram)
    if args.out is OutputFormat.GAUSS:
        return diagram.gauss_text()
    document = build(params).to_document()
    document['params'] = params.to_dict()
    document['schedule'] = axis_schedule(params).to_dict()
    document['diagram'] = diagram_document(diagram)
    return to_json_text(document)


def _run_project(args, settings: Settings) -> str:
    link = _read_link(args.input)
    bundle = HopfBundle(args.axis, args.handedness)
    config = configuration(link, bundle, args.fibers)
    return to_json_text({'schema': SCHEMA, 'configuration': config.to_dict()})


def _run_surface(args, settings: Settings) -> str:
    return to_json_text(surface_document(DpqParams.create(args.p, args.q), args.start))


def _twobridge_result(args) -> typing.Tuple[dict, str]:
    if args.verb == 'equiv':
        same = equivalent(args.first, args.second)
        record = {'fractions': [str(args.first), str(args.second)], 'equivalent': same}
        return record, str(same).lower()
    if args.verb == 'fibered':
        found = two_expansion(args.fraction)
        record = {
            'fraction': str(args.fraction),
            'fibered': found is not None,
            'representative': None if found is None else f'{found[0]}/{args.fraction.q}',
            'expansion': None if found is None else found[1],
        }
        return record, str(found is not None).lower()
    if args.verb == 'cf':
        terms = even_cf(args.fraction)
        if isinstance(terms, NoExpansion):
            return {'fraction': str(args.fraction), 'expansion': None, **terms.to_json()}, 'none'
        return {'fraction': str(args.fraction), 'expansion': terms}, ' '.join(map(str, terms))
    if args.verb == 'reducible':
        slopes = [str(s) for s in reducible_fillings(args.fraction)]
        return {'fraction': str(args.fraction), 'reducible': slopes}, ' '.join(slopes)
    certificate = certify_vhaken(args.fraction, args.slope)
    status = certificate.status.to_json()
    text = status['kind'] if certificate.certified else f'{status["kind"]} ({status["reason"]})'
    return certificate.to_json(), text


def _run_twobridge(args, settings: Settings) -> str:
    record, text = _twobridge_result(args)
    if args.json:
        return to_json_text({'schema': SCHEMA, **record})
    return text + '\n'


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------
def main(argv: typing.Optional[list] = None) -> int:
    """
    Run one command

    Returns:
        code (int): 0 on success, 1 on a domain error (error JSON on stderr), 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code in (0, None) else EXIT_USAGE
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT)
    try:
        settings = Settings.from_env()
    except ValueError as err:
        sys.stderr.write(f'gclink: {err}\n')
        return EXIT_USAGE
    try:
        output = args.handler(args, settings)
    except GCLinkError as err:
        logger.info('%s failed: %s', args.command, err.message)
        sys.stderr.write(to_json_text(err.to_json()))
        return EXIT_DOMAIN
    except OSError as err:
        sys.stderr.write(f'gclink: {err}\n')
        return EXIT_USAGE
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
