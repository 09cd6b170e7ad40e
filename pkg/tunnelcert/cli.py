# -*- coding:utf-8 -*-
# Copyright 2014, Quixey Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy of
# the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations under
# the License.

"""
tcert: unknotting tunnel certifier
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Checks ball-and-beam patterns and certifies that their vertical geodesic is
an unknotting tunnel.

**Usage:**

.. program-output:: tcert.py --help

**Usage Example:**

.. code-block:: bash

    tcert.py certify tests/fixtures/square_lattice.json
    verdict: Tunnel
    rule: Prop4
    ...

Exit codes: 0 certified or clean, 2 validation violations or a failed
replay, 3 inconclusive, 64 usage errors, 65 unreadable or malformed input.
"""

import argparse
import json
import logging
import sys

from tunnelcert import codec, settings
from tunnelcert.criteria import certify as certification
from tunnelcert.criteria import replay, thresholds
from tunnelcert.pattern import io, validation


EXIT_OK = 0
EXIT_FAILED = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64
EXIT_DATA = 65

FORMATS = ('text', 'json')

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class UsageError(Error):

    """The command line is malformed."""


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError('%s: %s' % (self.prog, message))


def _n_max(raw):
    value = int(raw)
    if value < 3:
        raise argparse.ArgumentTypeError('n_max must be at least 3')
    return value


def _window(raw):
    value = int(raw)
    if value < 0:
        raise argparse.ArgumentTypeError('window must be nonnegative')
    return value


def _tolerance(raw):
    try:
        return settings.check_tolerance(raw)
    except settings.SettingsError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    parser = _Parser(prog='tcert',
                     description='Unknotting tunnel certifier for '
                                 'ball-and-beam patterns.')
    parser.add_argument('--log-level', default='WARNING',
                        help='logging level for diagnostics on stderr')
    commands = parser.add_subparsers(dest='command', metavar='command',
                                     parser_class=_Parser)
    commands.required = True

    p = commands.add_parser('validate', help='check a pattern file')
    p.add_argument('pattern')
    p.add_argument('--window', type=_window)
    p.add_argument('--tol', type=_tolerance)
    p.add_argument('--format', choices=FORMATS, default='text')

    p = commands.add_parser('certify', help='certify a pattern')
    p.add_argument('pattern')
    p.add_argument('--n-max', type=_n_max)
    p.add_argument('--window', type=_window)
    p.add_argument('--tol', type=_tolerance)
    p.add_argument('--report', help='write the certificate here')
    p.add_argument('--format', choices=FORMATS, default='text')
    p.add_argument('--prop5-bound', choices=thresholds.PROP5_BOUNDS)

    p = commands.add_parser('thresholds', help='print the g thresholds')
    p.add_argument('--prop5-bound', choices=thresholds.PROP5_BOUNDS)

    p = commands.add_parser('verify', help='replay a JSON certificate')
    p.add_argument('pattern')
    p.add_argument('certificate')
    p.add_argument('--tol', type=_tolerance)
    return parser


def _pick(value, default):
    return default if value is None else value


def _load(path, tol):
    try:
        return io.load_pattern(path, tol)
    except (IOError, OSError) as e:
        raise io.PatternError('cannot read %s: %s' % (path, e.strerror))


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w', newline='\n') as f:
        f.write(text)


def run_validate(args, found):
    tol = _pick(args.tol, found.tolerance)
    p = _load(args.pattern, tol)
    report = validation.validate_pattern(p, _pick(args.window, found.window),
                                         tol)
    if args.format == 'json':
        _emit(codec.dumps(report.to_dict()))
    else:
        _emit(report.to_text())
    return EXIT_OK if report.clean else EXIT_FAILED


def run_certify(args, found):
    options = certification.CertifyOptions(
        n_max=_pick(args.n_max, found.n_max),
        window=_pick(args.window, found.window),
        tol=_pick(args.tol, found.tolerance),
        workers=found.threads,
        prop5_bound=_pick(args.prop5_bound, found.prop5_bound))
    p = _load(args.pattern, options.tol)
    report = validation.validate_pattern(p, options.window, options.tol)
    if not report.clean:
        for v in report.violations:
            sys.stderr.write('%s: %s: %s\n' % (args.pattern, v.kind,
                                                v.message))
        return EXIT_DATA
    cert = certification.certify(p, options)
    _emit(cert.to_json() if args.format == 'json' else cert.to_text(),
          args.report)
    return EXIT_OK if cert.is_tunnel else EXIT_INCONCLUSIVE


def run_thresholds(args, found):
    t = thresholds.compute_thresholds(_pick(args.prop5_bound,
                                            found.prop5_bound))
    _emit('prop4 %.10g\nprop5 %.10g (%s)\nelder %.10g\n'
          % (t.t4, t.t5, t.t5_source, t.t_es))
    return EXIT_OK


def run_verify(args, found):
    tol = _pick(args.tol, found.tolerance)
    p = _load(args.pattern, tol)
    try:
        with open(args.certificate, 'rb') as f:
            cert = json.loads(f.read().decode('utf-8'))
    except (IOError, OSError) as e:
        raise replay.ReplayError('cannot read %s: %s' % (args.certificate,
                                                         e.strerror))
    except (UnicodeDecodeError, ValueError) as e:
        raise replay.ReplayError('%s is not JSON: %s' % (args.certificate, e))
    if not isinstance(cert, dict):
        raise replay.ReplayError('%s is not a certificate object' %
                                 args.certificate)
    problems = replay.check_certificate(cert, p, tol)
    if problems:
        _emit(''.join('problem: %s\n' % problem for problem in problems))
        return EXIT_FAILED
    _emit('certificate reproduced: %s %s\n' % (cert['verdict'],
                                                cert['rule'] or ''))
    return EXIT_OK


COMMANDS = {
    'validate': run_validate,
    'certify': run_certify,
    'thresholds': run_thresholds,
    'verify': run_verify,
}


def main(argv=None):
    """Runs the command line tool.

    Args:
        argv (list): Arguments without the program name; sys.argv[1:] by
            default.

    Returns:
        The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write('%s\n' % e)
        return EXIT_USAGE

    level = getattr(logging, args.log_level.upper(), None)
    if not isinstance(level, int):
        sys.stderr.write('tcert: unknown log level %r\n' % args.log_level)
        return EXIT_USAGE
    logging.basicConfig(level=level)

    try:
        found = settings.find_settings()
        return COMMANDS[args.command](args, found)
    except settings.SettingsError as e:
        sys.stderr.write('tcert: settings: %s\n' % e)
        return EXIT_USAGE
    except io.PatternError as e:
        sys.stderr.write('tcert: %s: %s\n' % (args.pattern, e))
        return EXIT_DATA
    except replay.ReplayError as e:
        sys.stderr.write('tcert: %s\n' % e)
        return EXIT_DATA
