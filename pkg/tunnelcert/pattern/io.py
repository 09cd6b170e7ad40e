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

import json
import logging
import math

from tunnelcert import codec
from tunnelcert.geom.horoball import TOLERANCE
from tunnelcert.geom.model import Horoball, Point2
from tunnelcert.pattern.model import (
    BallBeamPattern, BallEntry, BallRef, BeamRef, INF_ID, Lattice)


FORMAT_VERSION = 1
MAX_RADIUS = 0.5

TOP_LEVEL_KEYS = ('version', 'cusp_count', 'orientable', 'lattice', 'g',
                  'epsilon', 'completeness_radius', 'balls', 'beams')

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class PatternError(Error):

    """A pattern file is malformed or breaks a pattern invariant."""

    def __init__(self, message, line=None, column=None, path=None):
        """Constructor.

        Args:
            message (str): What is wrong.
            line (int): 1-based line of a syntax error.
            column (int): 1-based column of a syntax error.
            path (str): JSON path of the offending value, like
                'balls[2].radius'.
        """
        if line is not None:
            text = 'line %s, column %s: %s' % (line, column, message)
        elif path is not None:
            text = '%s: %s' % (path, message)
        else:
            text = message
        super(PatternError, self).__init__(text)
        self.line = line
        self.column = column
        self.path = path


def _number(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise PatternError('expected a number, got %r' % (value,), path=path)
    if math.isnan(value) or math.isinf(value):
        raise PatternError('number must be finite', path=path)
    return float(value)


def _integer(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise PatternError('expected an integer, got %r' % (value,), path=path)
    return value


def _pair(value, path, convert):
    if not isinstance(value, list) or len(value) != 2:
        raise PatternError('expected a pair [x, y]', path=path)
    return (convert(value[0], '%s[0]' % path), convert(value[1], '%s[1]' % path))


def _object(value, path, keys):
    if not isinstance(value, dict):
        raise PatternError('expected an object', path=path)
    missing = [k for k in keys if k not in value]
    if missing:
        raise PatternError('missing key %r' % missing[0], path=path)
    unknown = sorted(k for k in value if k not in keys)
    if unknown:
        raise PatternError('unknown key %r' % unknown[0], path=path)
    return value


def _parse_ball(raw, path, lattice, cusp_count, tol):
    _object(raw, path, ('id', 'center', 'radius', 'cusp'))
    ball_id = raw['id']
    if not isinstance(ball_id, str) or not ball_id or ball_id == INF_ID:
        raise PatternError('ball id must be a nonempty string other than %r'
                           % INF_ID, path='%s.id' % path)
    center = Point2(*_pair(raw['center'], '%s.center' % path, _number))
    radius = _number(raw['radius'], '%s.radius' % path)
    if radius <= 0 or radius > MAX_RADIUS:
        raise PatternError('radius %r out of (0, 1/2]' % radius,
                           path='%s.radius' % path)
    cusp = _integer(raw['cusp'], '%s.cusp' % path)
    if cusp not in range(cusp_count):
        raise PatternError('cusp %d out of range for %d cusp(s)'
                           % (cusp, cusp_count), path='%s.cusp' % path)
    u, v = lattice.coordinates(center)
    if not (-tol <= u < 1 - tol and -tol <= v < 1 - tol):
        raise PatternError('center not in the fundamental parallelogram '
                           '(lattice coordinates %r, %r)' % (u, v),
                           path='%s.center' % path)
    return BallEntry(ball_id, Horoball(center, radius), cusp)


def _parse_end(raw, path, known):
    _object(raw, path, ('id', 'offset'))
    ball_id = raw['id']
    if not isinstance(ball_id, str):
        raise PatternError('expected a ball id', path='%s.id' % path)
    if ball_id != INF_ID and ball_id not in known:
        raise PatternError('unknown ball id %r' % ball_id, path='%s.id' % path)
    offset = _pair(raw['offset'], '%s.offset' % path, _integer)
    if ball_id == INF_ID and offset != (0, 0):
        raise PatternError('the ball at infinity takes offset [0, 0]',
                           path='%s.offset' % path)
    return BallRef(ball_id, offset)


def _parse_beam(raw, path, known, cusp_count):
    _object(raw, path, ('a', 'b'))
    a = _parse_end(raw['a'], '%s.a' % path, known)
    b = _parse_end(raw['b'], '%s.b' % path, known)
    if a.is_infinity and b.is_infinity:
        raise PatternError('beam joins the ball at infinity to itself',
                           path=path)
    if a == b:
        raise PatternError('beam joins a ball to itself', path=path)
    if a.is_infinity:
        if b.offset != (0, 0):
            raise PatternError('offset not canonical: the finite end of a '
                               'vertical beam takes offset [0, 0]',
                               path='%s.b.offset' % path)
    elif a.offset != (0, 0):
        raise PatternError('offset not canonical: end a takes offset [0, 0]',
                           path='%s.a.offset' % path)
    if cusp_count == 2:
        cusps = [0 if e.is_infinity else known[e.id].cusp for e in (a, b)]
        if cusps[0] == cusps[1]:
            raise PatternError('two-cusp beams must run from cusp 0 to cusp '
                               '1, this one stays in cusp %d' % cusps[0],
                               path=path)
    return BeamRef(a, b)


def parse_pattern(data, tol=TOLERANCE):
    """Parses a pattern file.

    Args:
        data (bytes): UTF-8 JSON text in the pattern file format.
        tol (float): Tolerance for the canonical-center check.

    Returns:
        A BallBeamPattern whose structural invariants hold.

    Raises:
        PatternError: Syntax errors carry line and column; every other
            error names the JSON path of the offending value.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise PatternError('not UTF-8: %s' % e)
    try:
        raw = json.loads(data)
    except ValueError as e:
        raise PatternError(getattr(e, 'msg', str(e)),
                           line=getattr(e, 'lineno', None),
                           column=getattr(e, 'colno', None))

    _object(raw, '$', TOP_LEVEL_KEYS)
    if _integer(raw['version'], 'version') != FORMAT_VERSION:
        raise PatternError('unsupported version %r' % raw['version'],
                           path='version')
    cusp_count = _integer(raw['cusp_count'], 'cusp_count')
    if cusp_count not in (1, 2):
        raise PatternError('cusp_count must be 1 or 2', path='cusp_count')
    orientable = raw['orientable']
    if not isinstance(orientable, bool):
        raise PatternError('expected true or false', path='orientable')

    _object(raw['lattice'], 'lattice', ('t1', 't2'))
    lattice = Lattice(_pair(raw['lattice']['t1'], 'lattice.t1', _number),
                      _pair(raw['lattice']['t2'], 'lattice.t2', _number))
    if abs(lattice.determinant) <= tol:
        raise PatternError('lattice generators are linearly dependent',
                           path='lattice')

    g = _number(raw['g'], 'g')
    if g < 0:
        raise PatternError('g must be nonnegative', path='g')
    epsilon = _number(raw['epsilon'], 'epsilon')
    completeness_radius = _number(raw['completeness_radius'],
                                  'completeness_radius')
    if epsilon <= 0:
        raise PatternError('epsilon must be positive', path='epsilon')
    if not epsilon <= completeness_radius <= MAX_RADIUS:
        raise PatternError('completeness_radius must lie in [epsilon, 1/2]',
                           path='completeness_radius')

    if not isinstance(raw['balls'], list):
        raise PatternError('expected a list', path='balls')
    known = {}
    balls = []
    for i, item in enumerate(raw['balls']):
        entry = _parse_ball(item, 'balls[%d]' % i, lattice, cusp_count, tol)
        if entry.id in known:
            raise PatternError('duplicate ball id %r' % entry.id,
                               path='balls[%d].id' % i)
        known[entry.id] = entry
        balls.append(entry)

    if not isinstance(raw['beams'], list):
        raise PatternError('expected a list', path='beams')
    beams = [_parse_beam(item, 'beams[%d]' % i, known, cusp_count)
             for i, item in enumerate(raw['beams'])]

    logger.debug('parsed pattern with %d balls and %d beams, g=%s',
                 len(balls), len(beams), g)
    return BallBeamPattern(cusp_count, orientable, lattice, balls, beams, g,
                           epsilon, completeness_radius)


def _end_dict(ref):
    return {'id': ref.id, 'offset': [ref.offset[0], ref.offset[1]]}


def pattern_to_dict(p):
    """Plain-data form of a pattern, with keys in file order."""
    return {
        'version': FORMAT_VERSION,
        'cusp_count': p.cusp_count,
        'orientable': p.orientable,
        'lattice': {
            't1': [float(p.lattice.t1.x), float(p.lattice.t1.y)],
            't2': [float(p.lattice.t2.x), float(p.lattice.t2.y)],
        },
        'g': float(p.g),
        'epsilon': float(p.epsilon),
        'completeness_radius': float(p.completeness_radius),
        'balls': [{'id': b.id,
                   'center': [float(b.center.x), float(b.center.y)],
                   'radius': float(b.radius),
                   'cusp': b.cusp} for b in p.balls],
        'beams': [{'a': _end_dict(beam.a), 'b': _end_dict(beam.b)}
                  for beam in p.beams],
    }


def serialize_pattern(p):
    """Serializes a pattern to its canonical file text.

    Floats carry 17 significant digits and the text ends with a newline, so
    parsing the result and serializing again reproduces it byte for byte.
    """
    return codec.dumps(pattern_to_dict(p))


def load_pattern(path, tol=TOLERANCE):
    """Reads and parses a pattern file."""
    with open(path, 'rb') as f:
        return parse_pattern(f.read(), tol=tol)
