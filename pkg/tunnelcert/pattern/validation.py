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

import logging
import math

from tunnelcert.geom import horoball
from tunnelcert.geom.horoball import TOLERANCE
from tunnelcert.pattern.model import (
    BallRef, BeamRef, ConcreteBall, ConcreteBeam, INF_REF, ValidationReport,
    Violation)


DEFAULT_WINDOW = 2

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class PreconditionError(Error):

    """An operation was called on a pattern it does not apply to."""


def window_offsets(window):
    """All offsets in [-window, window]^2, in lexicographic order."""
    if window < 0:
        raise ValueError('window must be nonnegative, got %s' % window)
    span = range(-window, window + 1)
    return [(m, n) for m in span for n in span]


def _positive(offset):
    return offset > (0, 0)


def _pairs(p, window):
    """Yields (i, j, offset) for every unordered pair of distinct translates.

    Pairs of different orbits take every offset; a ball and its own
    translates take only offsets after (0, 0), so each pair appears once.
    """
    offsets = window_offsets(window)
    for i in range(len(p.balls)):
        for j in range(i, len(p.balls)):
            for offset in offsets:
                if i == j and not _positive(offset):
                    continue
                yield i, j, offset


def concrete_beam(p, index, offset=(0, 0)):
    """The lift of beam orbit ``index`` translated by a lattice offset."""
    ref = p.beams[index].translated(offset)
    return ConcreteBeam(index, ref.a, ref.b, p.concrete(ref.a),
                        p.concrete(ref.b))


def expand_window(p, window):
    """Develops the lattice orbits of a pattern over a window of offsets.

    Args:
        p (BallBeamPattern): The pattern.
        window (int): Offsets range over [-window, window]^2.

    Returns:
        (balls, beams): ConcreteBall entries ordered by id then offset, and
        ConcreteBeam entries ordered by beam index then offset.
    """
    offsets = window_offsets(window)
    balls = []
    for entry in sorted(p.balls, key=lambda e: e.id):
        for offset in offsets:
            balls.append(ConcreteBall(
                entry.ball.translated(p.lattice.vector(offset)), entry.cusp,
                entry.id, offset))
    beams = [concrete_beam(p, index, offset)
             for index in range(len(p.beams)) for offset in offsets]
    return balls, beams


def _describe_end(ref):
    if ref.is_infinity:
        return ref.id
    if ref.offset == (0, 0):
        return ref.id
    return '%s%s' % (ref.id, ref.offset)


def describe_beam(p, index):
    beam = p.beams[index]
    return 'beam %d (%s - %s)' % (index, _describe_end(beam.a),
                                  _describe_end(beam.b))


def validate_pattern(p, window=DEFAULT_WINDOW, tol=TOLERANCE):
    """Checks a pattern against the geometry it claims.

    Args:
        p (BallBeamPattern): The pattern.
        window (int): Ball translates with offsets in [-window, window]^2
            are compared pairwise.
        tol (float): Geometric tolerance.

    Returns:
        A ValidationReport listing every overlap, every beam whose length is
        not g, every ball at the bottom of a vertical beam whose radius is
        not e^{-g}/2, and every listed ball smaller than epsilon. Beams
        passing through a third ball are not violations.
    """
    violations = []

    for entry in p.balls:
        if entry.radius < p.epsilon - tol:
            violations.append(Violation(
                'truncation', 'ball %s has radius %r below epsilon %r' % (
                    entry.id, entry.radius, p.epsilon), (BallRef(entry.id, (0, 0)),)))

    for i, j, offset in _pairs(p, window):
        a, b = p.balls[i], p.balls[j]
        h1 = a.ball
        h2 = b.ball.translated(p.lattice.vector(offset))
        if horoball.balls_disjoint(h1, h2, tol) == horoball.OVERLAP:
            distance = h1.center.distance_to(h2.center)
            violations.append(Violation(
                'overlap', 'balls %s and %s overlap (centers %r apart, '
                'need %r)' % (a.id, _describe_end(BallRef(b.id, offset)),
                              distance, 2 * math.sqrt(a.radius * b.radius)),
                (BallRef(a.id, (0, 0)), BallRef(b.id, offset))))

    vertical_radius = math.exp(-p.g) / 2.0
    for index, beam in enumerate(p.beams):
        if beam.is_vertical:
            entry = p.entry(beam.finite_end.id)
            if abs(entry.radius - vertical_radius) > tol:
                violations.append(Violation(
                    'vertical_radius', '%s: ball %s has radius %r, a vertical '
                    'beam of length g needs %r' % (
                        describe_beam(p, index), entry.id, entry.radius,
                        vertical_radius), (index,)))
            continue
        lift = concrete_beam(p, index)
        try:
            length = horoball.beam_length(lift.h1, lift.h2, tol)
        except horoball.OverlappingBalls:
            violations.append(Violation(
                'beam_length', '%s joins overlapping balls' %
                describe_beam(p, index), (index,)))
            continue
        if abs(length - p.g) > tol:
            violations.append(Violation(
                'beam_length', '%s has length %r, expected g = %r' % (
                    describe_beam(p, index), length, p.g), (index,)))

    report = ValidationReport(window, violations)
    logger.info('validated pattern over window %d: %d violation(s)',
                window, len(violations))
    return report


def infer_tangency_beams(p, window=DEFAULT_WINDOW, tol=TOLERANCE):
    """Beam orbits of a maximal cusp with a length-0 geodesic.

    When g = 0 every tangency of two balls (or of a ball with the ball at
    infinity) carries a beam of length 0 through the point of tangency.

    Args:
        p (BallBeamPattern): The pattern; its beam list is ignored.
        window (int): Offsets searched for tangent translates.
        tol (float): Tangency tolerance.

    Returns:
        One BeamRef per orbit of tangent pairs: finite pairs in (ball, ball,
        offset) order, then the vertical beams in ball order. With two cusps
        only pairs across the cusps are kept.

    Raises:
        PreconditionError: g is not 0 within the tolerance.
    """
    if abs(p.g) > tol:
        raise PreconditionError('tangency beams need g = 0, got %r' % p.g)
    beams = []
    for i, j, offset in _pairs(p, window):
        a, b = p.balls[i], p.balls[j]
        if p.cusp_count == 2 and a.cusp == b.cusp:
            continue
        h2 = b.ball.translated(p.lattice.vector(offset))
        if horoball.balls_disjoint(a.ball, h2, tol) == horoball.TANGENT:
            beams.append(BeamRef(BallRef(a.id, (0, 0)), BallRef(b.id, offset)))
    for entry in p.balls:
        if p.cusp_count == 2 and entry.cusp == 0:
            continue
        if abs(entry.ball.top - 1.0) <= tol:
            beams.append(BeamRef(BallRef(entry.id, (0, 0)), INF_REF))
    logger.debug('inferred %d tangency beam orbits', len(beams))
    return beams


def orbits_at_least(p, rho, tol=TOLERANCE):
    """The ball orbits with radius at least rho.

    There are finitely many of them in a genuine pattern, and under the
    completeness contract they are exactly the listed ones when rho is at
    least the completeness radius. Below it the list is only a lower bound.
    """
    if rho <= 0:
        raise ValueError('rho must be positive, got %s' % rho)
    if rho < p.completeness_radius - tol:
        logger.warning('radius %s is below the completeness radius %s; the '
                       'orbit list may be incomplete', rho,
                       p.completeness_radius)
    return [entry for entry in p.balls if entry.radius >= rho - tol]


def euclidean_sizes(p, rho, tol=TOLERANCE):
    """The distinct radii (largest first) among orbits with radius >= rho."""
    sizes = []
    for radius in sorted((e.radius for e in orbits_at_least(p, rho, tol)),
                         reverse=True):
        if not sizes or sizes[-1] - radius > tol:
            sizes.append(radius)
    return sizes
