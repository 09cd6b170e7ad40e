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

from tunnelcert.blocking.model import BlockingPair, Crossing, NotBlocked, Wall
from tunnelcert.geom import horoball
from tunnelcert.geom.horoball import TOLERANCE
from tunnelcert.geom.model import Point2
from tunnelcert.pattern.validation import DEFAULT_WINDOW, concrete_beam


logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class Indeterminate(Error):

    """A beam meets the wall in a way the parity test cannot classify."""

    def __init__(self, reason, point=None, beam=None):
        """Constructor.

        Args:
            reason (str): What is degenerate about the crossing.
            point (Point2): Where on the boundary plane it happens.
            beam (ConcreteBeam): The beam, once known.
        """
        super(Indeterminate, self).__init__(reason)
        self.reason = reason
        self.point = point
        self.beam = beam


class ConsistencyError(Error):

    """A blocking pair violates the blocking-ratio bound."""


def _cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def _side(value, tol):
    if value > tol:
        return 1
    if value < -tol:
        return -1
    return 0


def wall_envelope_height(b, s, tol=TOLERANCE):
    """Height of the bracelet's surface under the wall at arclength s.

    Args:
        b (Bracelet): The bracelet.
        s (float): Arclength position along its polyline.
        tol (float): Geometric tolerance.

    Returns:
        The maximum of the connecting beam's semicircle and the upper
        hemispheres of the two adjacent balls over that point.
    """
    return Wall.from_bracelet(b, tol).envelope(s)


def _classify(arc, wall, t, point, height, envelope, tol, kind):
    """Returns True for a counted crossing, False for one to ignore."""
    low, high = arc.span_parameters()
    chord = arc.first.distance_to(arc.second)
    slack = tol / chord
    if t < low - slack or t > high + slack:
        # inside one of the beam's own balls
        return False
    if height > 1.0 + tol or height < envelope - tol:
        return False
    if abs(height - envelope) <= tol or abs(height - 1.0) <= tol:
        raise Indeterminate('beam meets the wall at its boundary '
                            '(height %r, envelope %r)' % (height, envelope),
                            point)
    if not arc.degenerate and (abs(t - low) <= slack or
                               abs(t - high) <= slack):
        raise Indeterminate('beam leaves a ball on the wall', point)
    if kind != 'transversal':
        raise Indeterminate('beam %s the polyline at a vertex' % kind, point)
    return True


def _vertical_crossings(arc, wall, tol):
    center = arc.first
    if wall.distance_to(center) > tol:
        return []
    bottom = arc.span[0]
    if bottom < 1.0 - tol:
        raise Indeterminate('vertical beam rises inside the wall', center)
    return []


def beam_crossings(arc, wall, tol=TOLERANCE):
    """The transversal crossings of a beam's clipped arc with a wall.

    Crossings are found where the projected chord between the beam's centers
    meets the polyline, and kept when they lie on the clipped span at a
    height strictly between the envelope and 1. A crossing through a
    polyline vertex counts once when the neighboring vertices lie on
    opposite sides of the chord.

    Args:
        arc (GeodesicArc): The candidate beam's arc.
        wall (Wall): The wall of a bracelet.
        tol (float): Geometric tolerance.

    Returns:
        A list of Crossing tuples.

    Raises:
        Indeterminate: A crossing is tangential, grazes a vertex, runs along
            the polyline or touches the wall's boundary.
    """
    if arc.vertical:
        return _vertical_crossings(arc, wall, tol)
    p0, p1 = arc.first, arc.second
    dx, dy = p1.x - p0.x, p1.y - p0.y
    chord = math.hypot(dx, dy)
    found = []

    for index, (q0, q1) in enumerate(zip(wall.points, wall.points[1:])):
        ex, ey = q1.x - q0.x, q1.y - q0.y
        segment = math.hypot(ex, ey)
        wx, wy = q0.x - p0.x, q0.y - p0.y
        denom = _cross(dx, dy, ex, ey)
        if abs(denom) <= tol * chord * segment:
            if abs(_cross(dx, dy, wx, wy)) <= tol * chord:
                ta = (wx * dx + wy * dy) / (chord * chord)
                tb = ((q1.x - p0.x) * dx + (q1.y - p0.y) * dy) / (chord * chord)
                low, high = arc.span_parameters()
                if max(min(ta, tb), low) <= min(max(ta, tb), high):
                    raise Indeterminate('beam runs along the polyline', q0)
            continue
        t = _cross(wx, wy, ex, ey) / denom
        u = _cross(wx, wy, dx, dy) / denom
        slack = tol / segment
        if u <= slack or u >= 1.0 - slack or t < 0.0 or t > 1.0:
            continue
        point = Point2(p0.x + t * dx, p0.y + t * dy)
        height = arc.height_at(point)
        envelope = wall.segment_height(index, point)
        if _classify(arc, wall, t, point, height, envelope, tol,
                     'transversal'):
            found.append(Crossing(point, height, index, None))

    last = len(wall.points) - 1
    for index, q in enumerate(wall.points):
        offset = _cross(dx, dy, q.x - p0.x, q.y - p0.y) / chord
        if abs(offset) > tol:
            continue
        t = ((q.x - p0.x) * dx + (q.y - p0.y) * dy) / (chord * chord)
        if t < 0.0 or t > 1.0:
            continue
        if index in (0, last):
            kind = 'meets an end of'
        else:
            sides = [_side(_cross(dx, dy, r.x - p0.x, r.y - p0.y) / chord, tol)
                     for r in (wall.points[index - 1], wall.points[index + 1])]
            kind = ('transversal' if sides[0] * sides[1] < 0 else 'grazes')
        height = arc.height_at(q)
        if _classify(arc, wall, t, q, height, wall.vertex_height(index), tol,
                     kind):
            found.append(Crossing(q, height, None, index))
    return found


def beam_punctures_wall(arc, b, tol=TOLERANCE):
    """Number of transversal crossings of a beam with a bracelet's wall.

    Args:
        arc (GeodesicArc): The beam's arc; the beam is not one of the
            bracelet's and its balls are disjoint from the bracelet's.
        b (Bracelet): The bracelet.
        tol (float): Geometric tolerance.

    Returns:
        The crossing count. An odd count means the beam punctures the disk.

    Raises:
        Indeterminate: A crossing is degenerate.
    """
    return len(beam_crossings(arc, Wall.from_bracelet(b, tol), tol))


def check_lemma34(b, pair, g, tol=TOLERANCE):
    """Whether a blocking pair is as large as the blocking-ratio bound says.

    Args:
        b (Bracelet): The blocked bracelet.
        pair (BlockingPair): Its blocking pair.
        g (float): The beam length, at most ln 2.
        tol (float): Tolerance on radii.

    Returns:
        True iff pair.larger_radius >= min_blocking_ratio(g) * b.min_radius.
    """
    ratio = horoball.min_blocking_ratio(g, tol)
    return pair.larger_radius >= ratio * b.min_radius - tol


def search_bound(b, g):
    """The polyline bounding box inflated by e^{g/2}.

    Every blocking beam has its centers at most e^{g/2} apart, so both of
    them lie in this box.
    """
    xmin, ymin, xmax, ymax = Wall.from_bracelet(b).bounding_box()
    pad = math.exp(g / 2.0)
    return (xmin - pad, ymin - pad, xmax + pad, ymax + pad)


def _candidates(b, p, box, window):
    """Concrete beams that may reach the wall, in canonical order."""
    members = set(ref for ref in b.nodes if not ref.is_infinity)
    xmin, ymin, xmax, ymax = Wall.from_bracelet(b).bounding_box()
    found = []
    for index, beam in enumerate(p.beams):
        anchor = p.entry(beam.finite_end.id).center
        (m_lo, m_hi), (n_lo, n_hi) = p.lattice.offsets_covering(anchor, box)
        m_lo, n_lo = min(m_lo, -window), min(n_lo, -window)
        m_hi, n_hi = max(m_hi, window), max(n_hi, window)
        for m in range(m_lo, m_hi + 1):
            for n in range(n_lo, n_hi + 1):
                lift = concrete_beam(p, index, (m, n))
                if lift.a in members or lift.b in members:
                    continue
                balls = [h for h in (lift.h1, lift.h2) if not h.is_infinity]
                xs = [h.center.x for h in balls]
                ys = [h.center.y for h in balls]
                if (max(xs) < xmin or min(xs) > xmax or
                        max(ys) < ymin or min(ys) > ymax):
                    continue
                found.append(lift)
    found.sort(key=lambda lift: lift.sort_key())
    return found


def find_blocking(b, p, window=DEFAULT_WINDOW, tol=TOLERANCE):
    """Looks for a listed beam that punctures the bracelet's wall.

    Args:
        b (Bracelet): A bracelet from enumerate_bracelets.
        p (BallBeamPattern): The validated pattern.
        window (int): Offsets in [-window, window]^2 are always scanned, in
            addition to every offset that can reach the search bound.
        tol (float): Geometric tolerance.

    Returns:
        The first BlockingPair in canonical beam order, or NotBlocked with
        the bound that was searched.

    Raises:
        Indeterminate: Some beam meets the wall degenerately.
        ConsistencyError: The pair found is smaller than the blocking-ratio
            bound allows (g <= ln 2 only).
    """
    wall = Wall.from_bracelet(b, tol)
    box = search_bound(b, p.g)
    candidates = _candidates(b, p, box, window)
    for lift in candidates:
        arc = horoball.beam_arc(lift.h1, lift.h2, tol)
        try:
            crossings = beam_crossings(arc, wall, tol)
        except Indeterminate as e:
            e.beam = lift
            logger.info('beam %s %s-%s is indeterminate against %r: %s',
                        lift.index, lift.a, lift.b, b, e.reason)
            raise
        if len(crossings) % 2 == 1:
            larger = max(h.radius for h in (lift.h1, lift.h2)
                         if not h.is_infinity)
            pair = BlockingPair(lift, larger, crossings)
            logger.debug('%r blocked by %r', b, pair)
            if p.g <= horoball.LN2 + tol and not check_lemma34(b, pair, p.g, tol):
                raise ConsistencyError(
                    'blocking pair %r is smaller than the blocking-ratio bound '
                    'for %r at g=%r' % (pair, b, p.g))
            return pair

    required = None
    unconditional = False
    if p.g <= horoball.LN2 + tol:
        required = horoball.min_blocking_ratio(p.g, tol) * b.min_radius
        unconditional = required >= p.completeness_radius - tol
    logger.debug('%r not blocked by %d candidate beams', b, len(candidates))
    return NotBlocked(box, window, len(candidates), required, unconditional)
