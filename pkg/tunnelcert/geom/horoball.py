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

from tunnelcert.geom.model import GeodesicArc


TOLERANCE = 1e-9
LN2 = math.log(2.0)

DISJOINT = 'Disjoint'
TANGENT = 'Tangent'
OVERLAP = 'Overlap'

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class DomainError(Error):

    """An argument lies outside the domain of a formula."""


class OverlappingBalls(Error):

    """Two horoballs have intersecting interiors."""

    def __init__(self, h1, h2):
        super(OverlappingBalls, self).__init__(
            'horoballs overlap: %r and %r' % (h1, h2))
        self.balls = (h1, h2)


def vertical_distance(z1, z2):
    """Hyperbolic distance between two points on the same vertical line.

    Args:
        z1 (float): The upper height.
        z2 (float): The lower height.

    Returns:
        ln(z1 / z2).

    Raises:
        DomainError: A height is not positive or z1 < z2.
    """
    if z1 <= 0 or z2 <= 0:
        raise DomainError('heights must be positive, got %s and %s' % (z1, z2))
    if z1 < z2:
        raise DomainError('expected z1 >= z2, got %s < %s' % (z1, z2))
    return math.log(z1 / z2)


def center_separation(r1, r2, g):
    """Distance between the centers of two balls joined by a beam of length g.

    Args:
        r1 (float): Radius of the first ball.
        r2 (float): Radius of the second ball.
        g (float): The beam length.

    Returns:
        2 sqrt(r1 r2 e^g).

    Raises:
        DomainError: g is negative or a radius is not positive.
    """
    if g < 0:
        raise DomainError('beam length must be nonnegative, got %s' % g)
    if r1 <= 0 or r2 <= 0:
        raise DomainError('radii must be positive, got %s and %s' % (r1, r2))
    return 2.0 * math.sqrt(r1 * r2 * math.exp(g))


def balls_disjoint(h1, h2, tol=TOLERANCE):
    """Classifies a pair of horoballs.

    Args:
        h1 (Horoball): A horoball.
        h2 (Horoball): Another horoball; at most one of the two is infinity.
        tol (float): Tangency tolerance on Euclidean distances.

    Returns:
        One of DISJOINT, TANGENT or OVERLAP.
    """
    if h1.is_infinity and h2.is_infinity:
        raise DomainError('cannot compare the ball at infinity with itself')
    if h1.is_infinity or h2.is_infinity:
        finite = h2 if h1.is_infinity else h1
        gap = 1.0 - finite.top
    else:
        gap = (h1.center.distance_to(h2.center) -
               2.0 * math.sqrt(h1.radius * h2.radius))
    if gap > tol:
        return DISJOINT
    if gap >= -tol:
        return TANGENT
    return OVERLAP


def beam_length(h1, h2, tol=TOLERANCE):
    """Length of the geodesic joining the boundaries of two horoballs.

    Args:
        h1 (Horoball): A horoball.
        h2 (Horoball): Another horoball.
        tol (float): Tangency tolerance.

    Returns:
        ln(b^2 / (r1 r2)) for finite balls with centers 2b apart, -ln(2r)
        for a finite ball and the ball at infinity, and exactly 0.0 when the
        balls are tangent.

    Raises:
        OverlappingBalls: The interiors intersect.
    """
    kind = balls_disjoint(h1, h2, tol)
    if kind == OVERLAP:
        raise OverlappingBalls(h1, h2)
    if kind == TANGENT:
        return 0.0
    if h1.is_infinity or h2.is_infinity:
        finite = h2 if h1.is_infinity else h1
        return -math.log(2.0 * finite.radius)
    b = h1.center.distance_to(h2.center) / 2.0
    return math.log(b * b / (h1.radius * h2.radius))


def beam_arc(h1, h2, tol=TOLERANCE):
    """The clipped geodesic arc realizing a beam.

    Args:
        h1 (Horoball): The first ball.
        h2 (Horoball): The second ball.
        tol (float): Tangency tolerance.

    Returns:
        A GeodesicArc. A finite ball and the ball at infinity give a vertical
        ray above the center from height 2r to 1; tangent balls give a
        degenerate arc at the tangency point, of height 2 r1 r2 / (r1 + r2).

    Raises:
        OverlappingBalls: The interiors intersect.
    """
    kind = balls_disjoint(h1, h2, tol)
    if kind == OVERLAP:
        raise OverlappingBalls(h1, h2)
    if h1.is_infinity or h2.is_infinity:
        finite = h2 if h1.is_infinity else h1
        return GeodesicArc(finite.center, None, 0.0,
                           (min(finite.top, 1.0), 1.0),
                           degenerate=(kind == TANGENT))
    r1, r2 = h1.radius, h2.radius
    b = h1.center.distance_to(h2.center) / 2.0
    if kind == TANGENT:
        s = b * (r1 - r2) / (r1 + r2)
        return GeodesicArc(h1.center, h2.center, b, (s, s), degenerate=True)
    b2 = b * b
    low = b * (r1 * r1 - b2) / (b2 + r1 * r1)
    high = b * (b2 - r2 * r2) / (b2 + r2 * r2)
    return GeodesicArc(h1.center, h2.center, b, (low, high))


def min_blocking_ratio(g, tol=TOLERANCE):
    """Smallest radius ratio of a blocking pair to the smallest bracelet ball.

    Args:
        g (float): The beam length, 0 <= g <= ln 2.
        tol (float): Slack allowed outside the domain.

    Returns:
        (2 + sqrt(4 - e^{2g})) / e^g; 2 + sqrt(3) at g = 0 and 1 at ln 2.

    Raises:
        DomainError: g is outside [0, ln 2], where the bound is vacuous.
    """
    if g < -tol or g > LN2 + tol:
        raise DomainError('blocking ratio needs 0 <= g <= ln 2, got %s' % g)
    g = min(max(g, 0.0), LN2)
    eg = math.exp(g)
    return (2.0 + math.sqrt(max(4.0 - eg * eg, 0.0))) / eg


def tangency_height(r1, r2):
    """Height of the tangency point of two tangent finite balls."""
    return 2.0 * r1 * r2 / (r1 + r2)
