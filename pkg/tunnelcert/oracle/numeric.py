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

import numpy as np
from scipy import integrate

from tunnelcert.geom import horoball


MIN_STEPS = 1000

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class DomainError(Error):

    """The integration was asked for too few steps."""


def _even(steps):
    return steps + (steps % 2)


def _log_graded(lo, hi, steps):
    """Integral of d(theta) / sin(theta) over [lo, hi] within (0, pi/2].

    With theta = e^u the integrand becomes theta / sin(theta), which stays
    between 1 and pi/2 however close lo is to 0.
    """
    if hi <= lo:
        return 0.0
    u = np.linspace(math.log(lo), math.log(hi), _even(steps) + 1)
    theta = np.exp(u)
    return float(integrate.simpson(theta / np.sin(theta), x=u))


def _arc_angles(r1, r2, b):
    """Angles on the semicircle of radius b where it leaves each ball.

    Measured from the first center's side, so the clipped arc runs from
    the first angle to the second.
    """
    first = math.atan2(2.0 * b * r1, b * b - r1 * r1)
    second = math.atan2(2.0 * b * r2, r2 * r2 - b * b)
    return first, second


def numeric_geodesic_length(h1, h2, steps=MIN_STEPS, tol=horoball.TOLERANCE):
    """Hyperbolic length of a beam by integrating ds = |dx| / z.

    On the semicircle of radius b the integrand is d(theta) / sin(theta).
    The angle range is split at the apex and each half is integrated with
    composite Simpson on a logarithmic grid; a vertical beam integrates
    dz / z on a logarithmic grid between 2r and 1.

    Args:
        h1 (Horoball): A horoball.
        h2 (Horoball): Another horoball.
        steps (int): Simpson intervals per piece, rounded up to even.
        tol (float): Tangency tolerance.

    Returns:
        The length of the clipped geodesic, 0.0 for tangent balls.

    Raises:
        DomainError: steps is below MIN_STEPS.
        OverlappingBalls: The interiors intersect.
    """
    if steps < MIN_STEPS:
        raise DomainError('need at least %d steps, got %s' % (MIN_STEPS,
                                                               steps))
    kind = horoball.balls_disjoint(h1, h2, tol)
    if kind == horoball.OVERLAP:
        raise horoball.OverlappingBalls(h1, h2)
    if kind == horoball.TANGENT:
        return 0.0

    if h1.is_infinity or h2.is_infinity:
        finite = h2 if h1.is_infinity else h1
        u = np.linspace(math.log(finite.top), 0.0, _even(steps) + 1)
        return float(integrate.simpson(np.ones_like(u), x=u))

    b = h1.center.distance_to(h2.center) / 2.0
    first, second = _arc_angles(h1.radius, h2.radius, b)
    apex = math.pi / 2.0
    total = 0.0
    if first < apex:
        total += _log_graded(first, min(second, apex), steps)
    if second > apex:
        total += _log_graded(math.pi - second,
                             math.pi - max(first, apex), steps)
    logger.debug('numeric beam length %r over angles (%r, %r)', total,
                 first, second)
    return total
