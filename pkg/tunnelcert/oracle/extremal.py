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

from scipy import optimize

from tunnelcert.geom import horoball
from tunnelcert.geom.horoball import LN2, TOLERANCE
from tunnelcert.geom.model import Horoball
from tunnelcert.pattern.model import (
    BallBeamPattern, BallEntry, BallRef, BeamRef, INF_REF, Lattice)


# Lattice period of the synthetic patterns; wide enough that translates never
# meet the configuration.
PERIOD = 6.0

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class DomainError(Error):

    """A parameter is outside the range the construction is defined on."""


def _pattern(balls, beams, g):
    """A one-cusp pattern with the given balls, recentered into one cell."""
    shift = (PERIOD / 2.0, PERIOD / 2.0)
    entries = [BallEntry(name, ball.translated(shift))
               for name, ball in balls]
    refs = [BeamRef(BallRef(a, (0, 0)), BallRef(b, (0, 0))) if b != INF_REF.id
            else BeamRef(BallRef(a, (0, 0)), INF_REF) for a, b in beams]
    smallest = min(ball.radius for _, ball in balls)
    return BallBeamPattern(1, True, Lattice((PERIOD, 0.0), (0.0, PERIOD)),
                           entries, refs, g, smallest, smallest)


class Infeasible(object):

    def __init__(self, g, slack):
        """Constructor.

        Args:
            g (float): The beam length tried.
            slack (float): The negative Pythagorean slack.
        """
        self.g = g
        self.slack = slack

    @property
    def feasible(self):
        return False

    def __repr__(self):
        return u'<Infeasible g=%s slack=%s at %s>' % (self.g, self.slack,
                                                      id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class ExtremalFourBracelet(object):

    """The tightest blocked 4-bracelet H∞, a, c, b.

    The vertical balls a, b have radius e^{-g}/2 and sit on either side of
    the middle ball c. Blockers e, f of radius 1/2 are tangent to c, above
    and below it, and c has the largest radius the blockers allow, e^g/8.
    """

    BLOCKER_RADIUS = 0.5

    def __init__(self, g):
        self.g = g
        eg = math.exp(g)
        r = self.BLOCKER_RADIUS
        self.vertical_radius = 0.5 / eg
        self.middle_radius = r * eg / 4.0
        self.d_ac = horoball.center_separation(self.vertical_radius,
                                               self.middle_radius, g)
        self.d_ce = horoball.center_separation(self.middle_radius, r, 0.0)
        # blockers touch the vertical balls at the boundary
        self.d_ae = horoball.center_separation(self.vertical_radius, r, 0.0)
        self.slack = self.d_ac ** 2 + self.d_ce ** 2 - self.d_ae ** 2

    @property
    def feasible(self):
        return True

    def balls(self):
        """(id, Horoball) pairs with c at the origin."""
        r = self.BLOCKER_RADIUS
        return [
            ('a', Horoball((-self.d_ac, 0.0), self.vertical_radius)),
            ('c', Horoball((0.0, 0.0), self.middle_radius)),
            ('b', Horoball((self.d_ac, 0.0), self.vertical_radius)),
            ('e', Horoball((0.0, self.d_ce), r)),
            ('f', Horoball((0.0, -self.d_ce), r)),
        ]

    def to_pattern(self):
        """A one-cusp pattern with the bracelet and the blocking e-f beam."""
        beams = [('a', 'INF'), ('b', 'INF'), ('a', 'c'), ('c', 'b'),
                 ('e', 'f')]
        return _pattern(self.balls(), beams, self.g)

    def __repr__(self):
        return u'<ExtremalFourBracelet g=%s slack=%s at %s>' % (
            self.g, self.slack, id(self))


def extremal_four_bracelet(g):
    """The extremal blocked 4-bracelet at beam length g.

    The blockers can reach c only if a, c and the tangency with e form a
    right angle at c with room to spare: d(a, c)^2 + d(c, e)^2 >= d(a, e)^2,
    which reduces to e^{2g} >= 2. A slack within the tolerance of zero counts
    as feasible.

    Args:
        g (float): The beam length, 0 <= g <= ln 2.

    Returns:
        An ExtremalFourBracelet, or Infeasible when the slack is negative.

    Raises:
        DomainError: g is outside [0, ln 2].
    """
    if not 0.0 <= g <= LN2:
        raise DomainError('need 0 <= g <= ln 2, got %s' % g)
    config = ExtremalFourBracelet(g)
    if config.slack < -TOLERANCE:
        return Infeasible(g, config.slack)
    return config


def _four_bracelet_slack(g):
    return ExtremalFourBracelet(g).slack


def four_bracelet_boundary(xtol=1e-12):
    """The smallest g at which the extremal 4-bracelet is feasible.

    Found by bisection on the Pythagorean slack over [0, ln 2]; the exact
    value is ln(sqrt(2)).
    """
    return optimize.bisect(_four_bracelet_slack, 0.0, LN2, xtol=xtol,
                           maxiter=200)


class ExtremalBlockingPair(object):

    """Two balls of radius r crossed by the smallest possible blocking pair.

    Balls c, d of radius r are joined by a beam of length g. Blockers e, f
    sit on the perpendicular bisector, tangent to both, and are joined by a
    beam of length g through the midpoint of c-d; their radius is then
    exactly min_blocking_ratio(g) r. Vertical balls p, q of radius e^{-g}/2
    are beamed to c and d along the same line, closing a 5-bracelet.
    """

    def __init__(self, g, r):
        self.g = g
        self.r = r
        eg = math.exp(g)
        self.blocker_radius = horoball.min_blocking_ratio(g) * r
        self.vertical_radius = 0.5 / eg
        self.half_cd = r * math.sqrt(eg)
        self.half_ef = self.blocker_radius * math.sqrt(eg)
        self.d_pc = horoball.center_separation(self.vertical_radius, r, g)

    def balls(self):
        """(id, Horoball) pairs with the c-d midpoint at the origin."""
        x = self.half_cd + self.d_pc
        return [
            ('p', Horoball((-x, 0.0), self.vertical_radius)),
            ('c', Horoball((-self.half_cd, 0.0), self.r)),
            ('d', Horoball((self.half_cd, 0.0), self.r)),
            ('q', Horoball((x, 0.0), self.vertical_radius)),
            ('e', Horoball((0.0, self.half_ef), self.blocker_radius)),
            ('f', Horoball((0.0, -self.half_ef), self.blocker_radius)),
        ]

    def tangency_gaps(self):
        """Distances from e to c and d minus the tangency distance."""
        found = dict(self.balls())
        e = found['e']
        return [e.center.distance_to(found[k].center) -
                2.0 * math.sqrt(e.radius * found[k].radius) for k in 'cd']

    def to_pattern(self):
        """A one-cusp pattern with the 5-bracelet and the e-f beam."""
        beams = [('p', 'INF'), ('q', 'INF'), ('p', 'c'), ('c', 'd'),
                 ('d', 'q'), ('e', 'f')]
        return _pattern(self.balls(), beams, self.g)

    def __repr__(self):
        return u'<ExtremalBlockingPair g=%s r=%s R=%s at %s>' % (
            self.g, self.r, self.blocker_radius, id(self))


def extremal_blocking_pair(g, r):
    """The configuration on which the blocking-ratio bound is attained.

    Args:
        g (float): The beam length, 0 <= g <= ln 2.
        r (float): Radius of the two blocked balls, 0 < r <= 1/2.

    Returns:
        An ExtremalBlockingPair.

    Raises:
        DomainError: g or r is out of range.
    """
    if not 0.0 <= g <= LN2:
        raise DomainError('need 0 <= g <= ln 2, got %s' % g)
    if not 0.0 < r <= 0.5:
        raise DomainError('need 0 < r <= 1/2, got %s' % r)
    return ExtremalBlockingPair(g, r)

