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

import math

from collections import namedtuple

from tunnelcert.geom.model import INFINITY, Point2


INF_ID = 'INF'


class BallRef(namedtuple('BallRef', 'id offset')):

    """A concrete ball: an orbit id and the lattice offset of the translate.

    The ball at infinity is the reference with id ``'INF'`` and offset (0, 0).
    """

    __slots__ = ()

    @property
    def is_infinity(self):
        return self.id == INF_ID

    def shifted(self, offset):
        """The same ball translated by a further lattice offset."""
        if self.is_infinity:
            return self
        return BallRef(self.id, (self.offset[0] + offset[0],
                                 self.offset[1] + offset[1]))

    def sort_key(self):
        return (self.is_infinity, self.id, self.offset)


INF_REF = BallRef(INF_ID, (0, 0))


class Lattice(object):

    def __init__(self, t1, t2):
        """Constructor.

        Args:
            t1 (Point2): First generator of the translation lattice.
            t2 (Point2): Second generator.
        """
        self.t1 = Point2(*t1)
        self.t2 = Point2(*t2)

    @property
    def determinant(self):
        return self.t1.x * self.t2.y - self.t1.y * self.t2.x

    def vector(self, offset):
        """The boundary-plane vector m t1 + n t2 of an offset (m, n)."""
        m, n = offset
        return Point2(m * self.t1.x + n * self.t2.x,
                      m * self.t1.y + n * self.t2.y)

    def coordinates(self, point):
        """Coordinates (u, v) with point = u t1 + v t2."""
        det = self.determinant
        u = (point[0] * self.t2.y - point[1] * self.t2.x) / det
        v = (self.t1.x * point[1] - self.t1.y * point[0]) / det
        return (u, v)

    def offsets_covering(self, origin, box):
        """Lattice offsets whose translate of origin can land in a box.

        Args:
            origin (Point2): The point being translated.
            box (tuple): (xmin, ymin, xmax, ymax).

        Returns:
            ((m_lo, m_hi), (n_lo, n_hi)), inclusive ranges.
        """
        xmin, ymin, xmax, ymax = box
        corners = [self.coordinates((x - origin.x, y - origin.y))
                   for x in (xmin, xmax) for y in (ymin, ymax)]
        us = [c[0] for c in corners]
        vs = [c[1] for c in corners]
        return ((int(math.floor(min(us))), int(math.ceil(max(us)))),
                (int(math.floor(min(vs))), int(math.ceil(max(vs)))))

    def __repr__(self):
        return u'<Lattice %s %s at %s>' % (tuple(self.t1), tuple(self.t2),
                                           id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class BallEntry(object):

    def __init__(self, ball_id, ball, cusp=0):
        """Constructor.

        Args:
            ball_id (str): Identifier of the ball orbit.
            ball (Horoball): The representative, a finite ball.
            cusp (int): The cusp the ball belongs to, 0 or 1.
        """
        self.id = ball_id
        self.ball = ball
        self.cusp = cusp

    @property
    def radius(self):
        return self.ball.radius

    @property
    def center(self):
        return self.ball.center

    def __repr__(self):
        return u'<BallEntry %s r=%s cusp %s at %s>' % (
            self.id, self.ball.radius, self.cusp, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class BeamRef(object):

    def __init__(self, a, b):
        """Constructor.

        Args:
            a (BallRef): One end of the beam orbit representative.
            b (BallRef): The other end.
        """
        self.a = BallRef(a[0], tuple(a[1]))
        self.b = BallRef(b[0], tuple(b[1]))

    @property
    def is_vertical(self):
        return self.a.is_infinity or self.b.is_infinity

    @property
    def finite_end(self):
        """The finite end of a vertical beam (or the first end otherwise)."""
        return self.b if self.a.is_infinity else self.a

    def ends(self):
        return (self.a, self.b)

    def translated(self, offset):
        return BeamRef(self.a.shifted(offset), self.b.shifted(offset))

    def __repr__(self):
        return u'<BeamRef %s%s - %s%s at %s>' % (
            self.a.id, self.a.offset, self.b.id, self.b.offset, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.a, self.b))


ConcreteBall = namedtuple('ConcreteBall', 'ball cusp origin offset')


class ConcreteBeam(namedtuple('ConcreteBeam', 'index a b h1 h2')):

    """A lift of a beam orbit: orbit index, its two concrete ends and balls."""

    __slots__ = ()

    def touches(self, ref):
        return ref == self.a or ref == self.b

    def sort_key(self):
        return (self.index, self.a.sort_key(), self.b.sort_key())


class BallBeamPattern(object):

    def __init__(self, cusp_count, orientable, lattice, balls, beams, g,
                 epsilon, completeness_radius):
        """Constructor.

        Args:
            cusp_count (int): 1 or 2. With two cusps the ball at infinity
                belongs to cusp 0.
            orientable (bool): Whether the manifold is asserted orientable.
            lattice (Lattice): The translation lattice fixing infinity.
            balls (list): BallEntry orbit representatives.
            beams (list): BeamRef orbit representatives.
            g (float): The length of the vertical geodesic.
            epsilon (float): Radius below which balls were truncated.
            completeness_radius (float): Radius down to which the ball list
                is asserted complete.
        """
        self.cusp_count = cusp_count
        self.orientable = orientable
        self.lattice = lattice
        self.balls = list(balls)
        self.beams = list(beams)
        self.g = g
        self.epsilon = epsilon
        self.completeness_radius = completeness_radius
        self._by_id = dict((b.id, b) for b in self.balls)

    def entry(self, ball_id):
        return self._by_id[ball_id]

    def has_ball(self, ball_id):
        return ball_id in self._by_id

    def concrete(self, ref):
        """The Horoball for a concrete ball reference."""
        if ref.is_infinity:
            return INFINITY
        return self._by_id[ref.id].ball.translated(
            self.lattice.vector(ref.offset))

    def cusp_of(self, ref):
        if ref.is_infinity:
            return 0
        return self._by_id[ref.id].cusp

    def max_radius(self):
        return max(b.radius for b in self.balls) if self.balls else None

    def with_beams(self, beams):
        """A copy of this pattern with another beam list."""
        return BallBeamPattern(self.cusp_count, self.orientable, self.lattice,
                               self.balls, beams, self.g, self.epsilon,
                               self.completeness_radius)

    def __repr__(self):
        return u'<BallBeamPattern %s balls %s beams g=%s at %s>' % (
            len(self.balls), len(self.beams), self.g, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class Violation(object):

    def __init__(self, kind, message, subjects=()):
        """Constructor.

        Args:
            kind (str): 'overlap', 'beam_length', 'vertical_radius' or
                'truncation'.
            message (str): A human readable description.
            subjects (tuple): The BallRefs or beam indexes involved.
        """
        self.kind = kind
        self.message = message
        self.subjects = tuple(subjects)

    def __repr__(self):
        return u'<Violation %s: %s at %s>' % (self.kind, self.message, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class ValidationReport(object):

    def __init__(self, window, violations):
        """Constructor.

        Args:
            window (int): The offset window the checks covered.
            violations (list): Violation entries, in check order.
        """
        self.window = window
        self.violations = list(violations)

    @property
    def clean(self):
        return not self.violations

    def kinds(self):
        return [v.kind for v in self.violations]

    def to_dict(self):
        return {
            'window': self.window,
            'clean': self.clean,
            'violations': [{'kind': v.kind, 'message': v.message}
                           for v in self.violations],
        }

    def to_text(self):
        lines = ['window %d: %s' % (
            self.window, 'clean' if self.clean else
            '%d violation(s)' % len(self.violations))]
        lines.extend('%s: %s' % (v.kind, v.message) for v in self.violations)
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return u'<ValidationReport window %s, %s violations at %s>' % (
            self.window, len(self.violations), id(self))
