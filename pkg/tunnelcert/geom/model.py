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


class Point2(namedtuple('Point2', 'x y')):

    """A point of the boundary plane (the x-y plane under the half-space)."""

    __slots__ = ()

    def translated(self, vector):
        """Returns this point moved by the given (dx, dy) vector."""
        return Point2(self.x + vector[0], self.y + vector[1])

    def minus(self, other):
        """Returns the vector from other to this point as a Point2."""
        return Point2(self.x - other.x, self.y - other.y)

    def distance_to(self, other):
        return math.hypot(self.x - other.x, self.y - other.y)


class Horoball(object):

    def __init__(self, center=None, radius=None):
        """Constructor.

        A horoball is either a finite Euclidean ball resting on the boundary
        plane or, when no center is given, the ball at infinity (the
        half-space above height 1). Use :data:`INFINITY` for the latter.

        Args:
            center (Point2): The point where the ball touches the plane.
            radius (float): The Euclidean radius of the ball.
        """
        if (center is None) != (radius is None):
            raise ValueError('center and radius must be given together')
        self.center = Point2(*center) if center is not None else None
        self.radius = float(radius) if radius is not None else None

    @property
    def is_infinity(self):
        return self.center is None

    @property
    def top(self):
        """Euclidean height of the highest point, or the bottom of H∞."""
        if self.is_infinity:
            return 1.0
        return 2.0 * self.radius

    def translated(self, vector):
        """Returns the translate of this ball by a boundary-plane vector."""
        if self.is_infinity:
            return self
        return Horoball(self.center.translated(vector), self.radius)

    def height_over(self, point):
        """Height of the upper hemisphere over a boundary point.

        Args:
            point (Point2): A point of the boundary plane.

        Returns:
            The height r + sqrt(r^2 - d^2) where d is the distance from the
            center, or None when the point is not under the ball.
        """
        if self.is_infinity:
            return None
        d = self.center.distance_to(point)
        if d > self.radius:
            return None
        return self.radius + math.sqrt(max(self.radius ** 2 - d ** 2, 0.0))

    def __repr__(self):
        if self.is_infinity:
            return u'<Horoball INF at %s>' % id(self)
        return u'<Horoball (%s, %s) r=%s at %s>' % (
            self.center.x, self.center.y, self.radius, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.center, self.radius))


INFINITY = Horoball()


class GeodesicArc(object):

    """The geodesic through two horoball centers, clipped to the balls.

    A finite arc lies on the vertical semicircle of radius b over the chord
    joining the two centers. Positions along it are measured by the signed
    offset s from the chord midpoint towards the second center, so the
    semicircle height at s is sqrt(b^2 - s^2). A vertical arc rises straight
    up from a single center; its span is a pair of heights.
    """

    def __init__(self, first, second, radius, span, degenerate=False):
        """Constructor.

        Args:
            first (Point2): Center of the first ball.
            second (Point2): Center of the second ball, or None for a vertical
                ray towards the ball at infinity.
            radius (float): The semicircle radius b (0.0 for vertical rays).
            span (tuple): (low, high) chord offsets of the clipped span, or
                the bottom and top heights for a vertical ray.
            degenerate (bool): True when the balls are tangent and the span
                is the single tangency point.
        """
        self.first = Point2(*first)
        self.second = Point2(*second) if second is not None else None
        self.radius = radius
        self.span = tuple(span)
        self.degenerate = degenerate

    @property
    def vertical(self):
        return self.second is None

    @property
    def midpoint(self):
        if self.vertical:
            return self.first
        return Point2((self.first.x + self.second.x) / 2.0,
                      (self.first.y + self.second.y) / 2.0)

    @property
    def direction(self):
        """Unit vector from the first center towards the second."""
        if self.vertical:
            return None
        length = self.first.distance_to(self.second)
        return Point2((self.second.x - self.first.x) / length,
                      (self.second.y - self.first.y) / length)

    def chord(self):
        return (self.first, self.second)

    def point_at(self, s):
        """Boundary-plane point under chord offset s."""
        m, u = self.midpoint, self.direction
        return Point2(m.x + s * u.x, m.y + s * u.y)

    def height_at_offset(self, s):
        return math.sqrt(max(self.radius ** 2 - s ** 2, 0.0))

    def height_at(self, point):
        """Semicircle height over the chord point nearest to the given point."""
        if self.vertical:
            return None
        return self.height_at_offset(self.offset_of(point))

    def offset_of(self, point):
        m, u = self.midpoint, self.direction
        return (point.x - m.x) * u.x + (point.y - m.y) * u.y

    def span_points(self):
        """The projections of the two clipped span endpoints."""
        if self.vertical:
            return (self.first, self.first)
        return (self.point_at(self.span[0]), self.point_at(self.span[1]))

    def span_heights(self):
        if self.vertical:
            return self.span
        return (self.height_at_offset(self.span[0]),
                self.height_at_offset(self.span[1]))

    def span_parameters(self):
        """The clipped span as fractions of the chord, from first to second."""
        if self.vertical:
            return (0.0, 0.0)
        b2 = 2.0 * self.radius
        return ((self.span[0] + self.radius) / b2,
                (self.span[1] + self.radius) / b2)

    def __repr__(self):
        if self.vertical:
            return u'<GeodesicArc vertical at (%s, %s) at %s>' % (
                self.first.x, self.first.y, id(self))
        return u'<GeodesicArc b=%s span=%s at %s>' % (
            self.radius, self.span, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)
