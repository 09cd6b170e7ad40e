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

from tunnelcert.geom import horoball
from tunnelcert.geom.model import Point2


Crossing = namedtuple('Crossing', 'point height segment vertex')


class Wall(object):

    def __init__(self, balls, tol=horoball.TOLERANCE):
        """Constructor.

        Args:
            balls (list): The finite Horoballs of a bracelet in cycle order;
                the first and last carry the vertical beams.
            tol (float): Geometric tolerance.
        """
        self.balls = list(balls)
        self.arcs = [horoball.beam_arc(h1, h2, tol)
                     for h1, h2 in zip(self.balls, self.balls[1:])]
        self.tol = tol
        # polyline vertex -> ball index (None inside a subdivided segment),
        # polyline segment -> connecting beam index
        self._set_polyline([ball.center for ball in self.balls],
                           list(range(len(self.balls))),
                           list(range(len(self.arcs))))

    def _set_polyline(self, points, nodes, parents):
        self.points = points
        self.nodes = nodes
        self.parents = parents
        self.offsets = [0.0]
        for p, q in zip(self.points, self.points[1:]):
            self.offsets.append(self.offsets[-1] + p.distance_to(q))

    @classmethod
    def from_bracelet(cls, b, tol=horoball.TOLERANCE):
        return cls(b.balls, tol)

    def subdivided(self, parts):
        """The same wall with every segment split into equal pieces.

        The envelope over each piece is the envelope of the segment it came
        from, so crossing parities do not change.
        """
        if parts < 1:
            raise ValueError('parts must be at least 1, got %s' % parts)
        centers = [ball.center for ball in self.balls]
        points, nodes, parents = [], [], []
        for index, (p, q) in enumerate(zip(centers, centers[1:])):
            for k in range(parts):
                f = float(k) / parts
                points.append(Point2(p.x + f * (q.x - p.x),
                                     p.y + f * (q.y - p.y)))
                nodes.append(index if k == 0 else None)
                parents.append(index)
        points.append(centers[-1])
        nodes.append(len(centers) - 1)
        wall = Wall(self.balls, self.tol)
        wall._set_polyline(points, nodes, parents)
        return wall

    @property
    def length(self):
        return self.offsets[-1]

    def bounding_box(self):
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return (min(xs), min(ys), max(xs), max(ys))

    def segment_height(self, index, point):
        """Envelope over a point of segment ``index``."""
        parent = self.parents[index]
        heights = [self.arcs[parent].height_at(point)]
        for ball in self.balls[parent:parent + 2]:
            h = ball.height_over(point)
            if h is not None:
                heights.append(h)
        return max(heights)

    def vertex_height(self, index):
        """Envelope over polyline vertex ``index``; at a ball, its top."""
        point = self.points[index]
        segments = [i for i in (index - 1, index)
                    if 0 <= i < len(self.parents)]
        heights = [self.segment_height(i, point) for i in segments]
        if self.nodes[index] is not None:
            heights.append(self.balls[self.nodes[index]].top)
        return max(heights)

    def locate(self, s):
        """Segment index and boundary point at arclength s."""
        if s < -self.tol or s > self.length + self.tol:
            raise ValueError('position %s outside the polyline [0, %s]'
                             % (s, self.length))
        for index in range(len(self.parents)):
            start, end = self.offsets[index], self.offsets[index + 1]
            if s <= end + self.tol or index == len(self.parents) - 1:
                p, q = self.points[index], self.points[index + 1]
                f = min(max((s - start) / (end - start), 0.0), 1.0)
                return index, Point2(p.x + f * (q.x - p.x),
                                     p.y + f * (q.y - p.y))
        raise ValueError('polyline has no segments')

    def envelope(self, s):
        """Lower envelope height at arclength s along the polyline."""
        for index, offset in enumerate(self.offsets):
            if abs(s - offset) <= self.tol:
                return self.vertex_height(index)
        index, point = self.locate(s)
        return self.segment_height(index, point)

    def distance_to(self, point):
        """Euclidean distance from a boundary point to the polyline."""
        best = math.inf
        for p, q in zip(self.points, self.points[1:]):
            dx, dy = q.x - p.x, q.y - p.y
            length2 = dx * dx + dy * dy
            f = ((point.x - p.x) * dx + (point.y - p.y) * dy) / length2
            f = min(max(f, 0.0), 1.0)
            best = min(best, math.hypot(point.x - p.x - f * dx,
                                        point.y - p.y - f * dy))
        return best

    def __repr__(self):
        return u'<Wall %d vertices length %s at %s>' % (
            len(self.points), self.length, id(self))


class BlockingPair(object):

    def __init__(self, beam, larger_radius, crossings):
        """Constructor.

        Args:
            beam (ConcreteBeam): The puncturing beam.
            larger_radius (float): Radius of the larger ball of the beam.
            crossings (list): Crossing points, an odd number of them.
        """
        self.beam = beam
        self.larger_radius = larger_radius
        self.crossings = list(crossings)

    def to_dict(self):
        return {
            'beam': {'index': self.beam.index,
                     'a': [self.beam.a.id] + list(self.beam.a.offset),
                     'b': [self.beam.b.id] + list(self.beam.b.offset)},
            'larger_radius': self.larger_radius,
            'crossings': [[c.point.x, c.point.y, c.height]
                          for c in self.crossings],
        }

    def __repr__(self):
        return u'<BlockingPair beam %s %s-%s R=%s at %s>' % (
            self.beam.index, self.beam.a, self.beam.b, self.larger_radius,
            id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class NotBlocked(object):

    def __init__(self, search_bound, window, candidates,
                 required_blocker_radius, unconditional):
        """Constructor.

        Args:
            search_bound (tuple): (xmin, ymin, xmax, ymax) of the region
                whose beams were scanned.
            window (int): The minimum offset window scanned.
            candidates (int): How many concrete beams were tested.
            required_blocker_radius (float): The radius any blocker would
                need by the blocking-ratio bound, or None when g > ln 2.
            unconditional (bool): True when every possible blocker is at
                least as large as the completeness radius, hence listed.
        """
        self.search_bound = tuple(search_bound)
        self.window = window
        self.candidates = candidates
        self.required_blocker_radius = required_blocker_radius
        self.unconditional = unconditional

    def to_dict(self):
        return {
            'search_bound': list(self.search_bound),
            'window': self.window,
            'candidates': self.candidates,
            'required_blocker_radius': self.required_blocker_radius,
            'unconditional': self.unconditional,
        }

    def __repr__(self):
        return u'<NotBlocked bound %s at %s>' % (self.search_bound, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)
