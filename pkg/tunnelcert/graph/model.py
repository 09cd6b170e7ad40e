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

from collections import namedtuple

from tunnelcert.pattern.model import INF_ID, INF_REF


QuotientEdge = namedtuple('QuotientEdge', 'index source target offset')


class QuotientGraph(object):

    def __init__(self, vertices, edges):
        """Constructor.

        Args:
            vertices (list): Ball orbit ids, with 'INF' first.
            edges (list): QuotientEdge entries, one per beam orbit. Edges
                at infinity carry offset None.
        """
        self.vertices = list(vertices)
        self.edges = list(edges)

    def neighbors(self, vertex):
        """Vertices joined to the given one, in edge order."""
        found = []
        for edge in self.edges:
            if edge.source == vertex:
                found.append(edge.target)
            if edge.target == vertex:
                found.append(edge.source)
        return found

    def __repr__(self):
        return u'<QuotientGraph %d vertices %d edges at %s>' % (
            len(self.vertices), len(self.edges), id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class Bracelet(object):

    def __init__(self, nodes, balls, beams):
        """Constructor.

        Args:
            nodes (list): BallRefs of the cycle, starting with the ball at
                infinity, then the finite balls in order.
            balls (list): Horoballs of the finite nodes, in the same order.
            beams (list): The n ConcreteBeams joining consecutive nodes,
                starting with the beam from infinity to nodes[1] and ending
                with the one back to infinity.
        """
        if not nodes or nodes[0] != INF_REF:
            raise ValueError('a bracelet starts at the ball at infinity')
        self.nodes = list(nodes)
        self.balls = list(balls)
        self.beams = list(beams)

    @property
    def n(self):
        return len(self.nodes)

    @property
    def finite_nodes(self):
        return self.nodes[1:]

    @property
    def min_radius(self):
        return min(ball.radius for ball in self.balls)

    @property
    def centers(self):
        """Polyline vertices: the finite centers in cycle order."""
        return [ball.center for ball in self.balls]

    def key(self):
        """Translation-normalized node tuple used for ordering."""
        base = self.nodes[1].offset
        return tuple((ref.id, (ref.offset[0] - base[0],
                               ref.offset[1] - base[1]))
                     for ref in self.finite_nodes)

    def to_dict(self):
        return {
            'n': self.n,
            'nodes': [[ref.id, ref.offset[0], ref.offset[1]]
                      for ref in self.nodes],
            'min_radius': self.min_radius,
        }

    def __repr__(self):
        return u'<Bracelet %s at %s>' % (
            '-'.join([INF_ID] + ['%s%s' % (r.id, r.offset)
                                 for r in self.finite_nodes]), id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.nodes == other.nodes and self.beams == other.beams)
