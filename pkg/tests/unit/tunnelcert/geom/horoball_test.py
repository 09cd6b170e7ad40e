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
import unittest

from tunnelcert.geom import horoball
from tunnelcert.geom.model import Horoball, INFINITY


class VerticalDistanceTest(unittest.TestCase):

    def testLogRatio(self):
        self.assertAlmostEqual(math.log(2.0),
                               horoball.vertical_distance(2.0, 1.0), places=15)

    def testSameHeight(self):
        self.assertEqual(0.0, horoball.vertical_distance(0.3, 0.3))

    def testNonPositiveHeight(self):
        self.assertRaises(horoball.DomainError, horoball.vertical_distance,
                          1.0, 0.0)

    def testWrongOrder(self):
        self.assertRaises(horoball.DomainError, horoball.vertical_distance,
                          1.0, 2.0)


class CenterSeparationTest(unittest.TestCase):

    def testQuarterBalls(self):
        self.assertAlmostEqual(
            1.0, horoball.center_separation(0.25, 0.25, math.log(4.0)),
            places=15)

    def testTangent(self):
        self.assertAlmostEqual(1.0, horoball.center_separation(0.5, 0.5, 0.0))

    def testNegativeLength(self):
        self.assertRaises(horoball.DomainError, horoball.center_separation,
                          0.5, 0.5, -0.1)

    def testBadRadius(self):
        self.assertRaises(horoball.DomainError, horoball.center_separation,
                          0.0, 0.5, 0.1)

    def testRoundTripGrid(self):
        radii = [(i + 1) / 100.0 for i in range(50)]
        lengths = [i / 10.0 for i in range(50)]
        worst = 0.0
        for r1 in radii:
            h1 = Horoball((0.0, 0.0), r1)
            for r2 in radii:
                for g in lengths:
                    d = horoball.center_separation(r1, r2, g)
                    h2 = Horoball((d, 0.0), r2)
                    worst = max(worst, abs(horoball.beam_length(h1, h2) - g))
        self.assertLess(worst, 1e-12)


class BallsDisjointTest(unittest.TestCase):

    def testTangent(self):
        self.assertEqual(horoball.TANGENT, horoball.balls_disjoint(
            Horoball((0, 0), 0.5), Horoball((1, 0), 0.5)))

    def testOverlap(self):
        self.assertEqual(horoball.OVERLAP, horoball.balls_disjoint(
            Horoball((0, 0), 0.5), Horoball((0.9, 0), 0.5)))

    def testDisjoint(self):
        self.assertEqual(horoball.DISJOINT, horoball.balls_disjoint(
            Horoball((0, 0), 0.25), Horoball((1, 0), 0.25)))

    def testInfinity(self):
        self.assertEqual(horoball.TANGENT, horoball.balls_disjoint(
            INFINITY, Horoball((0, 0), 0.5)))
        self.assertEqual(horoball.DISJOINT, horoball.balls_disjoint(
            Horoball((0, 0), 0.25), INFINITY))
        self.assertEqual(horoball.OVERLAP, horoball.balls_disjoint(
            Horoball((0, 0), 0.6), INFINITY))

    def testInfinityWithItself(self):
        self.assertRaises(horoball.DomainError, horoball.balls_disjoint,
                          INFINITY, INFINITY)


class BeamLengthTest(unittest.TestCase):

    def testQuarterBalls(self):
        length = horoball.beam_length(Horoball((0, 0), 0.25),
                                      Horoball((1, 0), 0.25))
        self.assertAlmostEqual(math.log(4.0), length, places=12)

    def testTangentIsExactlyZero(self):
        self.assertEqual(0.0, horoball.beam_length(Horoball((0, 0), 0.5),
                                                   Horoball((1, 0), 0.5)))

    def testVertical(self):
        self.assertAlmostEqual(math.log(4.0), horoball.beam_length(
            Horoball((0, 0), 0.125), INFINITY), places=15)
        self.assertEqual(0.0, horoball.beam_length(INFINITY,
                                                   Horoball((3, 2), 0.5)))

    def testSymmetric(self):
        h1 = Horoball((0.1, 0.2), 0.3)
        h2 = Horoball((1.4, -0.6), 0.15)
        self.assertEqual(horoball.beam_length(h1, h2),
                         horoball.beam_length(h2, h1))

    def testOverlap(self):
        self.assertRaises(horoball.OverlappingBalls, horoball.beam_length,
                          Horoball((0, 0), 0.5), Horoball((0.5, 0), 0.5))


class BeamArcTest(unittest.TestCase):

    def assertOnBoundary(self, ball, arc, s):
        point = arc.point_at(s)
        z = arc.height_at_offset(s)
        d = ball.center.distance_to(point)
        self.assertAlmostEqual(ball.radius ** 2, d ** 2 + (z - ball.radius) ** 2,
                               places=12)

    def testSpanEndsOnBalls(self):
        h1 = Horoball((0.0, 0.0), 0.3)
        h2 = Horoball((1.2, 0.5), 0.1)
        arc = horoball.beam_arc(h1, h2)
        self.assertFalse(arc.degenerate)
        self.assertOnBoundary(h1, arc, arc.span[0])
        self.assertOnBoundary(h2, arc, arc.span[1])
        self.assertLess(arc.span[0], arc.span[1])

    def testTangent(self):
        arc = horoball.beam_arc(Horoball((0, 0), 0.5),
                                Horoball((0.5, 0), 0.125))
        self.assertTrue(arc.degenerate)
        self.assertEqual(arc.span[0], arc.span[1])
        self.assertAlmostEqual(horoball.tangency_height(0.5, 0.125),
                               arc.height_at_offset(arc.span[0]), places=12)

    def testVertical(self):
        arc = horoball.beam_arc(Horoball((2, 3), 0.25), INFINITY)
        self.assertTrue(arc.vertical)
        self.assertEqual((0.5, 1.0), arc.span)
        self.assertEqual((2, 3), tuple(arc.first))

    def testOverlap(self):
        self.assertRaises(horoball.OverlappingBalls, horoball.beam_arc,
                          Horoball((0, 0), 0.5), Horoball((0.5, 0), 0.5))


class MinBlockingRatioTest(unittest.TestCase):

    def testEndpoints(self):
        self.assertAlmostEqual(2.0 + math.sqrt(3.0),
                               horoball.min_blocking_ratio(0.0), delta=1e-12)
        self.assertAlmostEqual(1.0, horoball.min_blocking_ratio(horoball.LN2),
                               delta=1e-15)

    def testDecreasing(self):
        values = [horoball.min_blocking_ratio(i * horoball.LN2 / 20)
                  for i in range(21)]
        self.assertEqual(values, sorted(values, reverse=True))

    def testOutOfRange(self):
        self.assertRaises(horoball.DomainError, horoball.min_blocking_ratio,
                          1.0)
        self.assertRaises(horoball.DomainError, horoball.min_blocking_ratio,
                          -0.5)


class TangencyHeightTest(unittest.TestCase):

    def testEqualBalls(self):
        self.assertEqual(0.5, horoball.tangency_height(0.5, 0.5))
