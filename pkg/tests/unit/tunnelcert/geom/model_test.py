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

from tunnelcert.geom.model import GeodesicArc, Horoball, INFINITY, Point2


class Point2Test(unittest.TestCase):

    def testTranslated(self):
        self.assertEqual(Point2(1.5, -1.0),
                         Point2(1.0, 1.0).translated((0.5, -2.0)))

    def testDistance(self):
        self.assertEqual(5.0, Point2(0, 0).distance_to(Point2(3, 4)))


class HoroballTest(unittest.TestCase):

    def testEqual(self):
        self.assertEqual(Horoball((0, 1), 0.25), Horoball((0.0, 1.0), 0.25))

    def testNotEqual(self):
        self.assertNotEqual(Horoball((0, 1), 0.25), Horoball((0, 1), 0.3))
        self.assertNotEqual(Horoball((0, 1), 0.25), INFINITY)

    def testRepr(self):
        self.assertTrue(repr(Horoball((0.0, 1.0), 0.25)).startswith(
            u'<Horoball (0.0, 1.0) r=0.25 at '))
        self.assertTrue(repr(INFINITY).startswith(u'<Horoball INF at '))

    def testCenterWithoutRadius(self):
        self.assertRaises(ValueError, Horoball, (0, 0))

    def testTop(self):
        self.assertEqual(0.5, Horoball((0, 0), 0.25).top)
        self.assertEqual(1.0, INFINITY.top)

    def testTranslated(self):
        self.assertEqual(Horoball((1, 2), 0.1),
                         Horoball((0, 0), 0.1).translated((1, 2)))
        self.assertIs(INFINITY, INFINITY.translated((1, 2)))

    def testHeightOver(self):
        ball = Horoball((0, 0), 0.5)
        self.assertEqual(1.0, ball.height_over(Point2(0, 0)))
        self.assertEqual(0.5, ball.height_over(Point2(0.5, 0)))
        self.assertIsNone(ball.height_over(Point2(0.6, 0)))
        self.assertIsNone(INFINITY.height_over(Point2(0, 0)))

    def testHashable(self):
        self.assertEqual(1, len(set([Horoball((0, 0), 0.5),
                                     Horoball((0, 0), 0.5)])))


class GeodesicArcTest(unittest.TestCase):

    def setUp(self):
        self.arc = GeodesicArc((0.0, 0.0), (2.0, 0.0), 1.0, (-0.5, 0.25))

    def testMidpointAndDirection(self):
        self.assertEqual(Point2(1.0, 0.0), self.arc.midpoint)
        self.assertEqual(Point2(1.0, 0.0), self.arc.direction)

    def testPointAndOffset(self):
        point = self.arc.point_at(0.25)
        self.assertEqual(Point2(1.25, 0.0), point)
        self.assertEqual(0.25, self.arc.offset_of(point))

    def testHeights(self):
        self.assertEqual(1.0, self.arc.height_at_offset(0.0))
        self.assertAlmostEqual(math.sqrt(0.75),
                               self.arc.height_at(Point2(0.5, 3.0)))
        self.assertEqual(0.0, self.arc.height_at_offset(2.0))

    def testSpanParameters(self):
        self.assertEqual((0.25, 0.625), self.arc.span_parameters())

    def testSpanPoints(self):
        self.assertEqual((Point2(0.5, 0.0), Point2(1.25, 0.0)),
                         self.arc.span_points())

    def testVertical(self):
        arc = GeodesicArc((1.0, 1.0), None, 0.0, (0.5, 1.0))
        self.assertTrue(arc.vertical)
        self.assertIsNone(arc.direction)
        self.assertIsNone(arc.height_at(Point2(1.0, 1.0)))
        self.assertEqual((0.5, 1.0), arc.span_heights())
        self.assertEqual((0.0, 0.0), arc.span_parameters())

    def testEqual(self):
        self.assertEqual(self.arc, GeodesicArc((0, 0), (2, 0), 1.0,
                                               [-0.5, 0.25]))
