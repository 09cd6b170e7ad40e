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

import unittest

from tunnelcert.blocking.model import BlockingPair, Crossing, NotBlocked
from tunnelcert.geom.model import Horoball, Point2
from tunnelcert.pattern.model import BallRef, ConcreteBeam


class BlockingPairTest(unittest.TestCase):

    def setUp(self):
        beam = ConcreteBeam(5, BallRef('e', (0, 0)), BallRef('f', (1, -1)),
                            Horoball((0.0, 0.5), 0.4),
                            Horoball((0.0, -0.5), 0.3))
        self.pair = BlockingPair(
            beam, 0.4, [Crossing(Point2(0.0, 0.0), 0.5, None, 1)])

    def testToDict(self):
        self.assertEqual({
            'beam': {'index': 5, 'a': ['e', 0, 0], 'b': ['f', 1, -1]},
            'larger_radius': 0.4,
            'crossings': [[0.0, 0.0, 0.5]],
        }, self.pair.to_dict())

    def testRepr(self):
        self.assertTrue(repr(self.pair).startswith(
            '<BlockingPair beam 5 '))


class NotBlockedTest(unittest.TestCase):

    def testToDict(self):
        result = NotBlocked([0, 1, 2, 3], 3, 7, None, False)
        self.assertEqual({
            'search_bound': [0, 1, 2, 3],
            'window': 3,
            'candidates': 7,
            'required_blocker_radius': None,
            'unconditional': False,
        }, result.to_dict())

    def testEquality(self):
        self.assertEqual(NotBlocked((0, 1, 2, 3), 3, 7, 0.5, True),
                         NotBlocked([0, 1, 2, 3], 3, 7, 0.5, True))
        self.assertNotEqual(NotBlocked((0, 1, 2, 3), 3, 7, 0.5, True),
                            NotBlocked((0, 1, 2, 3), 3, 8, 0.5, True))
