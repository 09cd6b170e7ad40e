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
import random
import unittest

from tunnelcert.criteria import elder
from tunnelcert.criteria.model import INF_LINK, ChainLink
from tunnelcert.graph import bracelets

from tests.unit.tunnelcert import patterns


class ElderSiblingCheckTest(unittest.TestCase):

    def testVerticalBall(self):
        report = elder.elder_sibling_check(patterns.square_lattice())
        self.assertTrue(report.verified)
        self.assertEqual([ChainLink('a', (0, 0), 0.5), INF_LINK],
                         report.chains['a'].links)

    def testChainClimbsThroughLargerBalls(self):
        p = patterns.five_bracelet(0.5)
        report = elder.elder_sibling_check(p)
        self.assertTrue(report.verified)
        self.assertEqual(['c', 'a', 'INF'],
                         [link.id for link in report.chains['c'].links])
        self.assertEqual(['d', 'b', 'INF'],
                         [link.id for link in report.chains['d'].links])
        self.assertEqual(2, report.chains['d'].hops)

    def testEqualRadiiDoNotCount(self):
        report = elder.elder_sibling_check(patterns.isolated_pair())
        self.assertFalse(report.verified)
        self.assertEqual(['u', 'v'], report.failures)
        self.assertEqual(['p'], list(report.chains))

    def testNearlyEqualRadiiDoNotCount(self):
        p = patterns.build([('c', (1.0, 0.0), 0.3),
                            ('d', (2.0, 0.0), 0.3 + 1e-12)],
                           [('d', 'INF'), ('c', 'd')], 0.0)
        self.assertEqual(['c'], elder.elder_sibling_check(p).failures)

    def testOffsetsFollowTheBeams(self):
        r = math.exp(-0.2) / 2.0
        p = patterns.build([('a', (0.0, 0.0), r), ('x', (0.5, 0.5), 0.1)],
                           [('a', 'INF'), ('x', 'a', (1, 0))], 0.2)
        chain = elder.elder_sibling_check(p).chains['x']
        self.assertEqual([['x', 0, 0, 0.1], ['a', 1, 0, r],
                          ['INF', 0, 0, None]], chain.to_list())

    def testShortestChain(self):
        p = patterns.build([('a', (0.0, 0.0), 0.45), ('m', (1.0, 0.0), 0.3),
                            ('s', (2.0, 0.0), 0.1)],
                           [('a', 'INF'), ('m', 'a'), ('s', 'm'), ('s', 'a')],
                           0.0)
        chain = elder.elder_sibling_check(p).chains['s']
        self.assertEqual(['s', 'a', 'INF'], [link.id for link in chain.links])

    def testToDict(self):
        d = elder.elder_sibling_check(patterns.isolated_pair()).to_dict()
        self.assertFalse(d['verified'])
        self.assertEqual(['u', 'v'], d['failures'])
        self.assertEqual({'p': [['p', 0, 0, 0.5], ['INF', 0, 0, None]]},
                         d['chains'])


class ElderPropertyTest(unittest.TestCase):

    def testVerifiedImpliesConnected(self):
        rng = random.Random(11)
        verified = 0
        for _ in range(200):
            p = patterns.random_pattern(rng)
            if elder.elder_sibling_check(p).verified:
                verified += 1
                self.assertTrue(bracelets.is_connected(
                    bracelets.build_quotient_graph(p)), p)
        self.assertGreater(verified, 0)

    def testDeterministic(self):
        rng = random.Random(5)
        for _ in range(50):
            p = patterns.random_pattern(rng)
            self.assertEqual(elder.elder_sibling_check(p).to_dict(),
                             elder.elder_sibling_check(p).to_dict())
