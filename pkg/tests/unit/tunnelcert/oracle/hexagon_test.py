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

from tunnelcert.oracle import hexagon


COUNTS = {
    hexagon.ROTATION_ONLY: 14,
    hexagon.DIHEDRAL: 13,
    hexagon.ROTATION_PLUS_REVERSING_REFLECTION: 9,
    hexagon.DIHEDRAL_PLUS_GLOBAL_REVERSAL: 8,
}


class OrientedHexagonTest(unittest.TestCase):

    def testOperations(self):
        h = hexagon.OrientedHexagon([1, 1, 0, 0, 0, 0])
        self.assertEqual('>><<<<', str(h))
        self.assertEqual('><<<<>', str(h.rotated(1)))
        self.assertEqual('<<<<>>', str(h.reflected()))
        self.assertEqual('<<>>>>', str(h.reversed()))

    def testWrongLength(self):
        self.assertRaises(ValueError, hexagon.OrientedHexagon, [True] * 5)


class OrientationClassesTest(unittest.TestCase):

    def testCounts(self):
        for symmetry, count in COUNTS.items():
            classes = hexagon.hexagon_orientation_classes(symmetry)
            self.assertEqual(count, classes.count, symmetry)
            self.assertEqual(count, len(classes.representatives))

    def testBurnside(self):
        for symmetry, count in COUNTS.items():
            self.assertEqual(count, hexagon.burnside_count(symmetry), symmetry)

    def testRepresentativesAreMinimal(self):
        classes = hexagon.hexagon_orientation_classes(hexagon.DIHEDRAL)
        self.assertEqual('<<<<<<', str(classes.representatives[0]))
        self.assertEqual('>>>>>>', str(classes.representatives[-1]))
        for h in classes.representatives:
            self.assertEqual(h, min(h.rotated(k) for k in range(6)))

    def testUnknownSymmetry(self):
        self.assertRaises(hexagon.UnknownSymmetry,
                          hexagon.hexagon_orientation_classes, 'Cyclic')
        self.assertRaises(hexagon.UnknownSymmetry, hexagon.burnside_count,
                          'Cyclic')
