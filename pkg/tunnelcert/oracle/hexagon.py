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

import itertools
import logging

from collections import namedtuple


ROTATION_ONLY = 'RotationOnly'
DIHEDRAL = 'Dihedral'
ROTATION_PLUS_REVERSING_REFLECTION = 'RotationPlusReversingReflection'
DIHEDRAL_PLUS_GLOBAL_REVERSAL = 'DihedralPlusGlobalReversal'

SYMMETRIES = (ROTATION_ONLY, DIHEDRAL, ROTATION_PLUS_REVERSING_REFLECTION,
              DIHEDRAL_PLUS_GLOBAL_REVERSAL)

SIDES = 6

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class UnknownSymmetry(Error):

    """The symmetry group name is not one of SYMMETRIES."""


class OrientedHexagon(namedtuple('OrientedHexagon', 'edges')):

    """Orientations of the six edges of a hexagonal bracelet.

    ``edges[i]`` is True when edge i points along the cyclic order of the
    hexagon and False when it points against it.
    """

    __slots__ = ()

    def __new__(cls, edges):
        edges = tuple(bool(e) for e in edges)
        if len(edges) != SIDES:
            raise ValueError('a hexagon has %d edges, got %d' % (SIDES,
                                                                 len(edges)))
        return super(OrientedHexagon, cls).__new__(cls, edges)

    def rotated(self, k):
        return OrientedHexagon(self.edges[k:] + self.edges[:k])

    def reflected(self):
        return OrientedHexagon(self.edges[::-1])

    def reversed(self):
        return OrientedHexagon(not e for e in self.edges)

    def __str__(self):
        return ''.join('>' if e else '<' for e in self.edges)


HexagonClasses = namedtuple('HexagonClasses', 'symmetry count representatives')


def _group(symmetry):
    """The group elements as functions on OrientedHexagons."""
    rotations = [lambda h, k=k: h.rotated(k) for k in range(SIDES)]
    if symmetry == ROTATION_ONLY:
        return rotations
    reflections = [lambda h, r=r: r(h).reflected() for r in rotations]
    if symmetry == DIHEDRAL:
        return rotations + reflections
    if symmetry == ROTATION_PLUS_REVERSING_REFLECTION:
        return rotations + [lambda h, f=f: f(h).reversed()
                            for f in reflections]
    if symmetry == DIHEDRAL_PLUS_GLOBAL_REVERSAL:
        dihedral = rotations + reflections
        return dihedral + [lambda h, f=f: f(h).reversed() for f in dihedral]
    raise UnknownSymmetry('unknown symmetry %r, expected one of %s' % (
        symmetry, ', '.join(SYMMETRIES)))


def all_hexagons():
    return [OrientedHexagon(edges)
            for edges in itertools.product((False, True), repeat=SIDES)]


def hexagon_orientation_classes(symmetry):
    """Orbits of the 64 edge orientations of a hexagon under a symmetry group.

    Reflections reverse the cyclic order of the edges. Under
    ROTATION_PLUS_REVERSING_REFLECTION they also reverse every arrow, which
    is what turning the hexagon over does to orientations read along the
    cyclic order; that group leaves nine classes.

    Args:
        symmetry (str): One of SYMMETRIES.

    Returns:
        A HexagonClasses tuple whose representatives are the lexicographic
        minimum of each orbit, in increasing order.

    Raises:
        UnknownSymmetry: symmetry is not recognized.
    """
    group = _group(symmetry)
    representatives = set()
    for h in all_hexagons():
        representatives.add(min(f(h) for f in group))
    found = sorted(representatives)
    logger.debug('%s: %d hexagon classes', symmetry, len(found))
    return HexagonClasses(symmetry, len(found), found)


def burnside_count(symmetry):
    """The number of classes by Burnside's lemma: mean fixed-point count.

    Raises:
        UnknownSymmetry: symmetry is not recognized.
    """
    group = _group(symmetry)
    hexagons = all_hexagons()
    fixed = sum(1 for f in group for h in hexagons if f(h) == h)
    if fixed % len(group):
        raise Error('fixed points %d not divisible by group order %d' % (
            fixed, len(group)))
    return fixed // len(group)
