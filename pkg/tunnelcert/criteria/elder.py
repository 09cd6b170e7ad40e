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

import logging

from tunnelcert.criteria.model import ChainLink, ElderChain, ElderReport, INF_LINK
from tunnelcert.geom.horoball import TOLERANCE


logger = logging.getLogger(__name__)


def _steps(p):
    """Per-ball (neighbor id, offset change) pairs over finite beams."""
    steps = dict((entry.id, []) for entry in p.balls)
    for beam in p.beams:
        if beam.is_vertical:
            continue
        d = beam.b.offset
        steps[beam.a.id].append((beam.b.id, d))
        steps[beam.b.id].append((beam.a.id, (-d[0], -d[1])))
    return steps


def elder_sibling_check(p, tol=TOLERANCE):
    """Checks that every ball orbit has an elder-sibling chain.

    A chain climbs from a ball to infinity along beams, through balls of
    strictly increasing radius. Orbits are processed from the largest radius
    down, so an orbit is verified iff it has a vertical beam or a beam to an
    already verified orbit whose radius exceeds its own by more than tol.

    Args:
        p (BallBeamPattern): A validated pattern.
        tol (float): Radii closer than this count as equal.

    Returns:
        An ElderReport whose chains are shortest by hop count, ties broken
        by the chain's node sequence.
    """
    vertical = set(beam.finite_end.id for beam in p.beams if beam.is_vertical)
    steps = _steps(p)
    radius = dict((entry.id, entry.radius) for entry in p.balls)
    found = {}
    for entry in sorted(p.balls, key=lambda e: (-e.radius, e.id)):
        start = ChainLink(entry.id, (0, 0), entry.radius)
        if entry.id in vertical:
            found[entry.id] = ElderChain([start, INF_LINK])
            continue
        best = None
        for other, delta in steps[entry.id]:
            if other not in found or radius[other] <= entry.radius + tol:
                continue
            chain = ElderChain([start] + [link.shifted(delta)
                                          for link in found[other].links])
            if best is None or chain.key() < best.key():
                best = chain
        if best is not None:
            found[entry.id] = best

    chains = dict((e.id, found[e.id]) for e in p.balls if e.id in found)
    failures = [e.id for e in p.balls if e.id not in found]
    if failures:
        logger.info('elder sibling check failed for %d orbit(s): %s',
                    len(failures), ', '.join(failures))
    return ElderReport(chains, failures)
