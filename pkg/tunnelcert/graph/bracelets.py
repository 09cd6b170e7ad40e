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

from concurrent import futures

from tunnelcert.graph.model import Bracelet, QuotientEdge, QuotientGraph
from tunnelcert.pattern.model import BallRef, INF_ID, INF_REF
from tunnelcert.pattern.validation import DEFAULT_WINDOW, concrete_beam


logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class NotABracelet(Error):

    """A node list does not describe a bracelet of the pattern."""


def build_quotient_graph(p):
    """The quotient ball-and-beam graph of a pattern.

    Args:
        p (BallBeamPattern): A validated pattern.

    Returns:
        A QuotientGraph with vertex 'INF' followed by the ball ids in
        pattern order, and one edge per beam orbit in pattern order.
    """
    edges = []
    for index, beam in enumerate(p.beams):
        if beam.is_vertical:
            edges.append(QuotientEdge(index, beam.finite_end.id, INF_ID, None))
        else:
            edges.append(QuotientEdge(index, beam.a.id, beam.b.id,
                                      beam.b.offset))
    return QuotientGraph([INF_ID] + [entry.id for entry in p.balls], edges)


def is_connected(gr):
    """True iff every vertex of the quotient graph reaches infinity."""
    reached = set([INF_ID])
    frontier = [INF_ID]
    while frontier:
        vertex = frontier.pop()
        for other in gr.neighbors(vertex):
            if other not in reached:
                reached.add(other)
                frontier.append(other)
    return all(vertex in reached for vertex in gr.vertices)


def _adjacency(p):
    """Per-ball steps (neighbor id, offset change, beam index), and the
    smallest vertical beam index of each ball that has one."""
    steps = dict((entry.id, []) for entry in p.balls)
    vertical = {}
    seen = set()
    for index, beam in enumerate(p.beams):
        if beam.is_vertical:
            vertical.setdefault(beam.finite_end.id, index)
            continue
        d = beam.b.offset
        for source, target, delta in ((beam.a.id, beam.b.id, d),
                                      (beam.b.id, beam.a.id, (-d[0], -d[1]))):
            if (source, target, delta) in seen:
                continue
            seen.add((source, target, delta))
            steps[source].append((target, delta, index))
    return steps, vertical


def find_step(p, first, second):
    """Beam index and translation of the lift joining two concrete balls."""
    for index, beam in enumerate(p.beams):
        if beam.is_vertical:
            continue
        if (beam.a.id == first.id and beam.b.id == second.id and
                beam.b.offset == (second.offset[0] - first.offset[0],
                                  second.offset[1] - first.offset[1])):
            return index, first.offset
        if (beam.a.id == second.id and beam.b.id == first.id and
                beam.b.offset == (first.offset[0] - second.offset[0],
                                  first.offset[1] - second.offset[1])):
            return index, second.offset
    return None


def _vertical_index(p, ref):
    for index, beam in enumerate(p.beams):
        if beam.is_vertical and beam.finite_end.id == ref.id:
            return index
    return None


def bracelet_from_nodes(p, nodes):
    """Rebuilds a bracelet from its finite nodes.

    Args:
        p (BallBeamPattern): The pattern.
        nodes (list): BallRefs of the finite balls in cycle order; a leading
            reference to the ball at infinity is accepted and skipped.

    Returns:
        The Bracelet through infinity and these balls.

    Raises:
        NotABracelet: A ball is unknown or repeated, or two consecutive
            members are not joined by a listed beam.
    """
    finite = [BallRef(ref[0], tuple(ref[1])) for ref in nodes]
    if finite and finite[0].is_infinity:
        finite = finite[1:]
    if len(finite) < 2:
        raise NotABracelet('a bracelet has at least two finite balls')
    if len(set(finite)) != len(finite):
        raise NotABracelet('bracelet repeats a ball')
    for ref in finite:
        if ref.is_infinity or not p.has_ball(ref.id):
            raise NotABracelet('unknown ball %r' % (ref.id,))

    beams = []
    first = _vertical_index(p, finite[0])
    last = _vertical_index(p, finite[-1])
    if first is None or last is None:
        raise NotABracelet('bracelet ends must have vertical beams')
    beams.append(concrete_beam(p, first, finite[0].offset))
    for a, b in zip(finite, finite[1:]):
        step = find_step(p, a, b)
        if step is None:
            raise NotABracelet('no beam joins %s%s and %s%s' % (
                a.id, a.offset, b.id, b.offset))
        beams.append(concrete_beam(p, step[0], step[1]))
    beams.append(concrete_beam(p, last, finite[-1].offset))
    return Bracelet([INF_REF] + finite, [p.concrete(ref) for ref in finite],
                    beams)


def _normalized(path):
    base = path[0].offset
    return tuple((ref.id, (ref.offset[0] - base[0], ref.offset[1] - base[1]))
                 for ref in path)


def canonical_key(path):
    """The least normalized form of a finite path and of its reversal."""
    return min(_normalized(path), _normalized(list(reversed(path))))


def _paths_from(start, steps, vertical, n_max, window):
    """Finite paths from a vertical ball that close into bracelets."""
    found = []
    path = [BallRef(start, (0, 0))]
    on_path = set(path)

    def extend():
        node = path[-1]
        if len(path) >= 2 and node.id in vertical:
            found.append(list(path))
        if len(path) + 2 > n_max:
            return
        for target, delta, _ in steps[node.id]:
            nxt = BallRef(target, (node.offset[0] + delta[0],
                                   node.offset[1] + delta[1]))
            if nxt in on_path:
                continue
            if max(abs(nxt.offset[0]), abs(nxt.offset[1])) > window:
                continue
            path.append(nxt)
            on_path.add(nxt)
            extend()
            on_path.discard(path.pop())

    extend()
    return found


def enumerate_bracelets(p, n_max=6, window=DEFAULT_WINDOW, workers=1):
    """All bracelets through infinity up to lattice symmetry.

    The search walks simple paths in the developed cover, starting at each
    ball with a vertical beam (at offset (0, 0)) and closing whenever it
    reaches another such ball, so every bracelet with n <= n_max whose finite
    part stays within [-window, window]^2 of its first ball is found.

    Args:
        p (BallBeamPattern): A validated pattern.
        n_max (int): Largest bracelet length, at least 3.
        window (int): Offset window relative to the first finite ball.
        workers (int): Threads used for the starting balls.

    Returns:
        Bracelets deduplicated up to translation and reversal, ordered by
        (n, canonical key) and oriented along their key.
    """
    if n_max < 3:
        raise ValueError('n_max must be at least 3, got %s' % n_max)
    steps, vertical = _adjacency(p)
    starts = [entry.id for entry in p.balls if entry.id in vertical]

    def search(start):
        return _paths_from(start, steps, vertical, n_max, window)

    if workers > 1 and len(starts) > 1:
        with futures.ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(search, starts))
    else:
        batches = [search(start) for start in starts]

    keys = set()
    for batch in batches:
        for path in batch:
            keys.add(canonical_key(path))
    ordered = sorted(keys, key=lambda key: (len(key) + 1, key))
    bracelets = [bracelet_from_nodes(p, [BallRef(i, o) for i, o in key])
                 for key in ordered]
    logger.info('found %d bracelet(s) with n <= %d in window %d',
                len(bracelets), n_max, window)
    return bracelets
