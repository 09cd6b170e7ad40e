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

from tunnelcert.blocking import wall
from tunnelcert.blocking.model import NotBlocked
from tunnelcert.criteria import certify as rules
from tunnelcert.criteria import thresholds
from tunnelcert.criteria.model import INCONCLUSIVE, TUNNEL
from tunnelcert.geom import horoball
from tunnelcert.geom.horoball import LN2, TOLERANCE
from tunnelcert.graph import bracelets
from tunnelcert.pattern.model import BallRef


CERTIFICATE_KEYS = ('verdict', 'rule', 'witness', 'conditions', 'metadata')

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class ReplayError(Error):

    """A certificate is malformed and cannot be replayed."""


def _field(mapping, key, where):
    try:
        return mapping[key]
    except (KeyError, TypeError):
        raise ReplayError('certificate has no %s.%s' % (where, key))


def _refs(raw):
    try:
        return [BallRef(node[0], (int(node[1]), int(node[2])))
                for node in raw['nodes']]
    except (KeyError, IndexError, TypeError, ValueError):
        raise ReplayError('malformed witness bracelet %r' % (raw,))


class _Replay(object):

    def __init__(self, cert, p, tol):
        self.cert = cert
        self.p = p
        self.tol = tol
        self.witness = _field(cert, 'witness', 'certificate')
        self.metadata = _field(cert, 'metadata', 'certificate')
        self.g = 0.0 if abs(p.g) <= tol else p.g
        self.problems = []

    def fail(self, message, *args):
        self.problems.append(message % args)

    def below(self, bound, name):
        if not self.g < bound - self.tol:
            self.fail('g = %r is not below %s = %r', self.p.g, name, bound)

    def bracelet(self, lengths):
        raw = _field(self.witness, 'bracelet', 'witness')
        try:
            b = bracelets.bracelet_from_nodes(self.p, _refs(raw))
        except bracelets.NotABracelet as e:
            self.fail('witness bracelet is not in the pattern: %s', e)
            return None
        if b.n not in lengths:
            self.fail('witness bracelet has n = %d, expected one of %s',
                      b.n, ', '.join(str(n) for n in lengths))
        return b

    def thresholds(self):
        mode = self.metadata.get('prop5_bound', thresholds.DERIVED)
        if mode not in thresholds.PROP5_BOUNDS:
            self.fail('unknown prop5_bound %r', mode)
            mode = thresholds.DERIVED
        found = thresholds.compute_thresholds(mode)
        recorded = self.witness.get('thresholds', {})
        for name, value in sorted(found.to_dict().items()):
            if name == 't5_source':
                continue
            if name in recorded and abs(recorded[name] - value) > self.tol:
                self.fail('recorded %s = %r differs from %r', name,
                          recorded[name], value)
        return found


def _replay_prop4(r, found):
    r.bracelet((4,))
    r.below(found.t4, 't4')


def _replay_prop5(r, found):
    if r.p.cusp_count != 1:
        r.fail('Prop5 needs one cusp, the pattern has %d', r.p.cusp_count)
    r.bracelet((4, 5))
    r.below(found.t5, 't5')


def _replay_prop6(r, found):
    if not r.p.orientable:
        r.fail('Prop6 needs an orientable manifold')
    if r.g != 0.0:
        r.fail('Prop6 needs g = 0, got %r', r.p.g)
    r.bracelet((4, 5, 6))


def _replay_prop4_sharp(r, found):
    r.bracelet((4,))
    bound = rules.blocker_bound(r.p)
    r.below(thresholds.four_bracelet_min_g(bound), 'the 4-bracelet bound')


def _replay_prop5_sharp(r, found):
    if r.p.cusp_count != 1:
        r.fail('Prop5Sharp needs one cusp, the pattern has %d',
               r.p.cusp_count)
    r.bracelet((4, 5))
    bound = rules.blocker_bound(r.p)
    r.below(thresholds.five_bracelet_min_g(bound), 'the 5-bracelet bound')


def _replay_chain(r, ball_id, raw):
    try:
        links = [(BallRef(l[0], (int(l[1]), int(l[2]))), l[3]) for l in raw]
    except (IndexError, TypeError, ValueError):
        raise ReplayError('malformed chain for %r' % ball_id)
    if len(links) < 2 or links[0][0] != BallRef(ball_id, (0, 0)):
        r.fail('chain for %s does not start at %s(0, 0)', ball_id, ball_id)
        return
    if not links[-1][0].is_infinity:
        r.fail('chain for %s does not end at infinity', ball_id)
        return
    for (ref, _), (nxt, _) in zip(links, links[1:-1]):
        if not r.p.has_ball(nxt.id):
            r.fail('chain for %s names unknown ball %s', ball_id, nxt.id)
            return
        if r.p.entry(nxt.id).radius <= r.p.entry(ref.id).radius + r.tol:
            r.fail('chain for %s: %s is not larger than %s', ball_id,
                   nxt.id, ref.id)
        if bracelets.find_step(r.p, ref, nxt) is None:
            r.fail('chain for %s: no beam joins %s%s and %s%s', ball_id,
                   ref.id, ref.offset, nxt.id, nxt.offset)
    top = links[-2][0]
    if not any(beam.is_vertical and beam.finite_end.id == top.id
               for beam in r.p.beams):
        r.fail('chain for %s: %s has no vertical beam', ball_id, top.id)


def _replay_elder_sibling(r, found):
    r.below(LN2, 'ln 2')
    chains = _field(r.witness, 'chains', 'witness')
    for entry in r.p.balls:
        if entry.id not in chains:
            r.fail('no elder-sibling chain for %s', entry.id)
            continue
        _replay_chain(r, entry.id, chains[entry.id])
    if r.witness.get('unconditional'):
        b = r.bracelet(range(3, 1 + int(r.witness.get('n_max', 6))))
        if b is not None and r.g <= LN2:
            ratio = horoball.min_blocking_ratio(r.g, r.tol)
            if ratio * b.min_radius < r.p.completeness_radius - r.tol:
                r.fail('bracelet %r does not make the listing complete',
                       b.key())


def _replay_direct_disk(r, found):
    n_max = int(_field(r.witness, 'n_max', 'witness'))
    b = r.bracelet(range(4, n_max + 1))
    if b is None:
        return
    window = int(_field(r.witness, 'window', 'witness'))
    try:
        result = wall.find_blocking(b, r.p, window, r.tol)
    except (wall.Indeterminate, wall.ConsistencyError) as e:
        r.fail('blocking search on the witness bracelet failed: %s', e)
        return
    if not isinstance(result, NotBlocked):
        r.fail('witness bracelet is blocked by %r', result)
    elif not result.unconditional:
        r.fail('witness bracelet is unblocked only among listed beams')


REPLAYS = {
    rules.PROP4: _replay_prop4,
    rules.PROP5: _replay_prop5,
    rules.PROP6: _replay_prop6,
    rules.PROP4_SHARP: _replay_prop4_sharp,
    rules.PROP5_SHARP: _replay_prop5_sharp,
    rules.ELDER_SIBLING: _replay_elder_sibling,
    rules.DIRECT_DISK: _replay_direct_disk,
}


def check_certificate(cert, p, tol=TOLERANCE):
    """Re-evaluates a certificate against the pattern it was issued for.

    Tunnel certificates are checked from their witness alone: the bracelet
    and elder chains are rebuilt from the pattern and every inequality of
    the rule is evaluated again. Inconclusive certificates are reproduced by
    certifying again with the recorded options.

    Args:
        cert (dict): A certificate as produced by Certificate.to_dict, or
            parsed from its JSON form.
        p (BallBeamPattern): The pattern.
        tol (float): Geometric tolerance.

    Returns:
        A list of problem descriptions, empty when the certificate holds.

    Raises:
        ReplayError: The certificate is missing fields, names an unknown
            rule or holds a field of the wrong type.
    """
    try:
        return _check(cert, p, tol)
    except (AttributeError, TypeError, ValueError) as e:
        raise ReplayError('malformed certificate: %s' % e)


def _check(cert, p, tol):
    for key in CERTIFICATE_KEYS:
        _field(cert, key, 'certificate')
    r = _Replay(cert, p, tol)
    digest = rules.pattern_digest(p)
    if r.metadata.get('input_digest') != digest:
        r.fail('input digest %s does not match the pattern (%s)',
               r.metadata.get('input_digest'), digest)

    verdict = cert['verdict']
    if verdict == TUNNEL:
        replay = REPLAYS.get(cert['rule'])
        if replay is None:
            raise ReplayError('unknown rule %r' % (cert['rule'],))
        found = r.thresholds()
        replay(r, found)
    elif verdict == INCONCLUSIVE:
        options = rules.CertifyOptions(
            n_max=int(_field(r.witness, 'n_max', 'witness')),
            window=int(_field(r.witness, 'window', 'witness')),
            tol=tol,
            prop5_bound=r.metadata.get('prop5_bound', thresholds.DERIVED))
        again = rules.certify(p, options)
        if again.verdict != INCONCLUSIVE:
            r.fail('pattern certifies as %s by %s', again.verdict, again.rule)
    else:
        raise ReplayError('unknown verdict %r' % (verdict,))

    if r.problems:
        logger.info('certificate replay found %d problem(s)',
                    len(r.problems))
    return r.problems
