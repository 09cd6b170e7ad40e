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

import hashlib
import logging

import tunnelcert
from tunnelcert.blocking import wall
from tunnelcert.blocking.model import NotBlocked
from tunnelcert.criteria import elder, thresholds
from tunnelcert.criteria.model import (
    Certificate, INCONCLUSIVE, RuleOutcome, TUNNEL)
from tunnelcert.geom import horoball
from tunnelcert.geom.horoball import TOLERANCE
from tunnelcert.graph import bracelets as bracelet_search
from tunnelcert.pattern import io
from tunnelcert.pattern.validation import DEFAULT_WINDOW


PROP4 = 'Prop4'
PROP5 = 'Prop5'
PROP6 = 'Prop6'
PROP4_SHARP = 'Prop4Sharp'
PROP5_SHARP = 'Prop5Sharp'
ELDER_SIBLING = 'ElderSibling'
DIRECT_DISK = 'DirectDisk'

logger = logging.getLogger(__name__)


class CertifyOptions(object):

    def __init__(self, n_max=6, window=DEFAULT_WINDOW, tol=TOLERANCE,
                 workers=1, prop5_bound=thresholds.DERIVED):
        """Constructor.

        Args:
            n_max (int): Longest bracelet enumerated, at least 3.
            window (int): Offset window for bracelets and blocking scans.
            tol (float): Geometric tolerance.
            workers (int): Threads for bracelet enumeration.
            prop5_bound (str): 'derived' or 'published' 5-bracelet bound.
        """
        self.n_max = n_max
        self.window = window
        self.tol = tol
        self.workers = workers
        self.prop5_bound = prop5_bound

    def __repr__(self):
        return u'<CertifyOptions n_max=%s window=%s tol=%s at %s>' % (
            self.n_max, self.window, self.tol, id(self))


def pattern_digest(p):
    """sha256 of the pattern's canonical serialization."""
    text = io.serialize_pattern(p).encode('utf-8')
    return 'sha256:' + hashlib.sha256(text).hexdigest()


def blocker_bound(p):
    """Largest radius a ball of the pattern can have.

    Every ball at least as large as the completeness radius is listed, so no
    ball exceeds the larger of the biggest listed radius and that radius.
    """
    largest = p.max_radius() or 0.0
    return max(largest, p.completeness_radius)


class _Run(object):

    """Shared inputs of one certification run."""

    def __init__(self, p, options):
        self.p = p
        self.options = options
        self.tol = options.tol
        self.thresholds = thresholds.compute_thresholds(options.prop5_bound)
        self.g_treated_as_zero = 0 < abs(p.g) <= self.tol
        self.g = 0.0 if abs(p.g) <= self.tol else p.g
        self.bracelets = bracelet_search.enumerate_bracelets(
            p, options.n_max, options.window, options.workers)
        self.elder = elder.elder_sibling_check(p, self.tol)

    def with_length(self, *lengths):
        return [b for b in self.bracelets if b.n in lengths]

    def below(self, bound):
        return self.g < bound - self.tol


def _witness(run, bracelet, threshold):
    return {'bracelet': bracelet.to_dict(), 'g': run.p.g,
            'threshold': threshold}


def _prop4(run):
    four = run.with_length(4)
    if not four:
        return RuleOutcome(PROP4, False, None, 'no 4-bracelet found')
    if not run.below(run.thresholds.t4):
        return RuleOutcome(PROP4, False, None, 'g = %r is not below t4 = %r' % (
            run.p.g, run.thresholds.t4))
    return RuleOutcome(PROP4, True, _witness(run, four[0], run.thresholds.t4),
                       None)


def _prop5(run):
    if run.p.cusp_count != 1:
        return RuleOutcome(PROP5, False, None, 'stated for one cusp only')
    found = run.with_length(4, 5)
    if not found:
        return RuleOutcome(PROP5, False, None, 'no 4- or 5-bracelet found')
    if not run.below(run.thresholds.t5):
        return RuleOutcome(PROP5, False, None, 'g = %r is not below t5 = %r' % (
            run.p.g, run.thresholds.t5))
    return RuleOutcome(PROP5, True, _witness(run, found[0], run.thresholds.t5),
                       None)


def _prop6(run):
    if not run.p.orientable:
        return RuleOutcome(PROP6, False, None, 'pattern not orientable')
    if run.g != 0.0:
        return RuleOutcome(PROP6, False, None, 'g = %r is not 0' % run.p.g)
    found = run.with_length(4, 5, 6)
    if not found:
        return RuleOutcome(PROP6, False, None,
                           'no bracelet with 4 <= n <= 6 found')
    return RuleOutcome(PROP6, True, _witness(run, found[0], 0.0), None)


def _prop4_sharp(run):
    four = run.with_length(4)
    if not four:
        return RuleOutcome(PROP4_SHARP, False, None, 'no 4-bracelet found')
    bound = blocker_bound(run.p)
    threshold = thresholds.four_bracelet_min_g(bound)
    if not run.below(threshold):
        return RuleOutcome(PROP4_SHARP, False, None,
                           'g = %r is not below %r for blockers of radius %r'
                           % (run.p.g, threshold, bound))
    witness = _witness(run, four[0], threshold)
    witness['blocker_radius_bound'] = bound
    return RuleOutcome(PROP4_SHARP, True, witness, None)


def _prop5_sharp(run):
    if run.p.cusp_count != 1:
        return RuleOutcome(PROP5_SHARP, False, None, 'stated for one cusp only')
    found = run.with_length(4, 5)
    if not found:
        return RuleOutcome(PROP5_SHARP, False, None,
                           'no 4- or 5-bracelet found')
    bound = blocker_bound(run.p)
    threshold = thresholds.five_bracelet_min_g(bound)
    if not run.below(threshold):
        return RuleOutcome(PROP5_SHARP, False, None,
                           'g = %r is not below %r for blockers of radius %r'
                           % (run.p.g, threshold, bound))
    witness = _witness(run, found[0], threshold)
    witness['blocker_radius_bound'] = bound
    return RuleOutcome(PROP5_SHARP, True, witness, None)


def _elder_sibling(run):
    if not run.below(run.thresholds.t_es):
        return RuleOutcome(ELDER_SIBLING, False, None,
                           'g = %r is not below ln 2' % run.p.g)
    if not run.elder.verified:
        return RuleOutcome(ELDER_SIBLING, False, None,
                           'no elder-sibling chain for %s' %
                           ', '.join(run.elder.failures))
    ratio = horoball.min_blocking_ratio(run.g, run.tol)
    anchor = None
    for b in run.bracelets:
        if ratio * b.min_radius >= run.p.completeness_radius - run.tol:
            anchor = b
            break
    witness = {
        'g': run.p.g,
        'threshold': run.thresholds.t_es,
        'chains': run.elder.to_dict()['chains'],
        'unconditional': anchor is not None,
    }
    if anchor is not None:
        witness['bracelet'] = anchor.to_dict()
    return RuleOutcome(ELDER_SIBLING, True, witness, None)


def _direct_disk(run):
    notes = []
    candidates = run.with_length(*range(4, run.options.n_max + 1))
    if not candidates:
        return RuleOutcome(DIRECT_DISK, False, None,
                           'no bracelet with 4 <= n <= %d' % run.options.n_max)
    for b in candidates:
        try:
            result = wall.find_blocking(b, run.p, run.options.window, run.tol)
        except wall.Indeterminate as e:
            notes.append('%r: indeterminate (%s)' % (b.key(), e.reason))
            continue
        except wall.ConsistencyError as e:
            notes.append('%r: %s' % (b.key(), e))
            continue
        if not isinstance(result, NotBlocked):
            continue
        if not result.unconditional:
            notes.append('%r: unblocked by listed beams, but blockers below '
                         'the completeness radius are possible' % (b.key(),))
            continue
        witness = {'bracelet': b.to_dict(), 'g': run.p.g,
                   'not_blocked': result.to_dict()}
        return RuleOutcome(DIRECT_DISK, True, witness, None)
    reason = '; '.join(notes) if notes else 'every candidate bracelet is blocked'
    return RuleOutcome(DIRECT_DISK, False, None, reason)


RULES = (_prop4, _prop5, _prop6, _prop4_sharp, _prop5_sharp, _elder_sibling,
         _direct_disk)


def _conditions(run, outcome):
    p = run.p
    found = [
        'the pattern is the ball-and-beam pattern of a hyperbolic 3-manifold '
        'with %d cusp(s) and a vertical geodesic of length g' % p.cusp_count,
        'every ball of radius at least %r, and every beam incident to one, '
        'is listed' % p.completeness_radius,
    ]
    if run.g_treated_as_zero:
        found.append('g = %r was treated as 0 (tolerance %r)' % (p.g, run.tol))
    if outcome is None:
        return found
    if outcome.rule == PROP6:
        found.append('the manifold is orientable, as asserted by the input')
    if outcome.rule == ELDER_SIBLING and not outcome.witness['unconditional']:
        found.append('balls of radius below %r also have elder-sibling chains'
                     % p.completeness_radius)
    if outcome.rule == DIRECT_DISK:
        found.append('a beam punctures the disk iff it crosses the vertical '
                     'wall an odd number of times')
    return found


def certify(p, options=None):
    """Runs every certification rule on a pattern.

    Args:
        p (BallBeamPattern): A validated pattern.
        options (CertifyOptions): Search bounds and tolerance.

    Returns:
        A Certificate: Tunnel with the first rule that holds, or
        Inconclusive with the reason each rule failed.
    """
    options = options or CertifyOptions()
    run = _Run(p, options)
    outcomes = [rule(run) for rule in RULES]
    applicable = [o.rule for o in outcomes if o.applies]
    fired = next((o for o in outcomes if o.applies), None)

    metadata = {
        'tool': 'tunnelcert',
        'version': tunnelcert.__version__,
        'tolerance': options.tol,
        'input_digest': pattern_digest(p),
        'prop5_bound': options.prop5_bound,
        'bracelets_found': len(run.bracelets),
        'g_treated_as_zero': run.g_treated_as_zero,
        'applicable_rules': applicable,
    }
    if fired is not None:
        witness = dict(fired.witness)
        verdict, rule = TUNNEL, fired.rule
    else:
        witness = {
            'g': p.g,
            'reasons': dict((o.rule, o.reason) for o in outcomes),
            'elder_failures': list(run.elder.failures),
        }
        verdict, rule = INCONCLUSIVE, None
    witness['thresholds'] = run.thresholds.to_dict()
    witness['window'] = options.window
    witness['n_max'] = options.n_max
    witness['completeness'] = {'epsilon': p.epsilon,
                               'completeness_radius': p.completeness_radius}
    logger.info('certified pattern: %s %s (applicable: %s)', verdict, rule,
                ', '.join(applicable) or 'none')
    return Certificate(verdict, rule, witness, _conditions(run, fired),
                       metadata)
