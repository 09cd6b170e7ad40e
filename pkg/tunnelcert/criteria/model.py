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

from collections import namedtuple

from tunnelcert import codec
from tunnelcert.pattern.model import INF_ID


TUNNEL = 'Tunnel'
INCONCLUSIVE = 'Inconclusive'


class Thresholds(object):

    def __init__(self, t4, t5, t_es, t5_source='derived'):
        """Constructor.

        Args:
            t4 (float): The 4-bracelet bound, ln(sqrt(2)).
            t5 (float): The 5-bracelet bound for one-cusped manifolds.
            t_es (float): The elder-sibling bound, ln 2.
            t5_source (str): 'derived' when t5 is the root of the boundary
                equation, 'published' when it is the published constant.
        """
        self.t4 = t4
        self.t5 = t5
        self.t_es = t_es
        self.t5_source = t5_source

    def to_dict(self):
        return {'t4': self.t4, 't5': self.t5, 't_es': self.t_es,
                't5_source': self.t5_source}

    def __repr__(self):
        return u'<Thresholds t4=%s t5=%s (%s) t_es=%s at %s>' % (
            self.t4, self.t5, self.t5_source, self.t_es, id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.__dict__ == other.__dict__)


class ChainLink(namedtuple('ChainLink', 'id offset radius')):

    """One ball of an elder-sibling chain; radius is None at infinity."""

    __slots__ = ()

    @property
    def is_infinity(self):
        return self.id == INF_ID

    def shifted(self, delta):
        if self.is_infinity:
            return self
        return ChainLink(self.id, (self.offset[0] + delta[0],
                                   self.offset[1] + delta[1]), self.radius)


INF_LINK = ChainLink(INF_ID, (0, 0), None)


class ElderChain(object):

    def __init__(self, links):
        """Constructor.

        Args:
            links (list): ChainLinks from the ball being certified, through
                strictly larger balls, to INF_LINK.
        """
        self.links = list(links)

    @property
    def hops(self):
        """Number of beams in the chain."""
        return len(self.links) - 1

    def key(self):
        return (self.hops, tuple((l.id, l.offset) for l in self.links))

    def to_list(self):
        return [[l.id, l.offset[0], l.offset[1], l.radius] for l in self.links]

    def __repr__(self):
        return u'<ElderChain %s at %s>' % (
            ' > '.join(l.id for l in self.links), id(self))

    def __eq__(self, other):
        return (self.__class__ == other.__class__ and
                self.links == other.links)


class ElderReport(object):

    def __init__(self, chains, failures):
        """Constructor.

        Args:
            chains (dict): Ball id to ElderChain, in pattern order.
            failures (list): Ids of the balls without a chain.
        """
        self.chains = chains
        self.failures = list(failures)

    @property
    def verified(self):
        return not self.failures

    def to_dict(self):
        return {
            'verified': self.verified,
            'chains': dict((k, c.to_list()) for k, c in self.chains.items()),
            'failures': list(self.failures),
        }

    def __repr__(self):
        return u'<ElderReport %s chains %s failures at %s>' % (
            len(self.chains), len(self.failures), id(self))


RuleOutcome = namedtuple('RuleOutcome', 'rule applies witness reason')


class Certificate(object):

    def __init__(self, verdict, rule, witness, conditions, metadata):
        """Constructor.

        Args:
            verdict (str): TUNNEL or INCONCLUSIVE.
            rule (str): The rule that fired, or None.
            witness (dict): Everything needed to re-check the rule, or the
                per-rule reasons for an inconclusive verdict.
            conditions (list): Hypotheses the verdict rests on.
            metadata (dict): Tool version, tolerance, input digest and the
                full list of applicable rules.
        """
        self.verdict = verdict
        self.rule = rule
        self.witness = witness
        self.conditions = list(conditions)
        self.metadata = metadata

    @property
    def is_tunnel(self):
        return self.verdict == TUNNEL

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'rule': self.rule,
            'witness': self.witness,
            'conditions': self.conditions,
            'metadata': self.metadata,
        }

    def to_json(self):
        return codec.dumps(self.to_dict())

    def to_text(self):
        lines = ['verdict: %s' % self.verdict]
        if self.rule is not None:
            lines.append('rule: %s' % self.rule)
            bracelet = self.witness.get('bracelet')
            if bracelet is not None:
                lines.append('bracelet: %s' % ' - '.join(
                    node[0] if node[0] == INF_ID else
                    '%s(%d, %d)' % tuple(node) for node in bracelet['nodes']))
            lines.append('g: %s' % codec.format_number(self.witness['g']))
            if 'threshold' in self.witness:
                lines.append('threshold: %s' %
                             codec.format_number(self.witness['threshold']))
        else:
            for rule, reason in self.witness['reasons'].items():
                lines.append('%s: %s' % (rule, reason))
            if self.witness.get('elder_failures'):
                lines.append('elder sibling failures: %s' %
                             ', '.join(self.witness['elder_failures']))
        lines.append('window: %d, n_max: %d' % (self.witness['window'],
                                                self.witness['n_max']))
        lines.append('conditions:')
        lines.extend('  - %s' % c for c in self.conditions)
        lines.append('applicable rules: %s' % (
            ', '.join(self.metadata['applicable_rules']) or 'none'))
        lines.append('input digest: %s' % self.metadata['input_digest'])
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return u'<Certificate %s %s at %s>' % (self.verdict, self.rule,
                                               id(self))
