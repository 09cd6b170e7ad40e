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

import functools
import logging
import math

from scipy import optimize

from tunnelcert.criteria.model import Thresholds
from tunnelcert.geom.horoball import DomainError, LN2


DERIVED = 'derived'
PUBLISHED = 'published'
PROP5_BOUNDS = (DERIVED, PUBLISHED)

# The published 5-bracelet constant. The boundary equation below puts the
# root at r_e = 1/2 at ln(sqrt((5 - sqrt(5)) / 2)) = 0.16175..., not here.
PUBLISHED_FIVE_BRACELET_BOUND = 0.168474

ROOT_XTOL = 1e-12

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class ThresholdError(Error):

    """A threshold root could not be bracketed."""


def four_bracelet_min_g(r):
    """Smallest g at which a 4-bracelet can be blocked by balls of radius r.

    The middle ball fits under the blocking pair with radius r e^g / 4, and
    the blocking balls must clear the vertical balls of radius e^{-g}/2,
    which holds iff e^{2g} (1 + 2r) >= 4.

    Args:
        r (float): Radius of the blocking balls, 0 < r <= 1/2.

    Returns:
        ln(sqrt(4 / (1 + 2r))); ln(sqrt(2)) at r = 1/2.
    """
    if not 0 < r <= 0.5:
        raise DomainError('blocking radius must lie in (0, 1/2], got %s' % r)
    return 0.5 * math.log(4.0 / (1.0 + 2.0 * r))


def five_bracelet_slack(g, r_e):
    """Feasibility slack of a blocked 5-bracelet H∞, a, c, d, b.

    The vertical balls a, b have radius e^{-g}/2, the middle balls c, d share
    the largest radius that still fits under blocking balls e, f of radius
    r_e, and the e-f beam crosses the c-d beam at its midpoint x. With a, c
    and x collinear, d(a, x) = sqrt(2 r_c) + r_c e^{g/2} and d(e, x) =
    r_e e^{g/2}, so e misses a iff d(a, x)^2 + d(e, x)^2 >= 2 r_e e^{-g}.

    Returns:
        d(a, x)^2 + d(e, x)^2 - 2 r_e e^{-g}; blocking is possible iff the
        slack is nonnegative.
    """
    eg = math.exp(g)
    r_c = r_e * eg / (2.0 + math.sqrt(max(4.0 - eg * eg, 0.0)))
    half = math.exp(g / 2.0)
    d_ax = math.sqrt(2.0 * r_c) + r_c * half
    d_ex = r_e * half
    return d_ax * d_ax + d_ex * d_ex - 2.0 * r_e / eg


def five_bracelet_min_g(r_e, xtol=ROOT_XTOL):
    """Smallest g at which a 5-bracelet can be blocked by balls of radius r_e.

    The slack is negative at g = 0 and positive at g = ln 2 for every
    r_e in (0, 1/2], so the root is found by bisection on [0, ln 2]. The
    root decreases as r_e grows and tends to ln(sqrt(3)) as r_e -> 0.

    Args:
        r_e (float): Radius of the blocking balls, 0 < r_e <= 1/2.
        xtol (float): Absolute accuracy of the root.

    Raises:
        DomainError: r_e is out of range.
        ThresholdError: The slack does not change sign on [0, ln 2].
    """
    if not 0 < r_e <= 0.5:
        raise DomainError('blocking radius must lie in (0, 1/2], got %s' % r_e)
    try:
        root = optimize.bisect(five_bracelet_slack, 0.0, LN2, args=(r_e,),
                               xtol=xtol, maxiter=200)
    except ValueError as e:
        raise ThresholdError('5-bracelet boundary not bracketed for r_e=%r: %s'
                             % (r_e, e))
    logger.debug('5-bracelet boundary at r_e=%s: g=%r', r_e, root)
    return root


@functools.lru_cache(maxsize=None)
def compute_thresholds(prop5_bound=DERIVED):
    """The three length thresholds used by the certification rules.

    Args:
        prop5_bound (str): 'derived' takes t5 from the boundary equation at
            r_e = 1/2; 'published' takes the published 0.168474.

    Returns:
        Thresholds with 0 < t5 < t4 < t_es.
    """
    if prop5_bound not in PROP5_BOUNDS:
        raise ValueError('prop5_bound must be one of %s, got %r'
                         % (PROP5_BOUNDS, prop5_bound))
    t4 = math.log(math.sqrt(2.0))
    t_es = LN2
    derived = five_bracelet_min_g(0.5)
    if abs(derived - PUBLISHED_FIVE_BRACELET_BOUND) > 1e-4:
        logger.info('derived 5-bracelet bound %.10f differs from the published '
                    '%s', derived, PUBLISHED_FIVE_BRACELET_BOUND)
    t5 = derived if prop5_bound == DERIVED else PUBLISHED_FIVE_BRACELET_BOUND
    if not 0 < t5 < t4 < t_es:
        raise ThresholdError('threshold ordering violated: %r, %r, %r'
                             % (t5, t4, t_es))
    return Thresholds(t4, t5, t_es, prop5_bound)
