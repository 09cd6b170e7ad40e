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
"""
tunnelcert
==========

tunnelcert decides, from the horoball picture of a one- or two-cusped
hyperbolic 3-manifold, whether a vertical geodesic is an unknotting tunnel.
It only implements sufficient conditions: the answer is either a certificate
naming the rule that fired together with every number needed to re-check it,
or an inconclusive report listing why each rule failed.

Frame
=====

Everything happens in the upper half-space model, normalized so that the
ball at infinity is the half-space above height 1. A finite horoball is a
Euclidean ball resting on the boundary plane and is described by the point
it touches and its Euclidean radius, which is at most 1/2.

Inputs
======

A pattern is a finite presentation of the (infinite, periodic) ball-and-beam
picture: one representative per lattice orbit of balls, the beam orbits
between them, the length ``g`` of the geodesic and the radius down to which
the ball list is asserted complete. See :mod:`tunnelcert.pattern`.

Settings
========

Defaults can be overridden, in priority order, by:

 1. Environment variables `TUNNELCERT_THREADS` and `TUNNELCERT_TOLERANCE`
 2. An ini-style configuration file at `~/.tunnelcert.cfg` with contents like:
   ::

    [default]
    threads=4
    tolerance=1e-9
    n_max=6
    window=2
    prop5_bound=derived
   ..

 3. A system-wide version of that file at /etc/tunnelcert.cfg.

Main Interfaces
===============

Certify a pattern file like this::

    from tunnelcert.pattern import io
    from tunnelcert.criteria import certify

    p = io.load_pattern('square_lattice.json')
    cert = certify.certify(p, certify.CertifyOptions())
    print(cert.verdict, cert.rule)

The same pipeline is available from the command line as ``tcert.py``.

Subpackages
===========

 * :mod:`tunnelcert.geom`: closed-form horoball and geodesic geometry
 * :mod:`tunnelcert.pattern`: pattern model, file format and validation
 * :mod:`tunnelcert.graph`: quotient graph and bracelet enumeration
 * :mod:`tunnelcert.blocking`: the vertical wall and blocking beams
 * :mod:`tunnelcert.criteria`: thresholds, elder siblings and certification
 * :mod:`tunnelcert.oracle`: numeric and brute-force cross-checks
"""

__version__ = "1.0.0"
