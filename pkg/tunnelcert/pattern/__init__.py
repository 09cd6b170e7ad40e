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
Ball-and-beam patterns
======================

A ball-and-beam pattern is the periodic picture seen from one cusp: the lifts
of the cusp(s) as horoballs and the lifts of the vertical geodesic as beams.
The lattice of parabolic translations fixing infinity acts on it, so a
pattern is stored as a finite presentation:

    * a :class:`~tunnelcert.pattern.model.Lattice` with two generators,
    * one :class:`~tunnelcert.pattern.model.BallEntry` per ball orbit,
    * one :class:`~tunnelcert.pattern.model.BeamRef` per beam orbit,
    * the geodesic length ``g``, the truncation radius ``epsilon`` and the
      ``completeness_radius`` contract: every ball with radius at least the
      completeness radius, and every beam incident to such a ball, is listed.

Patterns are read and written by :mod:`tunnelcert.pattern.io` and checked by
:mod:`tunnelcert.pattern.validation`.

File format
-----------

UTF-8 JSON::

    {
      "version": 1,
      "cusp_count": 1,
      "orientable": true,
      "lattice": {"t1": [1, 0], "t2": [0, 1]},
      "g": 0,
      "epsilon": 0.5,
      "completeness_radius": 0.5,
      "balls": [{"id": "a", "center": [0, 0], "radius": 0.5, "cusp": 0}],
      "beams": [{"a": {"id": "a", "offset": [0, 0]},
                 "b": {"id": "INF", "offset": [0, 0]}}]
    }
"""
