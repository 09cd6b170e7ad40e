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
Horoball geometry
=================

Closed-form geometry of horoballs and the geodesic arcs between them in the
upper half-space model, with the ball at infinity bounded by the plane z = 1.

Two finite balls of radii r1, r2 whose centers are 2b apart are joined by a
geodesic of length ln(b^2 / (r1 r2)) between their boundaries; a finite ball
of radius r is at distance -ln(2r) from the ball at infinity. All predicates
classify within a single tolerance (see :data:`tunnelcert.geom.horoball.TOLERANCE`).
"""
