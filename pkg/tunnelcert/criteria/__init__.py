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
Certification
=============

The certification pipeline evaluates, in a fixed order, the sufficient
conditions for a vertical geodesic to be an unknotting tunnel:

    1. Prop4: a 4-bracelet exists and g < ln(sqrt(2)).
    2. Prop5: one cusp, a 4- or 5-bracelet exists and g < t5.
    3. Prop6: orientable, g = 0 and a bracelet with 4 <= n <= 6 exists.
    4. Prop4Sharp / Prop5Sharp: the same bounds evaluated at the largest
       ball radius the pattern can contain instead of 1/2.
    5. ElderSibling: g < ln 2 and every ball reaches infinity through beams
       to strictly larger balls.
    6. DirectDisk: some bracelet's wall is punctured by no listed beam and
       every possible blocker would be a listed ball.

The first rule that holds becomes the certificate's verdict; every rule that
holds is listed in its metadata. See :mod:`tunnelcert.criteria.certify`.
"""
