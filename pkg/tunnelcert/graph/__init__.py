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
Bracelets
=========

The quotient graph has one vertex per ball orbit plus the ball at infinity and
one edge per beam orbit, labeled by the lattice offset it crosses. Cycles
through infinity in the developed cover are the n-bracelets the criteria work
with; :func:`tunnelcert.graph.bracelets.enumerate_bracelets` lists them up to
translation, rotation and reversal.
"""
