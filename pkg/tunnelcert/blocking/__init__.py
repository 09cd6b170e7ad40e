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
Blocking
========

A bracelet through infinity spans a vertical wall: the strip over the
polyline joining its finite centers, between the bracelet's own surface (the
lower envelope) and the plane z = 1. A beam that crosses this wall an odd
number of times blocks the obvious disk; a bracelet with no such beam among
the listed ones bounds a disk directly.
"""
