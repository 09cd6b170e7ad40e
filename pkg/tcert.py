#!/usr/bin/env python
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

tcert: unknotting tunnel certifier
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Use tcert to validate ball-and-beam patterns, certify that their vertical
geodesic is an unknotting tunnel, and replay certificates. See
:mod:`tunnelcert.cli` for the subcommands and exit codes.

**Usage Example:**

.. code-block:: bash

    tcert.py thresholds
    prop4 0.3465735903
    prop5 0.1617535656
    elder 0.6931471806

    tcert.py --log-level=info certify --format json --report cert.json \
        tests/fixtures/five_bracelet.json

"""


import sys

import tunnelcert.cli


if __name__ == '__main__':
    sys.exit(tunnelcert.cli.main())
