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
"""Deterministic JSON emission shared by pattern files and certificates.

Keys keep their insertion order, floats carry 17 significant digits, lists
of scalars stay on one line and the document ends with a single LF.
"""

import json
import math

INDENT = '  '


def format_number(value):
    """Formats an int or float so that parsing it returns the same value.

    Raises:
        ValueError: The value is not finite.
    """
    if isinstance(value, int):
        return '%d' % value
    if math.isnan(value) or math.isinf(value):
        raise ValueError('cannot serialize non-finite number %r' % value)
    if value == 0:
        return '0'
    return '%.17g' % value


def _is_scalar(value):
    return value is None or isinstance(value, (bool, int, float, str))


def _dump(value, depth):
    if value is None:
        return 'null'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (int, float)):
        return format_number(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    pad = INDENT * (depth + 1)
    if isinstance(value, dict):
        if not value:
            return '{}'
        items = ['%s%s: %s' % (pad, json.dumps(str(k), ensure_ascii=False),
                               _dump(v, depth + 1))
                 for k, v in value.items()]
        return '{\n%s\n%s}' % (',\n'.join(items), INDENT * depth)
    if isinstance(value, (list, tuple)):
        if not value:
            return '[]'
        if all(_is_scalar(v) for v in value):
            return '[%s]' % ', '.join(_dump(v, depth) for v in value)
        items = ['%s%s' % (pad, _dump(v, depth + 1)) for v in value]
        return '[\n%s\n%s]' % (',\n'.join(items), INDENT * depth)
    raise TypeError('cannot serialize %r' % (value,))


def dumps(value):
    """Serializes plain data (dicts, lists, numbers, strings) to JSON text."""
    return _dump(value, 0) + '\n'
