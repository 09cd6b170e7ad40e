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

import configparser
import logging
import os

from collections import namedtuple

from tunnelcert.criteria.thresholds import DERIVED, PROP5_BOUNDS
from tunnelcert.geom.horoball import TOLERANCE


SECTION = 'default'
MAX_TOLERANCE = 1e-3

DEFAULTS = {
    'threads': 1,
    'tolerance': TOLERANCE,
    'n_max': 6,
    'window': 2,
    'prop5_bound': DERIVED,
}

ENVIRONMENT = {
    'threads': 'TUNNELCERT_THREADS',
    'tolerance': 'TUNNELCERT_TOLERANCE',
}

logger = logging.getLogger(__name__)


class Error(Exception):

    """Base exception class for this module."""


class SettingsError(Error):

    """A setting has a value outside its range."""


Settings = namedtuple('Settings', 'threads tolerance n_max window prop5_bound')


def config_paths():
    return [os.path.join(os.getenv('HOME', '/root/'), '.tunnelcert.cfg'),
            '/etc/tunnelcert.cfg']


def _read_config(paths):
    """Options of the [default] section of the first existing file."""
    cp = configparser.ConfigParser()
    for path in paths:
        if os.path.exists(path):
            cp.read(path)
            logger.debug('reading settings from %s', path)
            break
    if cp.has_section(SECTION):
        return dict(cp.items(SECTION))
    return {}


def _integer(name, raw, minimum):
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise SettingsError('%s must be an integer, got %r' % (name, raw))
    if value < minimum:
        raise SettingsError('%s must be at least %d, got %d' % (
            name, minimum, value))
    return value


def check_tolerance(raw):
    """Parses a tolerance, which must lie in (0, 1e-3)."""
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise SettingsError('tolerance must be a number, got %r' % (raw,))
    if not 0.0 < value < MAX_TOLERANCE:
        raise SettingsError('tolerance must lie in (0, %g), got %r' % (
            MAX_TOLERANCE, value))
    return value


def find_settings(environ=None, paths=None):
    """Finds the run settings from the following in priority:

     * environment variables
     * config file
     * built-in defaults

    The environment variables to use are:

     * TUNNELCERT_THREADS
     * TUNNELCERT_TOLERANCE

    The config file is the first of these that exists::

        $HOME/.tunnelcert.cfg
        /etc/tunnelcert.cfg

    The format of the file must be::

        [default]
        threads=4
        tolerance=1e-9
        n_max=6
        window=2
        prop5_bound=derived

    Args:
        environ (dict): Environment to read, os.environ by default.
        paths (list): Config files to try, config_paths() by default.

    Returns:
        A Settings tuple.

    Raises:
        SettingsError: A value is malformed or out of range.
    """
    environ = os.environ if environ is None else environ
    raw = dict(DEFAULTS)
    raw.update(_read_config(config_paths() if paths is None else paths))
    for key, variable in ENVIRONMENT.items():
        if environ.get(variable):
            raw[key] = environ[variable]

    prop5_bound = raw['prop5_bound']
    if prop5_bound not in PROP5_BOUNDS:
        raise SettingsError('prop5_bound must be one of %s, got %r' % (
            ', '.join(PROP5_BOUNDS), prop5_bound))
    return Settings(threads=_integer('threads', raw['threads'], 1),
                    tolerance=check_tolerance(raw['tolerance']),
                    n_max=_integer('n_max', raw['n_max'], 3),
                    window=_integer('window', raw['window'], 0),
                    prop5_bound=prop5_bound)
