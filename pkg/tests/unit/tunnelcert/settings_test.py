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

import os
import shutil
import tempfile
import unittest

from unittest import mock

from tunnelcert import settings


class FindSettingsTest(unittest.TestCase):

    def setUp(self):
        self.home = tempfile.mkdtemp()
        self.path = os.path.join(self.home, '.tunnelcert.cfg')

    def tearDown(self):
        shutil.rmtree(self.home)

    def write(self, text):
        with open(self.path, 'w') as f:
            f.write(text)

    def testDefaults(self):
        found = settings.find_settings(environ={}, paths=[self.path])
        self.assertEqual(settings.Settings(1, 1e-9, 6, 2, 'derived'), found)

    def testConfigFile(self):
        self.write('[default]\nthreads=4\nn_max=8\nprop5_bound=published\n')
        found = settings.find_settings(environ={}, paths=[self.path])
        self.assertEqual(4, found.threads)
        self.assertEqual(8, found.n_max)
        self.assertEqual('published', found.prop5_bound)
        self.assertEqual(1e-9, found.tolerance)

    def testFirstExistingFileWins(self):
        self.write('[default]\nwindow=4\n')
        other = os.path.join(self.home, 'other.cfg')
        with open(other, 'w') as f:
            f.write('[default]\nwindow=1\n')
        found = settings.find_settings(
            environ={}, paths=[os.path.join(self.home, 'missing.cfg'),
                               self.path, other])
        self.assertEqual(4, found.window)

    def testEnvironmentOverridesFile(self):
        self.write('[default]\nthreads=4\ntolerance=1e-8\n')
        found = settings.find_settings(
            environ={'TUNNELCERT_THREADS': '2',
                     'TUNNELCERT_TOLERANCE': '1e-10'},
            paths=[self.path])
        self.assertEqual(2, found.threads)
        self.assertEqual(1e-10, found.tolerance)

    def testHomeDirectory(self):
        self.write('[default]\nthreads=3\n')
        with mock.patch.object(os, 'getenv', return_value=self.home) as getenv:
            found = settings.find_settings(environ={})
        getenv.assert_called_with('HOME', '/root/')
        self.assertEqual(3, found.threads)

    def testBadTolerance(self):
        for raw in ('0', '1e-3', '-1e-9', 'tiny'):
            self.assertRaises(settings.SettingsError, settings.find_settings,
                              {'TUNNELCERT_TOLERANCE': raw}, [self.path])

    def testBadThreads(self):
        self.assertRaises(settings.SettingsError, settings.find_settings,
                          {'TUNNELCERT_THREADS': '0'}, [self.path])
        self.assertRaises(settings.SettingsError, settings.find_settings,
                          {'TUNNELCERT_THREADS': 'four'}, [self.path])

    def testBadFileValues(self):
        self.write('[default]\nn_max=2\n')
        self.assertRaises(settings.SettingsError, settings.find_settings,
                          {}, [self.path])
        self.write('[default]\nprop5_bound=exact\n')
        self.assertRaises(settings.SettingsError, settings.find_settings,
                          {}, [self.path])


class CheckToleranceTest(unittest.TestCase):

    def testRange(self):
        self.assertEqual(1e-6, settings.check_tolerance('1e-6'))
        self.assertRaises(settings.SettingsError, settings.check_tolerance,
                          '0.01')
