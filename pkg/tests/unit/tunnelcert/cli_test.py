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

import io
import json
import os
import shutil
import sys
import tempfile
import unittest

from unittest import mock

from tunnelcert import cli, settings

from tests.unit.tunnelcert import patterns


class CliTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        defaults = settings.Settings(1, 1e-9, 6, 2, 'derived')
        patches = [
            mock.patch.object(settings, 'find_settings',
                              return_value=defaults),
            mock.patch('sys.stdout', new_callable=io.StringIO),
            mock.patch('sys.stderr', new_callable=io.StringIO),
        ]
        for p in patches:
            p.start()
            self.addCleanup(p.stop)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def run_cli(self, *argv):
        code = cli.main(list(argv))
        return code, sys.stdout.getvalue(), sys.stderr.getvalue()

    def testThresholds(self):
        code, out, _ = self.run_cli('thresholds')
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual('prop4 0.3465735903\n'
                         'prop5 0.1617535656 (derived)\n'
                         'elder 0.6931471806\n', out)

    def testPublishedThresholds(self):
        _, out, _ = self.run_cli('thresholds', '--prop5-bound', 'published')
        self.assertIn('prop5 0.168474 (published)\n', out)

    def testThresholdsFromSettings(self):
        settings.find_settings.return_value = settings.Settings(
            1, 1e-9, 6, 2, 'published')
        _, out, _ = self.run_cli('thresholds')
        self.assertIn('prop5 0.168474 (published)\n', out)

    def testCertify(self):
        code, out, _ = self.run_cli('certify',
                                    patterns.fixture('square_lattice.json'))
        self.assertEqual(cli.EXIT_OK, code)
        self.assertTrue(out.startswith('verdict: Tunnel\nrule: Prop4\n'))

    def testCertifyJson(self):
        code, out, _ = self.run_cli('certify', '--format', 'json',
                                    patterns.fixture('six_bracelet.json'))
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual('Prop6', json.loads(out)['rule'])

    def testInconclusive(self):
        code, out, _ = self.run_cli('certify',
                                    patterns.fixture('isolated_pair.json'))
        self.assertEqual(cli.EXIT_INCONCLUSIVE, code)
        self.assertTrue(out.startswith('verdict: Inconclusive\n'))

    def testInvalidPattern(self):
        code, out, err = self.run_cli('certify',
                                      patterns.fixture('overlap.json'))
        self.assertEqual(cli.EXIT_DATA, code)
        self.assertEqual('', out)
        self.assertIn('overlap', err)

    def testValidate(self):
        code, out, _ = self.run_cli('validate',
                                    patterns.fixture('square_lattice.json'))
        self.assertEqual(cli.EXIT_OK, code)
        code, out, _ = self.run_cli('validate', '--format', 'json',
                                    patterns.fixture('overlap.json'))
        self.assertEqual(cli.EXIT_FAILED, code)

    def testMalformed(self):
        code, _, err = self.run_cli('validate',
                                    patterns.fixture('malformed.json'))
        self.assertEqual(cli.EXIT_DATA, code)
        self.assertIn('radius', err)

    def testMissingFile(self):
        code, _, _ = self.run_cli('certify',
                                  os.path.join(self.tmp, 'missing.json'))
        self.assertEqual(cli.EXIT_DATA, code)

    def testUsage(self):
        for argv in ([], ['frobnicate'], ['certify'],
                     ['certify', '--n-max', '2', 'p.json'],
                     ['certify', '--tol', '0.1', 'p.json'],
                     ['validate', '--window', '-1', 'p.json'],
                     ['--log-level', 'LOUD', 'thresholds']):
            self.assertEqual(cli.EXIT_USAGE, self.run_cli(*argv)[0], argv)

    def testSettingsError(self):
        settings.find_settings.side_effect = settings.SettingsError('bad')
        code, _, err = self.run_cli('thresholds')
        self.assertEqual(cli.EXIT_USAGE, code)
        self.assertIn('settings: bad', err)

    def testVerify(self):
        report = os.path.join(self.tmp, 'cert.json')
        pattern = patterns.fixture('five_bracelet.json')
        code, out, _ = self.run_cli('certify', '--format', 'json',
                                    '--report', report, pattern)
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual('', out)
        code, out, _ = self.run_cli('verify', pattern, report)
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual('certificate reproduced: Tunnel Prop5\n', out)

    def testVerifyMismatch(self):
        report = os.path.join(self.tmp, 'cert.json')
        self.run_cli('certify', '--format', 'json', '--report', report,
                     patterns.fixture('five_bracelet.json'))
        code, out, _ = self.run_cli('verify',
                                    patterns.fixture('elder_sibling.json'),
                                    report)
        self.assertEqual(cli.EXIT_FAILED, code)
        self.assertIn('problem: input digest', out)

    def testVerifyNotJson(self):
        report = os.path.join(self.tmp, 'cert.json')
        with open(report, 'w') as f:
            f.write('verdict: Tunnel\n')
        code, _, err = self.run_cli('verify',
                                    patterns.fixture('five_bracelet.json'),
                                    report)
        self.assertEqual(cli.EXIT_DATA, code)
        self.assertIn('is not JSON', err)
