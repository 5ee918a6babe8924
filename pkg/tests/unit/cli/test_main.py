#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import os
import tempfile
import unittest

from pyhindman.cli import main


class TestMain(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def _file(self, name, content):
        path = os.path.join(self.folder.name, name)
        with open(path, 'w') as f:
            f.write(content)
        return path

    def _lines(self, out):
        return dict(line.split(': ', 1) for line in out.splitlines())

    def test_fs(self):
        status, out, err = main.run(['fs', '--set', '1,2'])
        self.assertEqual(0, status)
        self.assertEqual('', err)
        lines = self._lines(out)
        self.assertEqual('fs', lines['command'])
        self.assertIn('FS: 0,1,2,3 / NS: 1,2,3', out.splitlines())
        self.assertNotIn('NS', lines)
        self.assertEqual('10000', lines['policy.bound'])

    def test_policy_flags(self):
        status, out, _ = main.run(['fs', '--set', '1', '--bound', '500', '--tail', '0.25'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('500', lines['policy.bound'])
        self.assertEqual('0.25', lines['policy.tail_fraction'])

    def test_config_file(self):
        path = self._file('config.json', json.dumps({'policy': {'bound': 2000, 'min_count': 4}}))
        status, out, _ = main.run(['fs', '--set', '1', '--config', path, '--count', '5'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('2000', lines['policy.bound'])
        self.assertEqual('5', lines['policy.min_count'])

    def test_verify_parity(self):
        path = self._file('parity.txt', 'colors 2\n121212\n')
        status, out, _ = main.run(['verify', '--coloring', path, '--witness', '2,4', '--color', '2'])
        self.assertEqual(0, status)
        self.assertEqual('NS={2,4,6} ⊆ C_2', self._lines(out)['verified'])
        status, out, _ = main.run(['verify', '--coloring', path, '--witness', '1,3', '--color', '1'])
        self.assertEqual(2, status)
        self.assertIn('refuted', self._lines(out))

    def test_verify_predicate(self):
        status, _, _ = main.run(['verify', '--pred', 'n % 2 == 0', '--witness', '2,4,8'])
        self.assertEqual(0, status)

    def test_hindman_explicit(self):
        path = self._file('parity.txt', 'colors 2\n121212\n')
        status, out, _ = main.run(['hindman', '--coloring', path, '--size', '2', '--bound', '1000'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('2,4', lines['witness'])
        self.assertEqual('2', lines['color'])
        self.assertEqual('true', lines['contained'])

    def test_hindman_no_witness(self):
        path = self._file('ws8.txt', 'colors 2\n11212221\n')
        status, out, _ = main.run(['hindman', '--coloring', path, '--size', '2', '--bound', '1000'])
        self.assertEqual(2, status)
        lines = self._lines(out)
        self.assertEqual('NoWitnessAtBound', lines['outcome'])
        self.assertEqual('true', lines['oracle_confirmed'])

    def test_decide(self):
        status, out, _ = main.run(['decide', '--pred', 'n % 2 == 0', '--size', '2', '--bound', '1000',
                                   '--inst', '16'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('A', lines['side'])
        self.assertEqual('2,4', lines['witness'])
        self.assertEqual('VerifiedAtBound', lines['certificate.A.verdict'])

    def test_decide_complement(self):
        status, out, _ = main.run(['decide', '--pred', 'n % 2 == 1', '--size', '2', '--bound', '1000',
                                   '--inst', '16'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('A^c', lines['side'])
        self.assertEqual('RefutedAtBound', lines['certificate.refutation.verdict'])

    def test_decide_beyond_the_first_candidate_window(self):
        status, out, _ = main.run(['decide', '--pred', 'n > 76', '--size', '2', '--bound', '1000', '--inst', '16'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('A', lines['side'])
        self.assertEqual('77,78', lines['witness'])

    def test_every_subcommand_reports_the_policy(self):
        parity = self._file('parity.txt', 'colors 2\n121212\n')
        small = ['--bound', '1000', '--inst', '16']
        invocations = [
            ['fs', '--set', '1,2'],
            ['decide', '--pred', 'n % 2 == 0', '--size', '2'] + small,
            ['hindman', '--coloring', parity, '--size', '2'],
            ['iterated', '--preds', 'n % 2 == 0; n % 3 == 0', '--size', '4'] + small,
            ['oracle-minbound', '--colors', '2', '--size', '2', '--max', '12'],
            ['verify', '--pred', 'n % 2 == 0', '--witness', '2,4'],
            ['check-family', '--builtin', 'frechet'] + small]
        keys = ['policy.bound', 'policy.min_count', 'policy.tail_fraction', 'policy.max_part_size',
                'policy.instance_bound']
        for argv in invocations:
            status, out, _ = main.run(argv)
            self.assertEqual(0, status, argv[0])
            heading = [line.split(': ', 1)[0] for line in out.splitlines()[:6]]
            self.assertEqual(['command'] + keys, heading, argv[0])

    def test_oracle_minbound(self):
        status, out, _ = main.run(['oracle-minbound', '--colors', '2', '--size', '2', '--max', '12'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('9', lines['bound'])
        self.assertEqual('11212221', lines['extremal'])
        self.assertEqual('{1,2,4,8}', lines['extremal.C_1'])

    def test_check_family(self):
        status, out, _ = main.run(['check-family', '--builtin', 'evens', '--bound', '1000'])
        self.assertEqual(0, status)
        lines = self._lines(out)
        self.assertEqual('VerifiedAtBound', lines['fip.verdict'])
        self.assertEqual('VerifiedAtBound', lines['semigroup.verdict'])

    def test_output_is_deterministic(self):
        argv = ['decide', '--pred', 'n % 3 == 0', '--size', '2', '--bound', '1000', '--inst', '16']
        self.assertEqual(main.run(argv), main.run(argv))

    def test_input_errors(self):
        status, out, err = main.run(['decide', '--pred', 'n %%', '--size', '2'])
        self.assertEqual(4, status)
        self.assertEqual('', out)
        self.assertIn('column 4', err)
        path = self._file('bad.txt', 'colors 2\n12132\n')
        status, _, err = main.run(['hindman', '--coloring', path, '--size', '2'])
        self.assertEqual(4, status)
        self.assertIn('digit 3 out of range', err)
        status, _, err = main.run(['fs', '--set', '2,1'])
        self.assertEqual(4, status)
        status, _, _ = main.run(['fs', '--set', '1', '--config', os.path.join(self.folder.name, 'none.json')])
        self.assertEqual(4, status)

    def test_usage_errors(self):
        self.assertEqual(4, main.main(['decide', '--size', '2']))
        self.assertEqual(4, main.main(['no-such-command']))


if __name__ == "__main__":
    unittest.main()
