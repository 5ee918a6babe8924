#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import os
import pathlib
import tempfile
import unittest

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import FipPolicy, SearchBudget
from pyhindman.config import DEFAULT_CONFIG
from pyhindman.utils import config


class TestConfig(unittest.TestCase):

    def _write(self, folder, content):
        path = os.path.join(folder, 'config.json')
        with open(path, 'w') as f:
            f.write(content)
        return path

    def test_get_default_config(self):
        result = config.get_default_config()
        self.assertEqual(result, DEFAULT_CONFIG)
        result['policy']['bound'] = 1
        self.assertEqual(10000, DEFAULT_CONFIG['policy']['bound'])

    def test_get_config_from_failing(self):
        self.assertRaises(AssertionError, config.get_config_from, None)
        self.assertRaises(exceptions.ConfigurationNotFoundError, config.get_config_from,
                          str(pathlib.Path('.').absolute()))
        with tempfile.TemporaryDirectory() as folder:
            for content in ('{not json', '[1, 2]', '{"colours": {}}', '{"policy": {"bond": 10}}'):
                path = self._write(folder, content)
                self.assertRaises(exceptions.ConfigurationParseError, config.get_config_from, path)

    def test_get_config_from(self):
        with tempfile.TemporaryDirectory() as folder:
            path = self._write(folder, json.dumps({'policy': {'bound': 500}, 'workers': {'jobs': 2}}))
            result = config.get_config_from(path)
        self.assertEqual(500, result['policy']['bound'])
        self.assertEqual(8, result['policy']['min_count'])
        self.assertEqual(2, result['workers']['jobs'])

    def test_get_default_config_for_policy(self):
        result = config.get_default_config_for_policy(bound=1000, min_count=4)
        self.assertEqual(1000, result['policy']['bound'])
        self.assertEqual(4, result['policy']['min_count'])
        with self.assertRaises(ValueError):
            config.get_default_config_for_policy(colors=3)

    def test_policy_and_budget_from(self):
        self.assertEqual(FipPolicy(10000, 8, 0.5, 3, 64), config.policy_from(config.get_default_config()))
        self.assertEqual(SearchBudget(20000, 64, 3), config.search_budget_from(config.get_default_config()))
        broken = config.get_default_config_for_policy(bound=0)
        self.assertRaises(exceptions.ConfigurationParseError, config.policy_from, broken)
        self.assertRaises(exceptions.ConfigurationParseError, config.search_budget_from, {'search': {}})
