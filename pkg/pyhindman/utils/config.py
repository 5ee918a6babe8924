#!/usr/bin/env python
# -*- coding: utf-8 -*-

import copy
import json
import os

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import FipPolicy, SearchBudget
from pyhindman.config import DEFAULT_CONFIG


def get_config_from(path_to_file):
    """
    Loads configuration data from the supplied JSON file and returns it, merged
    section by section over the default configuration.

    :param path_to_file: path to the configuration file
    :type path_to_file: str
    :returns: the configuration `dict`
    :raises: `ConfigurationNotFoundError` when the supplied filepath is not a regular file; `ConfigurationParseError`
        when the supplied file cannot be parsed
    """
    assert path_to_file is not None
    if not os.path.isfile(path_to_file):
        raise exceptions.ConfigurationNotFoundError(
            'Configuration file not found: {}'.format(path_to_file))
    with open(path_to_file, 'r') as cf:
        try:
            config_data = json.load(cf)
        except ValueError as e:
            raise exceptions.ConfigurationParseError('Cannot parse {}: {}'.format(path_to_file, e))
    if not isinstance(config_data, dict):
        raise exceptions.ConfigurationParseError('Configuration must be a JSON object')
    config = get_default_config()
    for section, values in config_data.items():
        if section not in config or not isinstance(values, dict):
            raise exceptions.ConfigurationParseError('Unknown configuration section: {}'.format(section))
        unknown = set(values) - set(config[section])
        if unknown:
            raise exceptions.ConfigurationParseError(
                'Unknown keys in section {}: {}'.format(section, ', '.join(sorted(unknown))))
        config[section].update(values)
    return config


def get_default_config():
    """
    Returns a copy of the default pyhindman configuration.

    :returns: the configuration `dict`
    """
    return copy.deepcopy(DEFAULT_CONFIG)


def get_default_config_for_policy(**overrides):
    """
    Returns the default configuration with some policy values replaced, eg.
    `get_default_config_for_policy(bound=1000, min_count=4)`

    :returns: the configuration `dict`
    :raises: *ValueError* on unknown policy keys
    """
    config = get_default_config()
    unknown = set(overrides) - set(config['policy'])
    if unknown:
        raise ValueError('Unknown policy keys: %s' % ', '.join(sorted(unknown)))
    config['policy'].update(overrides)
    return config


def policy_from(config):
    """
    Builds the `FipPolicy` described by the "policy" section of a configuration

    :param config: the configuration `dict`
    :type config: dict
    :returns: a `FipPolicy`
    :raises: `ConfigurationParseError` when the section holds invalid values
    """
    try:
        return FipPolicy.from_dict(config['policy'])
    except (KeyError, ValueError, AssertionError) as e:
        raise exceptions.ConfigurationParseError('Invalid policy configuration: {}'.format(e))


def search_budget_from(config):
    """
    Builds the `SearchBudget` described by the "search" section of a configuration

    :param config: the configuration `dict`
    :type config: dict
    :returns: a `SearchBudget`
    :raises: `ConfigurationParseError` when the section holds invalid values
    """
    try:
        return SearchBudget.from_dict(config['search'])
    except (KeyError, ValueError, AssertionError) as e:
        raise exceptions.ConfigurationParseError('Invalid search configuration: {}'.format(e))
