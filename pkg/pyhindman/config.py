#!/usr/bin/env python
# -*- coding: utf-8 -*-

DEFAULT_CONFIG = {
    'policy': {
        'bound': 10000,
        'min_count': 8,
        'tail_fraction': 0.5,
        'max_part_size': 3,
        'instance_bound': 64
    },
    'search': {
        'max_nodes': 20000,
        'max_element': 64,
        'closure_rounds': 3
    },
    'expression': {
        'max_nodes': 10000
    },
    'workers': {
        'jobs': 1
    }
}
