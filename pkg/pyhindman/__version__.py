#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman import constants
from pyhindman.utils.strings import version_tuple_to_str

__title__ = 'pyhindman'
__description__ = 'Bounded coded-semigroup machinery for finite-sums theorems, with an exhaustive oracle'
__url__ = 'https://github.com/pyhindman/pyhindman'
__version__ = version_tuple_to_str(constants.PYHINDMAN_VERSION)
__author__ = 'pyhindman contributors'
__author_email__ = 'pyhindman@users.noreply.github.com'
__license__ = 'MIT'
