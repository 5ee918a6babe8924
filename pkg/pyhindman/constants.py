#!/usr/bin/env python
# -*- coding: utf-8 -*-

PYHINDMAN_VERSION = (1, 0, 0)
SIGNS = (1, -1)
EXIT_OK = 0
EXIT_NO_WITNESS = 2
EXIT_BUDGET_EXHAUSTED = 3
EXIT_INPUT_ERROR = 4
