#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.workbench import Workbench
