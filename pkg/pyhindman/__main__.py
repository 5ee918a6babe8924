#!/usr/bin/env python
# -*- coding: utf-8 -*-

import sys

from pyhindman.cli.main import main

sys.exit(main())
