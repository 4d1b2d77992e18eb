#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Allow pluckerize to be run with 'python -m pluckerize'."""

import sys

from pluckerize import main

sys.exit(main.main())
