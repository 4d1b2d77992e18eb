#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Declare pluckerize as a package."""

from . import enumerations

__version__ = "1.0.0"
