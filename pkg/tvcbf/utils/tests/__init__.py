# -*- coding: utf-8 -*-
"""Tests of the utility functionality."""
