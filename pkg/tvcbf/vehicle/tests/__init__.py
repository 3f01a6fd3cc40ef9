# -*- coding: utf-8 -*-
"""Tests of the vehicle model."""
