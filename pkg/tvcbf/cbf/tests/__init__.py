# -*- coding: utf-8 -*-
"""Tests of the barrier function machinery."""
