# -*- coding: utf-8 -*-
"""Tests of the scalar QP solver."""
