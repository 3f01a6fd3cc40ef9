# -*- coding: utf-8 -*-
"""Tests of the traffic signal model and barrier."""
