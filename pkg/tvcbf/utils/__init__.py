#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Utility functionality used through `tvcbf`."""
from typing import List

from tvcbf.utils._check import check_finite, check_nonnegative, check_positive

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["check_finite", "check_nonnegative", "check_positive"]
