#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Configure tvcbf Sphinx documentation."""

import datetime
import os
import sys

# -- Path setup --------------------------------------------------------------

# On ReadTheDocs the package is installed; locally we document the source tree.
env_rtd = os.environ.get("READTHEDOCS")
if not env_rtd == "True":
    sys.path.insert(0, os.path.abspath("../.."))

import tvcbf  # noqa: E402

# -- Project information -----------------------------------------------------

current_year = datetime.datetime.now().year
project = "tvcbf"
copyright = f"{current_year} (BSD-3-Clause License)"
author = "tvcbf developers"

# The full version, including alpha/beta/rc tags
release = tvcbf.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "numpydoc",
    "sphinx.ext.intersphinx",
    "myst_parser",
]

language = "en"

templates_path = ["_static"]

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

master_doc = "index"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

# Members and inherited-members default to showing methods and attributes from
# a class or those inherited, in the order they are defined in the source.
autodoc_default_options = {
    "members": True,
    "inherited-members": False,
    "member-order": "bysource",
}

add_function_parentheses = False

# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"

html_theme_options = {
    "logo": {
        "text": "tvcbf",
        "alt_text": "tvcbf",
    },
    "show_nav_level": 1,
    "show_prev_next": False,
    "use_edit_page_button": False,
    "navbar_start": ["navbar-logo"],
    "navbar_center": ["navbar-nav"],
}

html_context = {"default_mode": "light"}

html_static_path = ["_static"]

htmlhelp_basename = "tvcbfdoc"

# -- Options for numpydoc extension ------------------------------------------
numpydoc_show_class_members = True
numpydoc_class_members_toctree = False

numpydoc_validation_checks = {"all", "GL01", "SA01", "EX01"}

# -- Options for intersphinx extension ---------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/{.major}".format(sys.version_info), None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
}
