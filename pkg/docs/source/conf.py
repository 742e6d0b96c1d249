#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import sys
from pathlib import Path

HERE = Path(__file__).parent
sys.path[:0] = [str(HERE.parent.parent)]

# -- General configuration ------------------------------------------------

nitpicky = False
needs_sphinx = '2.0'

# General information
project = 'superkostka'
copyright = '2026, superkostka team'
author = 'superkostka team'
version = 'v0.1'
release = 'v0.1.0'

# default settings
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
default_role = 'literal'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.autosummary',
    "sphinx.ext.viewcode",
    "sphinx_autodoc_typehints",
]

# Generate the API documentation when building
autosummary_generate = True
autodoc_member_order = 'bysource'
autodoc_default_flags = ['members']
todo_include_todos = False
language = None

html_theme = 'sphinx_rtd_theme'
