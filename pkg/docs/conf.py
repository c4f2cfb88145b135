#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# sysgeom documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

# flake8: noqa

import os
import sys

sys.path.insert(0, os.path.abspath('..'))


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.todo',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'sysgeom'
copyright = u'2026, the sysgeom developers'
author = u'the sysgeom developers'

version = 'git'
release = 'git'

language = None

exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = dict(
    navigation_depth=99,
    includehidden=False,
)
htmlhelp_basename = 'sysgeomdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    ('index', 'sysgeom.tex', u'sysgeom Documentation',
     u'the sysgeom developers', 'manual'),
]

man_pages = [
    ('index', 'sysgeom', u'sysgeom Documentation',
     [u'the sysgeom developers'], 1)
]


# -- Autodoc --------------------------------------------------------------

autodoc_default_flags = [
    'members',
    'undoc-members',
    'show-inheritance',
]
