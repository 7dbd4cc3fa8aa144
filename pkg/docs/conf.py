#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# solvcoh documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.mathjax']

templates_path = []

source_suffix = '.rst'

master_doc = 'index'

project = 'solvcoh'
copyright = '2018, solvcoh developers'
author = 'solvcoh developers'

version = '0.3'
release = '0.3.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = True

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"

html_static_path = []

htmlhelp_basename = 'solvcohdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'solvcoh.tex', 'solvcoh Documentation',
     'solvcoh developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'solvcoh', 'solvcoh Documentation',
     [author], 1)
]
