# -*- coding: utf-8 -*-
#
# modnet documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The modules live at the repository root.
sys.path.insert(0, os.path.abspath('../..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'modnet'
copyright = '2026, the modnet developers'

version = '1.0'
release = '1.0'

exclude_patterns = []

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_static_path = []

htmlhelp_basename = 'modnetdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('cli', 'modnet', 'modularity tests for weighted signed networks',
     ['the modnet developers'], 1)
]
