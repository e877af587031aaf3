# -*- coding: utf-8 -*-
#
# hurwitz documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# make the package importable without installing it
sys.path.insert(0, os.path.abspath('..'))

import hurwitz

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.viewcode',
    'sphinxcontrib.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'hurwitz'
copyright = '2026, the hurwitz developers'

version = hurwitz.__version__
release = hurwitz.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

# on readthedocs.org the theme is provided, elsewhere it has to be installed
# (see doc-requirements.txt)
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:
    html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'hurwitzdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('cli', 'hurwitz', 'hurwitz command line tool',
     ['the hurwitz developers'], 1)
]
