# -*- coding: utf-8 -*-
#
# Sphinx configuration for the tunnelcert documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from tunnelcert import __version__  # noqa: E402


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'sphinxcontrib.napoleon',
    'sphinxcontrib.programoutput'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'tunnelcert'
copyright = u'2014, Quixey Inc.'
version = '.'.join(__version__.split('.')[:2])
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'tunnelcertdoc'

man_pages = [
    ('index', 'tunnelcert', u'tunnelcert Documentation',
     [u'Quixey Inc.'], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}
