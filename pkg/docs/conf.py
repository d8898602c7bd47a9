# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Sphinx configuration."""

from __future__ import print_function

import os

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ['image.nonlocal_uri']

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'BJ-Symmetry'
copyright = u'2026, BJ-Symmetry developers'
author = u'BJ-Symmetry developers'

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join('..', 'bj_symmetry', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

# The full version, including alpha/beta/rc tags.
release = version

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------
html_theme = 'alabaster'

html_theme_options = {
    'description': 'Birkhoff-James orthogonality and operator symmetry in '
                   'finite-dimensional normed spaces.',
    'github_button': False,
    'github_banner': False,
    'show_powered_by': False,
}

html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
        'donate.html',
    ]
}

htmlhelp_basename = 'bj-symmetry_namedoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'bj-symmetry.tex', u'bj-symmetry Documentation',
     u'BJ-Symmetry developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'bj-symmetry', u'bj-symmetry Documentation',
     [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'bj-symmetry', u'BJ-Symmetry Documentation',
     author, 'bj-symmetry',
     'Birkhoff-James orthogonality and operator symmetry.',
     'Miscellaneous'),
]

# Example configuration for intersphinx: refer to the Python standard library.
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'flask': ('https://flask.palletsprojects.com/en/latest/', None),
}

# Autodoc configuraton.
autoclass_content = 'both'
