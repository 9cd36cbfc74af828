#!/usr/bin/env python3
#
# cubealg documentation build configuration file, originally generated by
# sphinx-quickstart.

import os
import sys

# Make the package importable without installing it.
sys.path.insert(0, os.path.abspath("../.."))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'cubealg'
copyright = '2026, the cubealg developers'
author = 'the cubealg developers'

import cubealg
# The short X.Y version.
version = cubealg.__version__
# The full version, including alpha/beta/rc tags.
release = cubealg.__version__

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = []
htmlhelp_basename = 'cubealgdoc'

# -- Options for LaTeX / man / texinfo output -----------------------------

latex_elements = {
}
latex_documents = [
    (master_doc, 'cubealg.tex', 'cubealg Documentation',
     author, 'manual'),
]
man_pages = [
    (master_doc, 'cubealg', 'cubealg Documentation',
     [author], 1)
]
texinfo_documents = [
    (master_doc, 'cubealg', 'cubealg Documentation',
     author, 'cubealg', 'Exact algebra for unit-cube quotients.',
     'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
}
