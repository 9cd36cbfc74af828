# This file must be kept very simple, because it is consumed from several
# places: it is imported by cubealg/__init__.py, execfile'd by setup.py, etc.

# Versions go 0.1.0 -> 0.1.0+dev -> 0.2.0 -> 0.2.0+dev; the +dev versions are
# what sits in the VCS between releases and sort after the plain release
# (PEP 440 local suffix).

__version__ = "0.1.0+dev"
