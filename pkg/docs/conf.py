import os
import sys

sys.path.insert(0, os.path.abspath(".."))
from django.conf import settings  # noqa

settings.configure()

project = "Django A-RoF TTD"
copyright = "2024, Socotec.io"

extensions = [
    "sphinx.ext.intersphinx",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.napoleon",
    "sphinx_autodoc_typehints",
    "sphinx_rtd_theme",
    "myst_parser",
]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
}

napoleon_google_docstring = True
napoleon_include_special_with_doc = True
napoleon_attr_annotations = True

autosectionlabel_prefix_document = True

html_theme = "sphinx_rtd_theme"
html_show_sourcelink = True
html_title = "Django A-RoF TTD"

html_theme_options = {
    "display_version": True,
}
