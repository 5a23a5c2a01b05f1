# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

import sphinx_book_theme

sys.path.insert(0, os.path.abspath(".."))


# -- Project information -----------------------------------------------------

project = "Bathywave"
copyright = "2022, Bathywave developers"
author = "Bathywave developers"

about = {}
with open("../bathywave/__version__.py") as f:
    exec(f.read(), about)

version = about["__version__"]
if about["__version_suffix__"] == "":
    release = f'v{about["__version__"]}'
else:
    release = f'v{about["__version__"]}-{about["__version_suffix__"]}'


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx_book_theme",
    "sphinx_copybutton",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]

autosummary_generate = True
autosummary_imported_members = True

templates_path = [
    "_templates",
    os.path.join(sphinx_book_theme.get_html_theme_path(), "components"),
]

source_suffix = {".rst": "restructuredtext"}

master_doc = "index"

exclude_patterns = ["_build", "_templates", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_book_theme"
html_theme_path = [sphinx_book_theme.get_html_theme_path()]

html_theme_options = {
    "path_to_docs": "docs",
    "use_download_button": True,
    "show_navbar_depth": 1,
}

htmlhelp_basename = "bathywavedoc"

copybutton_prompt_text = r">>> |\.\.\. |\$ "
copybutton_prompt_is_regexp = True
