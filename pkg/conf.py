# Sphinx configuration for the fordspheres documentation.
# The demos under demos/ are converted to rst by `doit demos` first.

import os
import sys

sys.path.insert(0, os.path.abspath("."))

project = "Ford Spheres"
copyright = "2024, fordspheres developers"
author = "fordspheres developers"
release = "0.1"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.githubpages",
]

templates_path = ["_templates"]
exclude_patterns = ["_build", "website", "examples", "Thumbs.db", ".DS_Store", "SPEC_FULL.md", "spec.md"]

html_theme = "sphinx_rtd_theme"
