#
# heteromotif documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys
from datetime import datetime

sys.path.insert(0, os.path.realpath(os.path.join(os.getcwd(), "..")))

import heteromotif  # noqa

if "DJANGO_SETTINGS_MODULE" not in os.environ:
    import django

    from heteromotif.utils.conf import configure

    configure()
    django.setup()

# -- General configuration -----------------------------------------------------

extensions = [
    "sphinx.ext.intersphinx",
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"

intersphinx_mapping = {
    "django": (
        "https://docs.djangoproject.com/en/dev/",
        "https://docs.djangoproject.com/en/dev/_objects/",
    ),
    "networkx": ("https://networkx.org/documentation/stable/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}

master_doc = "index"

project = "heteromotif"
copyright = "%s, the heteromotif developers" % datetime.now().year

version = heteromotif.__version__
release = heteromotif.__version__

exclude_trees = ["_build"]
pygments_style = "sphinx"

# -- Options for HTML output ---------------------------------------------------

html_theme = "alabaster"
htmlhelp_basename = "heteromotifdoc"

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    ("index", "heteromotif.tex", "heteromotif Documentation", "", "manual"),
]
