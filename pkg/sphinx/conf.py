# -*- coding: utf-8 -*-
#
# pyhindman documentation build configuration file

import sys
import os
import sphinx_readable_theme

sys.path.insert(0, os.path.abspath('..'))

from pyhindman.__version__ import __version__  # noqa: E402

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'recommonmark'
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'

project = u'pyhindman'
copyright = u'2024, pyhindman contributors'

version = __version__
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme_path = [sphinx_readable_theme.get_html_theme_path()]
html_theme = 'readable'
html_short_title = 'PyHindman documentation'
html_last_updated_fmt = '%b %d, %Y'
html_show_copyright = True
htmlhelp_basename = 'pyhindmandoc'

man_pages = [
    ('index', 'pyhindman', u'pyhindman Documentation', [u'pyhindman contributors'], 1)
]

autodoc_member_order = 'bysource'
