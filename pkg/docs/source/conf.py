from datetime import datetime

# pylint: disable=W0622
project = 'Selfish Index Coding'
copyright = f'{datetime.now().year}, Selfish Index Coding Contributors'
author = 'Selfish Index Coding Contributors'
extensions = ['sphinx_rtd_theme']
templates_path = ['_templates']
exclude_patterns = []
html_theme = 'sphinx_rtd_theme'
master_doc = 'index'
display_version = True
sticky_navigation = True
source_suffix = {
    '.rst': 'restructuredtext',
}
html_theme_options = {}
