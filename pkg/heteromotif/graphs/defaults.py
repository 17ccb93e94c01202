"""
Default settings for the ``heteromotif.graphs`` app. Each of these can be
overridden in your project's settings module, just like regular
Django settings.
"""
from django.utils.translation import gettext_lazy as _

from heteromotif.conf import register_setting

register_setting(
    name="GRAPH_COMMENT_PREFIX",
    description=_(
        "Lines in edge and node type files starting with this prefix are "
        "ignored, as is anything following it on a line."
    ),
    default="#",
)

register_setting(
    name="GRAPH_CACHE_VERSION",
    description=_(
        "Version written to, and required from, the header of binary graph "
        "caches. Bump it whenever the cache layout changes."
    ),
    default=1,
)
