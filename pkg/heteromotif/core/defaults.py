"""
Default settings for the ``heteromotif.core`` app. Each of these can be
overridden in your project's settings module, just like regular
Django settings, or passed to ``heteromotif.utils.conf.configure()``.
"""
from django.utils.translation import gettext_lazy as _

from heteromotif.conf import register_setting

register_setting(
    name="COUNTS_FILE_NAME",
    description=_("Name of the per-edge sparse counts file written by ``count``."),
    default="counts.txt",
)

register_setting(
    name="LOOKUP_FILE_NAME",
    description=_(
        "Name of the typed motif lookup table mapping the consecutive ids "
        "used in the counts file to motif descriptions."
    ),
    default="motifs.txt",
)

register_setting(
    name="MANIFEST_FILE_NAME",
    description=_("Name of the JSON run manifest written next to the counts."),
    default="manifest.json",
)

register_setting(
    name="GLOBAL_FILE_NAME",
    description=_("Name of the global typed graphlet frequency table."),
    default="global.tsv",
)
