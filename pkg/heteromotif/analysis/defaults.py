"""
Default settings for the ``heteromotif.analysis`` app. Each of these can
be overridden in your project's settings module, just like regular
Django settings.
"""
from django.utils.translation import gettext_lazy as _

from heteromotif.conf import register_setting

register_setting(
    name="SUMMARY_TOP_K",
    description=_(
        "Number of most frequent typed variants listed per graphlet by the "
        "``summary`` command."
    ),
    default=10,
)
