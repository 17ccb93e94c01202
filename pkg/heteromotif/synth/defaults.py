"""
Default settings for the ``heteromotif.synth`` app.
"""
from django.utils.translation import gettext_lazy as _

from heteromotif.conf import register_setting

register_setting(
    name="SYNTH_DEFAULT_SEED",
    description=_("Random seed used by the generators when none is given."),
    default=0,
)
