"""
Default settings for the ``heteromotif.motifs`` app. Each of these can be
overridden in your project's settings module, just like regular
Django settings.
"""
from django.utils.translation import gettext_lazy as _

from heteromotif.conf import register_setting

register_setting(
    name="MOTIFS_WORKERS",
    description=_(
        "Number of worker processes used to count motifs when none is "
        "given explicitly. 1 counts in the calling process."
    ),
    default=1,
)

register_setting(
    name="MOTIFS_CHUNK_SIZE",
    description=_(
        "Number of consecutive edges handed to a worker at a time. Smaller "
        "chunks balance skewed graphs better at some queueing overhead."
    ),
    default=2048,
)

register_setting(
    name="MOTIFS_MAX_K",
    description=_("Largest graphlet size counted, 3 or 4 nodes."),
    default=4,
    choices=((3, "3"), (4, "4")),
)

register_setting(
    name="ORACLE_MAX_NODES",
    description=_(
        "Largest graph, in nodes, the brute-force oracle agrees to run on. "
        "Its cost grows with the square of the node count per edge."
    ),
    default=60,
)
