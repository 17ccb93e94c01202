#!/usr/bin/env python
import os
import sys

from django.core import management

from heteromotif.utils.conf import configure


def main(argv=None):
    # Outside of a Django project, configure the heteromotif apps so
    # that execute_from_command_line can find their commands.
    if not os.environ.get("DJANGO_SETTINGS_MODULE"):
        configure()
    management.execute_from_command_line(argv or sys.argv)


if __name__ == "__main__":
    main()
