import os

import django

from heteromotif.utils.conf import configure


def pytest_report_header(config):
    """
    Have pytest report whether the timing tests are enabled
    """
    bench = "on" if os.environ.get("HETEROMOTIF_BENCH") else "off"
    return f"heteromotif benchmarks: {bench}"


def pytest_configure():
    """
    Configure Django with the heteromotif apps, unless a settings module
    has been given to test against.
    """
    if not os.environ.get("DJANGO_SETTINGS_MODULE"):
        configure()
    django.setup()
