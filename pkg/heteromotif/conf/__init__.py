"""
Settings for the heteromotif apps, read through one object whether
they're registered here, set in a project or built into Django.

Each app registers its settings with defaults in its ``defaults``
module. A value given in the Django settings always wins over the
registered default.
"""

from importlib import import_module

from django.conf import settings as django_settings
from django.utils.module_loading import module_has_submodule

from heteromotif import __version__  # noqa
from heteromotif.utils.conf import configure

registry = {}


def _setting_type(default):
    # bool is a subclass of int, so it's matched first.
    for candidate in (bool, int, str):
        if isinstance(default, candidate):
            return candidate
    return type(default)


def register_setting(
    name=None,
    label=None,
    description=None,
    default=None,
    choices=None,
    append=False,
):
    """
    Adds a setting and its default to ``registry``. With ``append``,
    registering a name that's already there extends its default
    instead, eg a tuple of extra values from a second app.
    """
    if name is None:
        raise TypeError("register_setting() needs a 'name' keyword argument.")

    existing = registry.get(name)
    if append and existing is not None:
        existing["default"] += default
        return

    registry[name] = {
        "name": name,
        "label": label or name.replace("_", " ").title(),
        "description": description,
        "default": default,
        "choices": choices,
        "type": _setting_type(default),
    }


class Settings:
    """
    Attribute access to settings. A registered name resolves to the
    project's value when it sets one, otherwise to the registered
    default. Any other name is read from ``django.conf.settings``.
    """

    def __getattr__(self, name):
        if name not in registry:
            return getattr(django_settings, name)
        return getattr(django_settings, name, registry[name]["default"])


def load_defaults():
    """
    Imports the ``defaults`` module of every installed app, the
    heteromotif apps first so projects can append to their settings.
    """
    apps = sorted(
        django_settings.INSTALLED_APPS,
        key=lambda app: not app.startswith("heteromotif."),
    )
    for app in apps:
        try:
            package = import_module(app)
        except ImportError:
            continue
        if module_has_submodule(package, "defaults"):
            import_module("%s.defaults" % app)


if not django_settings.configured:
    configure()

load_defaults()
settings = Settings()
