from django.apps import AppConfig


class CoreConfig(AppConfig):

    name = "heteromotif.core"

    def ready(self):
        from . import checks  # noqa
