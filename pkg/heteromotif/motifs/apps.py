from django.apps import AppConfig


class MotifsConfig(AppConfig):

    name = "heteromotif.motifs"
