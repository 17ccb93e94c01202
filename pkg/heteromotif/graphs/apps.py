from django.apps import AppConfig


class GraphsConfig(AppConfig):

    name = "heteromotif.graphs"
