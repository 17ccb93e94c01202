from django.apps import AppConfig


class SynthConfig(AppConfig):

    name = "heteromotif.synth"
