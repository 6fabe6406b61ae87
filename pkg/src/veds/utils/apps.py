from django.apps import AppConfig


class UtilsConfig(AppConfig):
    name = "veds.utils"

    def ready(self):
        from . import checks  # noqa
