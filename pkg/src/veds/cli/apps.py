from django.apps import AppConfig


class CliConfig(AppConfig):
    name = "veds.cli"
    verbose_name = "Command line"
