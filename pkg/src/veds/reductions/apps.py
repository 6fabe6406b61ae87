from django.apps import AppConfig


class ReductionsConfig(AppConfig):
    name = "veds.reductions"
    verbose_name = "Set cover reductions"
