from django.apps import AppConfig


class OracleConfig(AppConfig):
    name = "veds.oracle"
    verbose_name = "Oracles and benchmarks"
