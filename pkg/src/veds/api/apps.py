from django.apps import AppConfig


class ApiConfig(AppConfig):
    name = "veds.api"
    verbose_name = "HTTP API"
