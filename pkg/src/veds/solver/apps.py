from django.apps import AppConfig


class SolverConfig(AppConfig):
    name = "veds.solver"
    verbose_name = "VE-domination solvers"
