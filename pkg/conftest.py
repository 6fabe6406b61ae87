"""
Run the Django test suite under pytest.

Mirror ``python src/manage.py test``: load the settings through ``setup_env``,
set up the test environment and create the test database for the session.
"""
import django
from django.test.utils import setup_test_environment, teardown_test_environment

from veds.setup import setup_env

setup_env()
django.setup()


def pytest_sessionstart(session):
    from django.test.runner import DiscoverRunner

    setup_test_environment()
    runner = DiscoverRunner(verbosity=0, interactive=False)
    session.config._veds_runner = runner
    session.config._veds_old_config = runner.setup_databases()


def pytest_sessionfinish(session, exitstatus):
    runner = getattr(session.config, "_veds_runner", None)
    if runner is None:
        return
    runner.teardown_databases(session.config._veds_old_config)
    teardown_test_environment()
