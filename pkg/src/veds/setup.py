"""
Bootstrap the environment.

Load the ``VEDS_*`` capacities and the rest of the configuration from ``.env``
files before Django reads its settings. A ``.env`` found from the working
directory upwards is read first, so ``veds`` run inside a data directory picks
up its overrides. The checkout's own ``.env`` fills in the rest. Variables that
are already exported always win.

.. warning::

    do NOT import anything Django related here, as this file needs to be loaded
    before Django is initialized.
"""
import os

from dotenv import find_dotenv, load_dotenv

PROJECT_ENV = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, ".env")


def setup_env(settings_module: str = "veds.conf.dev"):
    # find_dotenv returns "" when there is no file
    local_env = find_dotenv(usecwd=True)
    if local_env:
        load_dotenv(local_env)
    load_dotenv(PROJECT_ENV)

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", settings_module)
