import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("DELTARING_CLI") or shutil.which("deltaring")
    if not path or not os.path.exists(path):
        pytest.skip("deltaring CLI not available")
    return path


@pytest.fixture(scope="session")
def schema_path():
    path = os.environ.get("DELTARING_SCHEMA")
    if not path:
        here = os.path.dirname(__file__)
        path = os.path.join(here, "..", "..", "docs", "report.schema.json")
    if not os.path.exists(path):
        pytest.skip("report schema not found")
    return path
