import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("laws", max_examples=1000, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("laws")

from pastings import fixtures  # noqa: E402


@pytest.fixture(params=fixtures.names())
def fixture_name(request):
    return request.param
