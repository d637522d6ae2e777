import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=25,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture(autouse=True)
def exact_backend():
    """Every test starts on the exact backend with the default tolerance."""
    from fqg.scalar import set_backend

    set_backend("exact", 1e-9)
    yield
    set_backend("exact", 1e-9)
