import pytest
from hypothesis import HealthCheck, settings

from toric_kt import corpus

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(params=sorted(corpus.SMOOTH_CORPUS))
def smooth_fan(request):
    return corpus.SMOOTH_CORPUS[request.param]()


@pytest.fixture(params=list(corpus.COMPLETE))
def complete_fan(request):
    return corpus.SMOOTH_CORPUS[request.param]()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
