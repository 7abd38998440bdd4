import functools

import pytest
from hypothesis import HealthCheck, settings

from doihopf import gallery

settings.register_profile("desk", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("desk")


@functools.lru_cache(maxsize=None)
def _fixtures():
    return gallery.fixture_data()


@pytest.fixture(scope="session")
def fixtures():
    return _fixtures()


def fixture_names():
    return list(_fixtures())


def fixture(name):
    return _fixtures()[name]


# acceptance results, filled by tests/test_acceptance.py: number -> (title, passed, seconds, note)
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, secs, note = ACCEPTANCE[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f} s)"
        if note:
            line += f"  -- {note}"
        terminalreporter.write_line(line)
