import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


class Criterion:
    def __init__(self, name):
        self.name = name

    def check(self, ok, detail=""):
        _ACCEPTANCE.append((self.name, bool(ok), detail))
        assert ok, f"{self.name}: {detail}"


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    name = marker.args[0] if marker else request.node.name
    return Criterion(name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
