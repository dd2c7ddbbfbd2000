import pytest

from rotlattice import FlatPole, Sphere, Spheroid, Superball

_ACCEPTANCE = []


def builtin_bodies():
    return [Sphere(1), Spheroid(2, 1), Superball(4, 1), Superball(6, 1), FlatPole(4), Sphere(3), Spheroid("3/2", "1/2")]


@pytest.fixture
def report_criterion():
    """Record a one-line verdict for the acceptance summary, then assert."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" -- {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0].rstrip("ab"))):
            terminalreporter.write_line(line)
