import pytest

_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_LINES] = {}


class _Criterion:
    def __init__(self, lines, number, title):
        self.lines, self.number, self.title = lines, number, title
        self.done = False

    def finish(self, ok, detail=""):
        self.done = True
        line = f"criterion {self.number}: {'PASS' if ok else 'FAIL'}  {self.title}"
        if detail:
            line += f"  [{detail}]"
        self.lines[self.number] = line
        print(line)
        assert ok, line


@pytest.fixture
def criterion(request):
    made = []

    def open_(number, title):
        c = _Criterion(request.config.stash[_LINES], number, title)
        made.append(c)
        return c

    yield open_
    for c in made:
        if not c.done:
            c.lines[c.number] = f"criterion {c.number}: FAIL  {c.title}  [raised before completing]"


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
