import pytest

from z2kgray import GeneratorSpec, span

# name -> (blocks, generators)
CORPUS = {
    "span(1,2) in Z4^2": (((4, 2),), [(1, 2)]),
    "Z6^2": (((6, 2),), [(1, 0), (0, 1)]),
    "span(2,3) in Z8^2": (((8, 2),), [(2, 3)]),
    "span(3) in Z6": (((6, 1),), [(3,)]),
}

EXTRA = {
    "span(2) in Z6": (((6, 1),), [(2,)]),
    "Z4": (((4, 1),), [(1,)]),
    "Z8": (((8, 1),), [(1,)]),
    "Z6 x Z2^4": (((6, 1), (2, 4)), [tuple(int(i == p) for i in range(5)) for p in range(5)]),
    "Z2 x Z4 diag": (((2, 1), (4, 1)), [(1, 2)]),
    "Z2^2 x Z4": (((2, 2), (4, 1)), [(1, 0, 1), (0, 1, 2)]),
    "Z10 span(5)": (((10, 1),), [(5,)]),
    "Z12 x Z2": (((12, 1), (2, 1)), [(4, 1)]),
}


def build(name):
    blocks, gens = {**CORPUS, **EXTRA}[name]
    return span(GeneratorSpec(blocks, tuple(gens)))


@pytest.fixture(params=sorted(CORPUS))
def corpus_code(request):
    return build(request.param)


@pytest.fixture(params=sorted({**CORPUS, **EXTRA}))
def any_code(request):
    return build(request.param)


# -- acceptance summary: one line per criterion ---------------------------------

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria.append((marker.args[0], marker.args[1], rep.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number:>2}: {title}")
