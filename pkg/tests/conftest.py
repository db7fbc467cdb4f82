import itertools

import hypothesis
import hypothesis.strategies as st
import pytest

from quiversat.grids import a2, a3, kronecker, theta
from quiversat.quiver import Quiver
from quiversat.schofield import SchofieldSession

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def A2():
    return a2()


@pytest.fixture
def K2():
    return kronecker()


@pytest.fixture
def A3():
    return a3()


@pytest.fixture
def Theta():
    return theta()


@pytest.fixture
def session():
    """Factory: one fresh Schofield session per quiver."""
    cache = {}

    def make(Q):
        if Q not in cache:
            cache[Q] = SchofieldSession(Q)
        return cache[Q]

    return make


@st.composite
def acyclic_quivers(draw, max_vertices=5, max_multiplicity=2):
    K = draw(st.integers(1, max_vertices))
    pairs = list(itertools.combinations(range(K), 2))
    mults = draw(st.lists(st.integers(0, max_multiplicity), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(range(K)))
    names = [f"q{i}" for i in range(K)]
    arrows = [(names[perm[i]], names[perm[j]]) for (i, j), m in zip(pairs, mults) for _ in range(m)]
    arrows = draw(st.permutations(arrows)) if arrows else []
    return Quiver(tuple(names), tuple(arrows))


def vectors(K, lo=-4, hi=4):
    return st.lists(st.integers(lo, hi), min_size=K, max_size=K).map(tuple)


# one PASS/FAIL line per acceptance criterion in the terminal summary
_criteria: dict[int, list[str]] = {}



def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    number = getattr(report, "criterion", None)
    if number is not None:
        _criteria.setdefault(number, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcomes = _criteria[number]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}")
