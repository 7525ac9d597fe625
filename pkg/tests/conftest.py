from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import strategies as st

from symwsne.game import BimatrixGame, MixedStrategy, StrategyProfile

RPS_R = [[F(1, 2), 0, 1], [1, F(1, 2), 0], [0, 1, F(1, 2)]]


@pytest.fixture
def rps():
    return BimatrixGame.symmetric(RPS_R)


@pytest.fixture
def coordination():
    return BimatrixGame([[1, 0], [0, 1]], [[1, 0], [0, 1]])


@pytest.fixture
def all_ones():
    return BimatrixGame.symmetric([[1, 1], [1, 1]])


@pytest.fixture
def all_zeros():
    return BimatrixGame.symmetric([[0, 0], [0, 0]])


@pytest.fixture
def high_diag():
    """Symmetric game with every entry above 1/2; no x keeps R x <= 1/2."""
    return BimatrixGame.symmetric([[F(9, 10), F(6, 10)], [F(6, 10), F(9, 10)]])


def e(n, i):
    return MixedStrategy.pure(n, i)


def uniform(n):
    return MixedStrategy.uniform(n)


# -- hypothesis strategies ----------------------------------------------------

payoff = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def games(draw, min_n=1, max_n=4, symmetric=False):
    n = draw(st.integers(min_n, max_n))
    R = [[draw(payoff) for _ in range(n)] for _ in range(n)]
    if symmetric:
        return BimatrixGame.symmetric(R)
    C = [[draw(payoff) for _ in range(n)] for _ in range(n)]
    return BimatrixGame(R, C)


@st.composite
def strategies_for(draw, n):
    w = draw(st.lists(st.integers(0, 6), min_size=n, max_size=n).filter(any))
    total = sum(w)
    return MixedStrategy(tuple(F(c, total) for c in w))


@st.composite
def game_and_profile(draw, symmetric=False, max_n=4):
    g = draw(games(max_n=max_n, symmetric=symmetric))
    return g, StrategyProfile(draw(strategies_for(g.n)), draw(strategies_for(g.n)))


# -- seeded random instances (numpy) ------------------------------------------

def random_fraction_matrix(rng, n, denom=12):
    return [[F(int(k), denom) for k in row] for row in rng.integers(0, denom + 1, (n, n))]


def random_strategy(rng, n):
    while True:
        w = rng.integers(0, 5, n)
        # Sparse supports exercise the support-dependent predicates.
        w = w * (rng.random(n) < 0.7)
        if w.sum():
            return MixedStrategy(tuple(F(int(c), int(w.sum())) for c in w))


def random_game(rng, n, symmetric=False):
    R = random_fraction_matrix(rng, n)
    if symmetric:
        return BimatrixGame.symmetric(R)
    return BimatrixGame(R, random_fraction_matrix(rng, n))


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240611)


# -- acceptance reporting -----------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    if report.failed or (report.when == "call" and report.passed):
        status = "FAIL" if report.failed else "PASS"
        if _CRITERIA.get(number, ("PASS",))[0] != "FAIL":
            notes = getattr(item, "criterion_notes", "")
            _CRITERIA[number] = (status, title, notes)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title, notes = _CRITERIA[number]
        line = f"criterion {number:>2}: {status}  {title}"
        if notes:
            line += f"  [{notes}]"
        terminalreporter.write_line(line)
