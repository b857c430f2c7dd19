import pytest
from hypothesis import strategies as st

from qdyson.exactalg import QLaurent
from qdyson.xlaurent import XPoly

# criterion id -> (passed, detail); filled by test_acceptance
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")


small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def qlaurents(draw, max_terms=5, lo=-4, hi=6):
    terms = draw(st.dictionaries(st.integers(lo, hi), small_ints, max_size=max_terms))
    return QLaurent(terms)


@st.composite
def xpolys(draw, nvars=2, max_terms=4):
    keys = st.tuples(*[st.integers(-2, 2)] * nvars)
    terms = draw(st.dictionaries(keys, qlaurents(max_terms=3), max_size=max_terms))
    return XPoly(nvars, terms)


@pytest.fixture
def q():
    return QLaurent.monomial(1)
