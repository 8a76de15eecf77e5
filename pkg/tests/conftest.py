from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hochsmash.catalog import catalog, catalog_group
from hochsmash.exactmath import CyclotomicNumber, euler_phi
from hochsmash.linalg import Matrix

ORDERS = (1, 2, 3, 4, 5, 6, 8, 12)

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclotomics(draw, m=None, nonzero=False):
    if m is None:
        m = draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(small_rationals, min_size=euler_phi(m), max_size=euler_phi(m)))
    x = CyclotomicNumber(m, coeffs)
    if nonzero and not x:
        x = x + 1
    return x


@st.composite
def matrices(draw, m, rows, cols=None):
    cols = rows if cols is None else cols
    entries = draw(st.lists(cyclotomics(m), min_size=rows * cols, max_size=rows * cols))
    return Matrix(rows, cols, entries, m)


def catalog_names():
    return [e.name for e in catalog()]


@pytest.fixture(params=catalog_names())
def catalog_entry(request):
    return next(e for e in catalog() if e.name == request.param)


@pytest.fixture
def group(catalog_entry):
    return catalog_group(catalog_entry.name)


def fr(x):
    return Fraction(int(x.numerator), int(x.denominator))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
