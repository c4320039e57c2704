import itertools

import pytest
from hypothesis import settings, strategies as st

from ptabkit.duality import perf
from ptabkit.grid import validate
from ptabkit.words import standardize

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

_ = None


def grid(*rows):
    """Shorthand: grid("..13", "11..") with '.' for blanks and single-digit content."""
    return [[None if ch == "." else int(ch) for ch in row] for row in rows]


def ptab(*rows):
    return validate(grid(*rows))


@st.composite
def biwords(draw, max_k=10, max_m=5, max_n=5):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(1, m), st.integers(1, n)), max_size=max_k))
    return standardize(pairs), n


@st.composite
def ptableaux(draw, max_k=10, max_m=5, max_n=5):
    b, n = draw(biwords(max_k, max_m, max_n))
    return perf(b, n)


def all_biwords(m, n, max_k):
    """Every standard biword over [m] x [n] with at most max_k columns."""
    letters = [(t, w) for t in range(1, m + 1) for w in range(1, n + 1)]
    for k in range(max_k + 1):
        for combo in itertools.combinations_with_replacement(letters, k):
            yield standardize(combo)


@pytest.fixture
def running_T():
    return ptab("..134", "122..", "3344.")
