import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vbraid.gauss import Arrow, BraidGaussDiagram
from vbraid.word import BraidWord, Letter, Permutation

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def letters(draw, n):
    i = draw(st.integers(1, n - 1))
    if draw(st.booleans()):
        return Letter("t", i)
    return Letter("s", i, draw(st.sampled_from((1, -1))))


@st.composite
def words(draw, min_n=2, max_n=6, max_len=20, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(draw(st.lists(letters(n), max_size=max_len))))


@st.composite
def word_pairs(draw, max_n=6, max_len=15):
    n = draw(st.integers(2, max_n))
    return draw(words(n=n, max_len=max_len)), draw(words(n=n, max_len=max_len))


@st.composite
def permutations(draw, n):
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def diagrams(draw, min_n=2, max_n=6, max_arrows=12, n=None, pure=False):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    arrows = []
    for _ in range(draw(st.integers(0, max_arrows))):
        i, j = draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
        arrows.append(Arrow(i, j, draw(st.sampled_from((1, -1)))))
    perm = Permutation.identity(n) if pure else draw(permutations(n))
    return BraidGaussDiagram(n, tuple(arrows), perm)


def linearizations(arrows):
    """Every reordering of ``arrows`` (as index tuples) that keeps the relative
    order of each pair of arrows sharing a strand.  Brute force; small inputs only."""
    k = len(arrows)
    for order in itertools.permutations(range(k)):
        pos = {idx: p for p, idx in enumerate(order)}
        if all(
            pos[a] < pos[b]
            for a in range(k)
            for b in range(a + 1, k)
            if set(arrows[a].strands) & set(arrows[b].strands)
        ):
            yield order


@pytest.fixture
def brute_linearizations():
    return linearizations
