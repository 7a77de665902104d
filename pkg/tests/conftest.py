import pytest
from hypothesis import strategies as st

from forest_patterns import FamilyTag, from_parents, gen_forests
from forest_patterns.forests import relabel


@pytest.fixture(scope="session")
def unordered_forests():
    """Cached exhaustive lists of unordered forests on [n]."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(gen_forests(n, FamilyTag.UNORDERED))
        return cache[n]

    return get


@pytest.fixture
def ten_vertex_increasing():
    # the increasing forest built from the word 3,6,8,4,1,10,2,9,7,5
    return from_parents(
        10, {3: 0, 6: 3, 8: 6, 4: 3, 1: 0, 10: 1, 2: 1, 9: 2, 7: 2, 5: 2}
    )


@pytest.fixture
def unimodal_twelve():
    # unimodal forest on [12] with top-down maxima {8, 9, 11, 12}
    return from_parents(
        12,
        {11: 0, 12: 11, 10: 11, 4: 10, 7: 10, 8: 0, 9: 8, 3: 8, 1: 8, 5: 9, 6: 9, 2: 6},
    )


@pytest.fixture
def fourteen_vertex_example():
    # three trees rooted 2, 6, 11; exactly seven top-down maxima
    return from_parents(
        14,
        {
            2: 0, 1: 2,
            6: 0, 3: 6, 4: 6, 9: 6, 7: 9, 5: 9, 8: 9,
            11: 0, 12: 11, 13: 11, 10: 12, 14: 12,
        },
    )


@st.composite
def forest_st(draw, max_n: int = 7):
    """Random unordered forest: random increasing shape, random relabeling.

    Every forest arises this way, since any shape admits an increasing
    labeling.
    """
    n = draw(st.integers(min_value=0, max_value=max_n))
    parents = {i: draw(st.integers(min_value=0, max_value=i - 1)) for i in range(1, n + 1)}
    perm = draw(st.permutations(list(range(1, n + 1))))
    mapping = {i + 1: perm[i] for i in range(n)}
    return relabel(from_parents(n, parents), mapping)
