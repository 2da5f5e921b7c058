from itertools import product

import pytest
from hypothesis import strategies as st

from finloc import corpus
from finloc.lattice import downset_lattice
from finloc.order import poset_from_pairs


@st.composite
def posets(draw, max_size=4):
    """Random posets: a random DAG on a fixed linear extension, closed up."""
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i, j in product(range(n), repeat=2) if i < j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    names = [f"p{i}" for i in range(n)]
    return poset_from_pairs(names, [(names[i], names[j]) for i, j in chosen])


@st.composite
def frames(draw, max_points=3):
    """Finite distributive lattices, realised as down-set lattices."""
    return downset_lattice(draw(posets(max_points)))


@pytest.fixture
def c2():
    return corpus.lattice("c2")


@pytest.fixture
def c3():
    return corpus.lattice("c3")


@pytest.fixture
def m2():
    return corpus.lattice("m2")
