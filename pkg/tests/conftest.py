import random

import pytest
from hypothesis import strategies as st

from hermitepw.maya import MayaDiagram, Partition
from hermitepw.polys import IntPoly


def random_diagram(rng, max_girth=6, max_val=12):
    p = rng.randint(0, max_girth)
    q = rng.randint(0, max_girth - p)
    s = tuple(sorted(rng.sample(range(max_val), p), reverse=True))
    t = tuple(sorted(rng.sample(range(max_val), q), reverse=True))
    return MayaDiagram(s, t)


def random_partition(rng, max_size):
    n = rng.randint(0, max_size)
    parts = []
    while n > 0:
        p = rng.randint(1, n)
        parts.append(p)
        n -= p
    return Partition(tuple(sorted(parts, reverse=True)))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def frobenius_sides(max_len=4, max_val=10):
    return st.lists(st.integers(min_value=0, max_value=max_val),
                    max_size=max_len, unique=True).map(
        lambda vs: tuple(sorted(vs, reverse=True)))


diagrams = st.builds(MayaDiagram, frobenius_sides(), frobenius_sides())

int_polys = st.lists(st.integers(min_value=-50, max_value=50), max_size=6).map(IntPoly)

nonzero_polys = int_polys.filter(lambda p: not p.is_zero())

partitions = st.lists(st.integers(min_value=1, max_value=8), max_size=6).map(
    lambda vs: Partition(tuple(sorted(vs, reverse=True))))
