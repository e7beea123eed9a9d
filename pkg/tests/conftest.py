import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from valgebras.group_algebra import GroupAlgebraElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SEED = 20240611

coeff = st.integers(min_value=-5, max_value=5)
vectors = st.tuples(*[coeff] * 6).map(GroupAlgebraElement.of)
nonzero_vectors = vectors.filter(lambda v: not v.is_zero())
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def random_vectors(count=1000, seed=SEED):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = GroupAlgebraElement.of([rng.randint(-5, 5) for _ in range(6)])
        if not v.is_zero():
            out.append(v)
    return out


@pytest.fixture(scope="session")
def seeded_vectors():
    return random_vectors()


def frac(x):
    return Fraction(x)
