import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from boolcert.ring import GaussianRational, MultilinearPoly, evaluate, parse
from boolcert.symmetry import PolySystem

GAUSSIAN_SMALL = [
    GaussianRational(1), GaussianRational(-1), GaussianRational(2), GaussianRational(-3),
    GaussianRational(0, 1), GaussianRational(1, -1), GaussianRational("1/2"), GaussianRational(0, "-2/3"),
]


def system(n, *texts):
    return PolySystem.of(n, [parse(t, n) for t in texts])


def cube(n):
    return list(itertools.product((0, 1), repeat=n))


def variety(f_sys):
    """Z(F) by direct evaluation, independent of the oracle module."""
    return {b for b in cube(f_sys.ambient_n) if all(not evaluate(f, b) for f in f_sys.polynomials)}


def random_poly(rng, n, max_terms):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = frozenset(j for j in range(n) if rng.random() < 0.5)
        terms[mono] = rng.choice(GAUSSIAN_SMALL)
    return MultilinearPoly(n, terms)


@pytest.fixture
def rng():
    return random.Random(20261014)


_small_fraction = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 6))
gaussian = st.builds(GaussianRational, _small_fraction, _small_fraction)


def polys(n, max_terms=6):
    mono = st.frozensets(st.integers(0, n - 1), max_size=n) if n else st.just(frozenset())
    return st.dictionaries(mono, gaussian, max_size=max_terms).map(lambda d: MultilinearPoly(n, d))
