"""Each semantic lemma of the graph model, checked on the small universe."""
import pytest

from lemma_suite import LEMMAS, Universe


@pytest.fixture(scope="module")
def universe():
    return Universe()


def test_universe_shape(universe):
    assert len(universe.graphs) == 290
    assert len(universe.reps) == 20


@pytest.mark.parametrize("number", sorted(LEMMAS))
def test_lemma(universe, number):
    bad = LEMMAS[number](universe)
    assert not bad, f"lemma {number}: {bad[:5]}"
