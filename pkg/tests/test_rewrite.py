import random

import pytest

from braidtk.braid_core import BraidError, BraidWord
from braidtk.rewrite import apply_rewrite, random_rewrite, random_word, rewrite_sites, selftest


def test_random_word():
    rng = random.Random(5)
    w = random_word(rng, 4, 20, positive=True)

    assert len(w) == 20
    assert w.is_positive()
    assert random_word(rng, 1, 10) == BraidWord(1)
    assert random_word(random.Random(9), 5, 12) == random_word(random.Random(9), 5, 12)


def test_rewrite_sites():
    assert rewrite_sites(BraidWord(4, [1, 3])) == [('commute', 0)]
    assert rewrite_sites(BraidWord(3, [1, 2, 1])) == [('braid', 0)]
    assert rewrite_sites(BraidWord(3, [-1, -2, -1])) == [('braid', 0)]
    assert rewrite_sites(BraidWord(3, [1, -2, 1])) == []
    assert rewrite_sites(BraidWord(4, [1, -3, 2])) == [('commute', 0)]


def test_apply_rewrite():
    assert apply_rewrite(BraidWord(4, [1, 3]), 'commute', 0) == BraidWord(4, [3, 1])
    assert apply_rewrite(BraidWord(3, [2, 1, 2, 2]), 'braid', 0) == BraidWord(3, [1, 2, 1, 2])
    assert apply_rewrite(BraidWord(3, [2]), 'cancel', 1) == BraidWord(3, [2, 1, -1])

    with pytest.raises(BraidError):
        apply_rewrite(BraidWord(3, [2]), 'flip', 0)


def test_random_rewrite__no_sites():
    w = BraidWord(3, [1, 1])
    assert random_rewrite(random.Random(0), w) == w
    assert len(random_rewrite(random.Random(0), w, allow_cancel=True)) == 4


def test_selftest():
    report = selftest(seed=3, trials=50)

    assert report['passed']
    assert report['seed'] == 3
    assert report['trials'] == 50
    assert report['failures'] == []


@pytest.mark.slow
def test_selftest__thousand_rewrites():
    report = selftest(seed=20190617, trials=1000)

    assert report['passed']
    assert report['trials'] == 1000
