import pytest
from hypothesis import given, seed, settings, strategies

from braidtk.braid_core import BraidWord, word_to_permutation, writhe
from braidtk.garside import equal_in_group, normal_form
from braidtk.invariants import burau_char_poly, reduced_burau
from braidtk.rewrite import apply_rewrite, rewrite_sites


@strategies.composite
def braid_words(draw, strands=None, max_length=10):
    n = strands or draw(strategies.integers(2, 5))
    generators = strategies.integers(1, n - 1)
    letters = draw(strategies.lists(
        strategies.tuples(generators, strategies.booleans()).map(lambda p: p[0] if p[1] else -p[0]),
        max_size=max_length))
    return BraidWord(n, letters)


def rewrite_steps(data, w, steps):
    for _ in range(steps):
        choices = rewrite_sites(w) + [('cancel', p) for p in range(len(w) + 1)]
        kind, position = data.draw(strategies.sampled_from(choices))
        w = apply_rewrite(w, kind, position)
    return w


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@seed(20190617)
@given(strategies.data())
def test_relations_keep_every_invariant(data):
    w = data.draw(braid_words())
    rewritten = rewrite_steps(data, w, data.draw(strategies.integers(1, 6)))

    assert word_to_permutation(rewritten) == word_to_permutation(w)
    assert writhe(rewritten) == writhe(w)
    assert normal_form(rewritten) == normal_form(w)
    assert reduced_burau(rewritten) == reduced_burau(w)


@pytest.mark.slow
@settings(max_examples=500, deadline=None)
@seed(20190617)
@given(strategies.data())
def test_char_poly_is_a_class_function(data):
    w = data.draw(braid_words(strands=4, max_length=8))
    u = data.draw(braid_words(strands=4, max_length=4))

    assert burau_char_poly(u.inverse() + w + u) == burau_char_poly(w)


@settings(max_examples=100, deadline=None)
@seed(20190617)
@given(strategies.data())
def test_normal_form_word_represents_the_braid(data):
    w = data.draw(braid_words())
    nf = normal_form(w)

    assert equal_in_group(nf.to_braid_word(), w)
    assert nf.is_left_weighted()
    assert normal_form(w + w.inverse()) == normal_form(BraidWord(w.strands))
